#include "radsub/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace radsub {

std::string coef_to_string(Coef x)
{
    if (x == 0) return "0";
    bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

// ---------------------------------------------------------------- partitions

std::vector<Parts> partitions(int n)
{
    std::vector<Parts> out;
    Parts cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

int Partition::size() const
{
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

int Partition::mult(int i) const
{
    return static_cast<int>(std::count(parts.begin(), parts.end(), i));
}

int Partition::a() const
{
    int n = 0;
    for (size_t j = 0; j < parts.size(); ++j)
        if (parts[j] % 2 == 1 && (j == 0 || parts[j - 1] != parts[j])) ++n;
    return n;
}

int Partition::kappa() const
{
    int k = 0;
    for (int x : parts)
        if (x % 2 == 1) k = std::max(k, mult(x));
    return k;
}

int Partition::b() const
{
    return a() > 0 ? a() - 1 : 0;
}

int Partition::delta() const
{
    int av = a();
    if (av == 0) return 1;
    return kappa() == 1 ? av : av - 1;
}

int Partition::iota() const
{
    for (int x : parts)
        if (x % 2 == 1 && mult(x) % 2 == 1) return 1;
    return 0;
}

std::vector<Partition> partitions_orth(int w)
{
    std::vector<Partition> out;
    for (auto& p : partitions(w)) {
        Partition lam{p};
        bool ok = true;
        for (int x : p)
            if (x % 2 == 0 && lam.mult(x) % 2 == 1) ok = false;
        if (ok) out.push_back(std::move(lam));
    }
    return out;
}

// ------------------------------------------------------------------- 2-cores

Parts staircase(int k)
{
    Parts s;
    for (int j = k; j >= 1; --j) s.push_back(j);
    return s;
}

std::vector<Parts> two_cores_upto(int n)
{
    std::vector<Parts> out;
    for (int k = 0; k * (k + 1) / 2 <= n; ++k) out.push_back(staircase(k));
    return out;
}

namespace {

Parts conjugate(const Parts& lam)
{
    Parts c;
    if (lam.empty()) return c;
    for (int j = 1; j <= lam[0]; ++j) {
        int n = 0;
        for (int x : lam)
            if (x >= j) ++n;
        c.push_back(n);
    }
    return c;
}

void trim(Parts& lam)
{
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
}

int size_of(const Parts& lam)
{
    int s = 0;
    for (int x : lam) s += x;
    return s;
}

// Beta numbers with L beads: lam_i + L - i for i = 1..L.
std::vector<int> beta_set(const Parts& lam, int L)
{
    std::vector<int> b;
    for (int i = 1; i <= L; ++i) {
        int li = i <= static_cast<int>(lam.size()) ? lam[i - 1] : 0;
        b.push_back(li + L - i);
    }
    return b;
}

Parts from_beta(std::vector<int> b)
{
    std::sort(b.rbegin(), b.rend());
    int L = static_cast<int>(b.size());
    Parts lam;
    for (int i = 1; i <= L; ++i) lam.push_back(b[i - 1] - (L - i));
    trim(lam);
    return lam;
}

int abacus_beads(int n)
{
    return 2 * n + 2;
}

}  // namespace

bool is_two_core(const Parts& lam)
{
    Parts c = conjugate(lam);
    for (size_t i = 0; i < lam.size(); ++i)
        for (int j = 0; j < lam[i]; ++j) {
            int hook = lam[i] - j + c[j] - static_cast<int>(i) - 1;
            if (hook == 2) return false;
        }
    return true;
}

TwoQuotient two_quotient(const Parts& lam)
{
    int L = abacus_beads(size_of(lam));
    std::vector<int> pos[2];
    for (int x : beta_set(lam, L)) pos[x % 2].push_back(x / 2);
    TwoQuotient tq;
    std::vector<int> core_beta;
    for (int r = 0; r < 2; ++r) {
        auto& ps = pos[r];
        std::sort(ps.rbegin(), ps.rend());
        int nr = static_cast<int>(ps.size());
        Parts mu;
        for (int j = 1; j <= nr; ++j) mu.push_back(ps[j - 1] - (nr - j));
        trim(mu);
        (r == 0 ? tq.q0 : tq.q1) = mu;
        for (int k = 0; k < nr; ++k) core_beta.push_back(2 * k + r);
    }
    tq.core = from_beta(core_beta);
    return tq;
}

Parts from_two_quotient(const TwoQuotient& tq)
{
    int n = size_of(tq.core) + 2 * (size_of(tq.q0) + size_of(tq.q1));
    int L = abacus_beads(n);
    int nr[2] = {0, 0};
    for (int x : beta_set(tq.core, L)) ++nr[x % 2];
    std::vector<int> beta;
    for (int r = 0; r < 2; ++r) {
        const Parts& mu = r == 0 ? tq.q0 : tq.q1;
        if (static_cast<int>(mu.size()) > nr[r]) throw std::logic_error("from_two_quotient: abacus too short");
        for (int j = 1; j <= nr[r]; ++j) {
            int mj = j <= static_cast<int>(mu.size()) ? mu[j - 1] : 0;
            beta.push_back(2 * (mj + nr[r] - j) + r);
        }
    }
    return from_beta(beta);
}

Parts two_core(const Parts& lam)
{
    return two_quotient(lam).core;
}

Parts two_core_by_stripping(const Parts& lam)
{
    Parts x = lam;
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < x.size() && !changed; ++i) {
            int next = i + 1 < x.size() ? x[i + 1] : 0;
            int next2 = i + 2 < x.size() ? x[i + 2] : 0;
            if (x[i] - next >= 2) {
                x[i] -= 2;
                changed = true;
            } else if (i + 1 < x.size() && x[i] == next && next > next2) {
                x[i] -= 1;
                x[i + 1] -= 1;
                changed = true;
            }
        }
        trim(x);
    }
    return x;
}

CoreTower core_tower(const Parts& lam)
{
    if (lam.empty()) return {};
    TwoQuotient tq = two_quotient(lam);
    CoreTower left = core_tower(tq.q0), right = core_tower(tq.q1);
    CoreTower t{{tq.core}};
    size_t depth = std::max(left.size(), right.size());
    for (size_t k = 0; k < depth; ++k) {
        size_t width = size_t{1} << k;
        std::vector<Parts> row;
        for (size_t j = 0; j < width; ++j) row.push_back(k < left.size() ? left[k][j] : Parts{});
        for (size_t j = 0; j < width; ++j) row.push_back(k < right.size() ? right[k][j] : Parts{});
        t.push_back(row);
    }
    return t;
}

Parts from_core_tower(const CoreTower& tower)
{
    if (tower.empty()) return {};
    CoreTower left, right;
    for (size_t k = 1; k < tower.size(); ++k) {
        size_t half = tower[k].size() / 2;
        left.emplace_back(tower[k].begin(), tower[k].begin() + half);
        right.emplace_back(tower[k].begin() + half, tower[k].end());
    }
    auto shrink = [](CoreTower& t) {
        while (!t.empty() && std::all_of(t.back().begin(), t.back().end(), [](const Parts& p) { return p.empty(); }))
            t.pop_back();
    };
    shrink(left);
    shrink(right);
    TwoQuotient tq{tower[0][0], from_core_tower(left), from_core_tower(right)};
    return from_two_quotient(tq);
}

// ------------------------------------------------------------------- PSeries

namespace {

Coef checked_add(Coef x, Coef y)
{
    Coef r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("PSeries: coefficient overflow");
    return r;
}

Coef checked_mul(Coef x, Coef y)
{
    Coef r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("PSeries: coefficient overflow");
    return r;
}

}  // namespace

PSeries::PSeries(int N) : c_(static_cast<size_t>(N) + 1, 0)
{
    if (N < 0) throw std::invalid_argument("PSeries: negative truncation");
}

PSeries PSeries::one(int N)
{
    return monomial(0, 1, N);
}

PSeries PSeries::monomial(int k, Coef c, int N)
{
    PSeries s(N);
    if (k >= 0 && k <= N) s.c_[k] = c;
    return s;
}

PSeries PSeries::operator+(const PSeries& o) const
{
    PSeries r(std::min(N(), o.N()));
    for (int k = 0; k <= r.N(); ++k) r.c_[k] = checked_add(c_[k], o.c_[k]);
    return r;
}

PSeries PSeries::operator-(const PSeries& o) const
{
    return *this + o.scaled(-1);
}

PSeries PSeries::operator*(const PSeries& o) const
{
    PSeries r(std::min(N(), o.N()));
    for (int i = 0; i <= r.N(); ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= r.N(); ++j)
            if (o.c_[j] != 0) r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(c_[i], o.c_[j]));
    }
    return r;
}

PSeries PSeries::scaled(Coef s) const
{
    PSeries r(N());
    for (int k = 0; k <= N(); ++k) r.c_[k] = checked_mul(c_[k], s);
    return r;
}

PSeries PSeries::divided(Coef d) const
{
    PSeries r(N());
    for (int k = 0; k <= N(); ++k) {
        if (c_[k] % d != 0) throw std::domain_error("PSeries::divided: inexact division");
        r.c_[k] = c_[k] / d;
    }
    return r;
}

PSeries PSeries::inverse() const
{
    Coef c0 = c_[0];
    if (c0 != 1 && c0 != -1) throw std::domain_error("PSeries::inverse: constant term is not a unit");
    PSeries r(N());
    r.c_[0] = c0;
    for (int k = 1; k <= N(); ++k) {
        Coef s = 0;
        for (int j = 1; j <= k; ++j)
            if (c_[j] != 0) s = checked_add(s, checked_mul(c_[j], r.c_[k - j]));
        r.c_[k] = checked_mul(-s, c0);
    }
    return r;
}

PSeries PSeries::subst_power(int k) const
{
    if (k < 1) throw std::invalid_argument("PSeries::subst_power: k must be positive");
    PSeries r(N());
    for (int j = 0; j * k <= N(); ++j) r.c_[j * k] = c_[j];
    return r;
}

PSeries PSeries::subst_neg() const
{
    PSeries r = *this;
    for (int k = 1; k <= N(); k += 2) r.c_[k] = -r.c_[k];
    return r;
}

// ------------------------------------------------------------- named series

namespace {

// 1 + s t^k
PSeries binom(int k, Coef s, int N)
{
    return PSeries::one(N) + PSeries::monomial(k, s, N);
}

// sum_{j >= 0} t^{jk}
PSeries geometric(int k, int N)
{
    PSeries r(N);
    for (int j = 0; j * k <= N; ++j) r.at(j * k) = 1;
    return r;
}

// 1 + s sum_{j >= 1} t^{jk}
PSeries geometric_tail(int k, Coef s, int N)
{
    PSeries r(N);
    r.at(0) = 1;
    for (int j = 1; j * k <= N; ++j) r.at(j * k) = s;
    return r;
}

PSeries product(int N, const std::function<PSeries(int)>& factor, int kmax)
{
    PSeries r = PSeries::one(N);
    for (int k = 1; k <= kmax; ++k) r = r * factor(k);
    return r;
}

// prod_k 1 / (1 - t^{dk}), written as the product of geometric sums.
PSeries euler_inv(int d, int N)
{
    return product(N, [&](int k) { return geometric(d * k, N); }, N / d + 1);
}

PSeries power(const PSeries& f, int e)
{
    PSeries r = PSeries::one(f.N());
    for (int j = 0; j < e; ++j) r = r * f;
    return r;
}

PSeries closed_form(const std::string& id, int N)
{
    auto inv = [&](int k, Coef s = -1) { return binom(k, s, N).inverse(); };
    int K = N + 1;
    if (id == "5.1")
        return product(N, [&](int k) { return power(binom(2 * k - 1, 1, N), 2) * inv(2 * k); }, K);
    if (id == "5.1-1" || id == "5.3-2" || id == "J-inv-1")
        return product(N, [&](int k) { return inv(4 * k); }, K);
    if (id == "5.3")
        return product(N, [&](int k) { return binom(k, 1, N) * inv(k) * power(binom(2 * k, 1, N).inverse(), 2); }, K);
    if (id == "5.4" || id == "5.5")
        return product(N, [&](int k) { return binom(2 * k - 1, 1, N) * inv(4 * k); }, K);
    if (id == "J-inv")
        return product(N, [&](int k) { return power(binom(2 * k, 1, N), 2) * inv(8 * k); }, K);
    if (id == "J-inv-2")
        return product(N, [&](int k) { return power(inv(4 * k - 2), 2) * inv(8 * k); }, K);
    throw std::invalid_argument("series_named: unknown id '" + id + "'");
}

void check_truncation(int N)
{
    if (N < 0 || N > 256) throw std::invalid_argument("series: truncation must lie in [0, 256]");
}

}  // namespace

const std::vector<std::string>& series_ids()
{
    static const std::vector<std::string> ids{"5.1", "5.1-1", "5.3", "5.3-2", "5.4", "5.5", "J-inv", "J-inv-1", "J-inv-2"};
    return ids;
}

PSeries series_named(const std::string& id, int N)
{
    check_truncation(N);
    return closed_form(id, N);
}

PSeries theta_series(ThetaArg arg, int N)
{
    PSeries th(N);
    for (int k = 1; k * (k - 1) / 2 <= N; ++k) th.at(k * (k - 1) / 2) = 1;
    switch (arg) {
    case ThetaArg::t: return th;
    case ThetaArg::neg_t: return th.subst_neg();
    case ThetaArg::t2: return th.subst_power(2);
    }
    return th;
}

PSeries theta_jacobi(int N)
{
    return product(N, [&](int k) { return binom(k, 1, N) * binom(2 * k, -1, N); }, N + 1);
}

PSeries series_expanded(const std::string& id, int N)
{
    check_truncation(N);
    PSeries th = theta_series(ThetaArg::t, N), th_neg = theta_series(ThetaArg::neg_t, N),
            th2 = theta_series(ThetaArg::t2, N);
    PSeries p4 = euler_inv(4, N), p8 = euler_inv(8, N);
    auto odd_factors = [&](const std::function<PSeries(int)>& f) {
        return product(N, [&](int k) { return f(2 * k - 1); }, N / 2 + 1);
    };
    if (id == "5.1") return odd_factors([&](int i) { return geometric_tail(i, 2, N); }) * p4;
    if (id == "5.1-1") return p4;
    if (id == "5.3") return power(p4, 4) * th * th * th2;
    if (id == "5.3-2") {
        PSeries even = (th + th_neg).divided(2), odd = (th - th_neg).divided(2);
        return power(p4, 4) * th2 * (even * even - odd * odd);
    }
    if (id == "5.4") return odd_factors([&](int i) { return binom(i, 1, N); }) * p4;
    if (id == "5.5") return p4 * p4 * th;
    if (id == "J-inv") {
        PSeries th2s = th2;
        return p4 * p4 * p8 * th2s * th2s;
    }
    if (id == "J-inv-1") return p4 * p4 * p8 * th2 * th_neg.subst_power(2);
    if (id == "J-inv-2") return odd_factors([&](int i) { return geometric_tail(2 * i, 2, N); }) * p4;
    throw std::invalid_argument("series_expanded: unknown id '" + id + "'");
}

// ------------------------------------------------------------------ counting

std::string to_string(UnipotentTag t)
{
    switch (t) {
    case UnipotentTag::O_plus: return "O+";
    case UnipotentTag::O_minus: return "O-";
    case UnipotentTag::SO_plus: return "SO+";
    case UnipotentTag::SO_minus: return "SO-";
    case UnipotentTag::Spin_plus: return "Spin+";
    case UnipotentTag::Spin_minus: return "Spin-";
    case UnipotentTag::J_plus: return "J+";
    case UnipotentTag::J_minus: return "J-";
    }
    return "?";
}

std::string to_string(WeightTag t)
{
    switch (t) {
    case WeightTag::O_plus: return "O+";
    case WeightTag::O_minus: return "O-";
    case WeightTag::SO_plus: return "SO+";
    case WeightTag::SO_minus: return "SO-";
    case WeightTag::Spin: return "Spin";
    case WeightTag::J_plus: return "J+";
    case WeightTag::J_minus: return "J-";
    }
    return "?";
}

namespace {

enum class Family { O, SO, Spin, J };

// Classes of the finite group inside C_lambda^F, per the splitting rules.
long long unipotent_classes(const Partition& lam, Family fam, bool ty_plus, bool w_odd)
{
    int a = lam.a();
    if (fam == Family::J) {
        for (int x : lam.parts)
            if (lam.mult(x) % 2 == 1) return 0;
    }
    if (a == 0) {
        if (!ty_plus) return 0;
        switch (fam) {
        case Family::O:
        case Family::J: return 1;
        case Family::SO: return 2;
        case Family::Spin: return 2 * (1LL << lam.delta());
        }
    }
    if (fam == Family::Spin && lam.kappa() == 1) return (1LL << lam.b()) + (w_odd ? 1 : 2);
    if (fam == Family::Spin) return 1LL << lam.delta();
    return 1LL << lam.b();
}

const std::vector<long long>& partition_counts()
{
    static const std::vector<long long> counts = [] {
        std::vector<long long> c;
        for (int n = 0; n <= 16; ++n) c.push_back(static_cast<long long>(partitions(n).size()));
        return c;
    }();
    return counts;
}

long long pcount(int n)
{
    const auto& c = partition_counts();
    if (n < 0 || n >= static_cast<int>(c.size())) throw std::out_of_range("census: partition size out of range");
    return c[n];
}

std::vector<int> core_sizes(int n)
{
    std::vector<int> s;
    for (const auto& c : two_cores_upto(n)) s.push_back(size_of(c));
    return s;
}

// Parity subgroup of (Z_2)^2 as a bitmask over t | t' << 1.
constexpr unsigned kZero = 0x1, kTen = 0x3, kOne = 0x5, kFull = 0xF;

unsigned span(unsigned x, unsigned y)
{
    unsigned r = x | y;
    if ((r & 0x2) && (r & 0x4)) r = kFull;
    return r;
}

int popcount4(unsigned m)
{
    return __builtin_popcount(m & 0xF);
}

void check_w(int w)
{
    if (w < 1) throw std::invalid_argument("census: w must be positive");
    if (w > 64) throw std::invalid_argument("census: w must be at most 64");
}

}  // namespace

long long count_unipotent(int w, UnipotentTag tag)
{
    check_w(w);
    Family fam = Family::O;
    bool plus = true;
    switch (tag) {
    case UnipotentTag::O_plus: break;
    case UnipotentTag::O_minus: plus = false; break;
    case UnipotentTag::SO_plus: fam = Family::SO; break;
    case UnipotentTag::SO_minus: fam = Family::SO; plus = false; break;
    case UnipotentTag::Spin_plus: fam = Family::Spin; break;
    case UnipotentTag::Spin_minus: fam = Family::Spin; plus = false; break;
    case UnipotentTag::J_plus: fam = Family::J; break;
    case UnipotentTag::J_minus: fam = Family::J; plus = false; break;
    }
    if (tag == UnipotentTag::Spin_minus && w % 4 != 2)
        throw std::invalid_argument("count_unipotent: Spin of type - with discriminant + needs w = 2 mod 4");
    long long total = 0;
    for (const auto& lam : partitions_orth(w)) total += unipotent_classes(lam, fam, plus, w % 2 == 1);
    return total;
}

long long count_principal_weights(int w, WeightTag tag)
{
    check_w(w);
    if (tag == WeightTag::J_plus || tag == WeightTag::J_minus) {
        // (l1, l2, l3, k1, k2): 4(|l1| + |l2|) + 8|l3| + 2(|k1| + |k2|) = w, disc = (-1)^{|k2|}
        int want = tag == WeightTag::J_plus ? 0 : 1;
        auto cs = core_sizes(w);
        long long total = 0;
        for (int n1 = 0; 4 * n1 <= w; ++n1)
            for (int n2 = 0; 4 * (n1 + n2) <= w; ++n2)
                for (int n3 = 0; 4 * (n1 + n2) + 8 * n3 <= w; ++n3) {
                    int rest = w - 4 * (n1 + n2) - 8 * n3;
                    for (int k1 : cs)
                        for (int k2 : cs)
                            if (2 * (k1 + k2) == rest && k2 % 2 == want) total += pcount(n1) * pcount(n2) * pcount(n3);
                }
        return total;
    }
    // (l1, l2, l3, l4, k+, k-, k): 4(|l1| + ... + |l4|) + |k+| + |k-| + 2|k| = w, disc = (-1)^{|k-|}.
    // The components carry the parities of the basic subgroups they count:
    // l1 -> 0, l2 -> (1,0), l3 -> (0,1), l4 -> (Z_2)^2, k+ -> (1,0), k- -> (0,1), k -> (Z_2)^2.
    bool plus = tag == WeightTag::O_plus || tag == WeightTag::SO_plus || tag == WeightTag::Spin;
    auto cs = core_sizes(w);
    long long total = 0;
    for (int n1 = 0; 4 * n1 <= w; ++n1)
        for (int n2 = 0; 4 * (n1 + n2) <= w; ++n2)
            for (int n3 = 0; 4 * (n1 + n2 + n3) <= w; ++n3)
                for (int n4 = 0; 4 * (n1 + n2 + n3 + n4) <= w; ++n4) {
                    int rest = w - 4 * (n1 + n2 + n3 + n4);
                    long long mult = pcount(n1) * pcount(n2) * pcount(n3) * pcount(n4);
                    for (int kp : cs)
                        for (int km : cs)
                            for (int k : cs) {
                                if (kp + km + 2 * k != rest) continue;
                                if ((km % 2 == 0) != plus) continue;
                                unsigned par = kZero;
                                if (n2 > 0 || kp > 0) par = span(par, kTen);
                                if (n3 > 0 || km > 0) par = span(par, kOne);
                                if (n4 > 0 || k > 0) par = kFull;
                                long long each = 1;
                                if (tag == WeightTag::SO_plus || tag == WeightTag::SO_minus) each = 2 / std::min(2, popcount4(par));
                                if (tag == WeightTag::Spin) each = 4 / popcount4(par);
                                total += mult * each;
                            }
                }
    return total;
}

long long count_spin_triples(int w)
{
    check_w(w);
    long long total = 0;
    for (int n1 = 0; 4 * n1 <= w; ++n1)
        for (int n2 = 0; 4 * (n1 + n2) <= w; ++n2)
            for (int k : core_sizes(w))
                if (4 * (n1 + n2) + k == w) total += pcount(n1) * pcount(n2);
    return total;
}

// -------------------------------------------------------------- verification

std::vector<IdentityRow> verify_identities(int w_max)
{
    if (w_max < 1 || w_max > 64) throw std::invalid_argument("verify_identities: w_max must lie in [1, 64]");
    int N = std::max(w_max, 64);
    std::map<std::string, PSeries> gf;
    for (const auto& id : series_ids()) gf.emplace(id, series_named(id, N));
    PSeries th = theta_series(ThetaArg::t, N), jac = theta_jacobi(N);

    std::vector<IdentityRow> rows;
    auto add = [&](int w, const std::string& tag, Coef g, Coef e) { rows.push_back({w, tag, g, e, g == e}); };
    using U = UnipotentTag;
    using W = WeightTag;
    for (int w = 1; w <= w_max; ++w) {
        Coef two = w % 2 == 0 ? 2 : 1;
        long long uop = count_unipotent(w, U::O_plus), uom = count_unipotent(w, U::O_minus);
        long long usp = count_unipotent(w, U::SO_plus), usm = count_unipotent(w, U::SO_minus);
        long long ugp = count_unipotent(w, U::Spin_plus);
        long long wop = count_principal_weights(w, W::O_plus), wom = count_principal_weights(w, W::O_minus);
        long long wsp = count_principal_weights(w, W::SO_plus), wsm = count_principal_weights(w, W::SO_minus);
        long long wg = count_principal_weights(w, W::Spin);
        long long ujp = count_unipotent(w, U::J_plus), ujm = count_unipotent(w, U::J_minus);
        long long wjp = count_principal_weights(w, W::J_plus), wjm = count_principal_weights(w, W::J_minus);

        add(w, "5.1", gf.at("5.1")[w], uop + uom);
        add(w, "5.1-1", gf.at("5.1-1")[w], uop - uom);
        add(w, "5.3", gf.at("5.3")[w], wop + wom);
        add(w, "5.3-2", gf.at("5.3-2")[w], wop - wom);
        add(w, "5.1-1:SO-O", w % 2 == 0 ? gf.at("5.1-1")[w] : 0, usp - uop);
        add(w, "5.1-1:SO-O,ty-", 0, usm - uom);
        add(w, "5.3-2:SO-O", w % 2 == 0 ? gf.at("5.1-1")[w] : 0, wsp - wop);
        add(w, "5.3-2:SO-O,disc-", 0, wsm - wom);
        add(w, "5.4", two * gf.at("5.4")[w], ugp - usp);
        if (w % 4 == 2) add(w, "5.4:ty-", two * gf.at("5.4")[w], count_unipotent(w, U::Spin_minus) - usm);
        add(w, "5.5", two * gf.at("5.5")[w], wg - wsp);
        add(w, "5.5:triples", gf.at("5.5")[w], count_spin_triples(w));
        add(w, "5.4=5.5", gf.at("5.4")[w], gf.at("5.5")[w]);
        add(w, "J-inv", gf.at("J-inv")[w], wjp + wjm);
        add(w, "J-inv-1", gf.at("J-inv-1")[w], wjp - wjm);
        add(w, "J-inv-2", gf.at("J-inv-2")[w], ujp + ujm);
        add(w, "J-inv-2:diff", gf.at("5.1-1")[w], ujp - ujm);
        add(w, "u=w:O+", uop, wop);
        add(w, "u=w:O-", uom, wom);
        add(w, "u=w:SO+", usp, wsp);
        add(w, "u=w:SO-", usm, wsm);
        add(w, "u=w:Spin", ugp, wg);
        add(w, "u=w:J+", ujp, wjp);
        add(w, "u=w:J-", ujm, wjm);
        add(w, "jacobi", jac[w], th[w]);
    }
    return rows;
}

std::string identities_csv(const std::vector<IdentityRow>& rows)
{
    std::ostringstream os;
    os << "w,tag,gf_value,enum_value,pass\n";
    for (const auto& r : rows)
        os << r.w << ',' << r.tag << ',' << coef_to_string(r.gf_value) << ',' << coef_to_string(r.enum_value) << ','
           << (r.pass ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace radsub
