#include "radsub/gfq.hpp"

#include <map>
#include <mutex>

namespace radsub {

bool is_prime(i64 n)
{
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<int, int> prime_power(i64 q)
{
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    i64 p = 2;
    while (q % p != 0) ++p;
    int k = 0;
    i64 r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1 || !is_prime(p)) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return {static_cast<int>(p), k};
}

int v_p(i64 n, int p)
{
    if (n == 0) throw std::invalid_argument("v_p(0)");
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

i64 ipow(i64 b, int e)
{
    i64 r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

namespace {

using Poly = std::vector<int>;  // low degree first, trimmed

int md(i64 x, int p)
{
    x %= p;
    return static_cast<int>(x < 0 ? x + p : x);
}

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p)
{
    i64 r = 1, b = a, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

Poly pmod(Poly a, const Poly& m, int p)
{
    trim(a);
    int dm = static_cast<int>(m.size()) - 1;
    int lead_inv = inv_mod(m.back(), p);
    while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        int c = static_cast<int>(static_cast<i64>(a.back()) * lead_inv % p);
        for (int i = 0; i <= dm; ++i) a[da - dm + i] = md(a[da - dm + i] - static_cast<i64>(c) * m[i], p);
        trim(a);
    }
    return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& m, int p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = md(r[i + j] + static_cast<i64>(a[i]) * b[j], p);
    return pmod(r, m, p);
}

Poly psub(Poly a, const Poly& b, int p)
{
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = md(a[i] - b[i], p);
    trim(a);
    return a;
}

Poly pgcd(Poly a, Poly b, int p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

/// x^(p^e) mod f
Poly xpow_frob(const Poly& f, int p, int e)
{
    Poly r = pmod({0, 1}, f, p);
    for (int i = 0; i < e; ++i) {
        Poly base = r, acc{1};
        for (int j = 0; j < p; ++j) acc = pmulmod(acc, base, f, p);
        r = acc;
    }
    return r;
}

}  // namespace

bool poly_irreducible(const std::vector<int>& f0, int p)
{
    Poly f = f0;
    trim(f);
    int k = static_cast<int>(f.size()) - 1;
    if (k < 1) return false;
    if (k == 1) return true;
    Poly x{0, 1};
    if (psub(xpow_frob(f, p, k), pmod(x, f, p), p).size() != 0) return false;
    for (int r = 2; r <= k; ++r) {
        if (k % r != 0 || !is_prime(r)) continue;
        Poly g = pgcd(f, psub(xpow_frob(f, p, k / r), pmod(x, f, p), p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

Field::Field(int p, int k) : p_(p), k_(k)
{
    if (!is_prime(p)) throw std::invalid_argument("field_make: p is not prime");
    if (k <= 0) throw std::invalid_argument("field_make: degree must be positive");
    q_ = ipow(p, k);
    pw_.resize(k + 1);
    pw_[0] = 1;
    for (int i = 1; i <= k; ++i) pw_[i] = pw_[i - 1] * p;
    // least monic irreducible: enumerate the lower coefficients in integer order
    for (i64 idx = 0; idx < q_; ++idx) {
        Poly f(k + 1, 0);
        i64 t = idx;
        for (int i = 0; i < k; ++i) {
            f[i] = static_cast<int>(t % p);
            t /= p;
        }
        f[k] = 1;
        if (poly_irreducible(f, p)) {
            mod_ = f;
            break;
        }
    }
    if (mod_.empty()) throw std::logic_error("no irreducible polynomial found");
}

std::vector<int> Field::coeffs(i64 a) const
{
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) {
        c[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    return c;
}

i64 Field::from_coeffs(const std::vector<int>& c) const
{
    i64 r = 0;
    for (int i = k_ - 1; i >= 0; --i) r = r * p_ + (i < static_cast<int>(c.size()) ? md(c[i], p_) : 0);
    return r;
}

i64 Field::from_int(i64 n) const { return md(n, p_); }

i64 Field::add(i64 a, i64 b) const
{
    if (k_ == 1) return (a + b) % p_;
    i64 r = 0;
    for (int i = 0; i < k_; ++i) {
        int d = static_cast<int>((a / pw_[i] + b / pw_[i]) % p_);
        r += d * pw_[i];
    }
    return r;
}

i64 Field::neg(i64 a) const
{
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    i64 r = 0;
    for (int i = 0; i < k_; ++i) {
        int d = static_cast<int>((a / pw_[i]) % p_);
        r += ((p_ - d) % p_) * pw_[i];
    }
    return r;
}

i64 Field::sub(i64 a, i64 b) const { return add(a, neg(b)); }

i64 Field::mul(i64 a, i64 b) const
{
    if (k_ == 1) return a * b % p_;
    std::vector<i64> r(2 * k_ - 1, 0);
    std::vector<int> ca = coeffs(a), cb = coeffs(b);
    for (int i = 0; i < k_; ++i) {
        if (!ca[i]) continue;
        for (int j = 0; j < k_; ++j) r[i + j] += static_cast<i64>(ca[i]) * cb[j];
    }
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        i64 c = r[d] % p_;
        if (c == 0) continue;
        // x^k = -(mod_0 + ... + mod_{k-1} x^{k-1})
        for (int i = 0; i < k_; ++i) r[d - k_ + i] -= c * mod_[i];
        r[d] = 0;
    }
    i64 out = 0;
    for (int i = k_ - 1; i >= 0; --i) out = out * p_ + md(r[i], p_);
    return out;
}

i64 Field::pow(i64 a, i64 e) const
{
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    i64 r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

i64 Field::inv(i64 a) const
{
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, q_ - 2);
}

i64 Field::mult_order(i64 a) const
{
    if (a == 0) throw std::domain_error("order of zero");
    i64 n = q_ - 1, ord = n;
    for (i64 d = 2; d * d <= n || d <= n; ++d) {
        if (d * d > n && d != n) {
            // remaining prime factor
        }
        if (n % d != 0) {
            if (d * d > n) break;
            continue;
        }
        while (n % d == 0) n /= d;
        while (ord % d == 0 && pow(a, ord / d) == 1) ord /= d;
    }
    if (n > 1)
        while (ord % n == 0 && pow(a, ord / n) == 1) ord /= n;
    return ord;
}

i64 Field::primitive() const
{
    if (prim_ >= 0) return prim_;
    for (i64 g = 1; g < q_; ++g)
        if (mult_order(g) == q_ - 1) {
            prim_ = g;
            return g;
        }
    throw std::logic_error("no primitive element");
}

FieldPtr field_make(int p, int k)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const Field>(p, k);
    cache[key] = f;
    return f;
}

FieldPtr field_of_order(i64 q)
{
    auto [p, k] = prime_power(q);
    return field_make(p, k);
}

SquareClass square_class(const Field& f, i64 x)
{
    if (f.p() == 2) throw std::invalid_argument("square_class: even characteristic");
    if (x == 0) return SquareClass::zero;
    return f.pow(x, (f.q() - 1) / 2) == 1 ? SquareClass::square : SquareClass::nonsquare;
}

SquareClass square_class(const FieldElement& x) { return square_class(*x.parent, x.v); }

Embedding::Embedding(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big))
{
    if (small_->p() != big_->p() || big_->k() % small_->k() != 0)
        throw std::invalid_argument("Embedding: no field embedding");
    root_ = -1;
    const auto& m = small_->modulus();
    for (i64 r = 0; r < big_->q(); ++r) {
        i64 acc = 0;
        for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
            acc = big_->add(big_->mul(acc, r), big_->from_int(m[i]));
        if (acc == 0) {
            root_ = r;
            break;
        }
    }
    if (root_ < 0) throw std::logic_error("Embedding: root not found");
    image_.resize(small_->q());
    for (i64 a = 0; a < small_->q(); ++a) {
        auto c = small_->coeffs(a);
        i64 acc = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            acc = big_->add(big_->mul(acc, root_), big_->from_int(c[i]));
        image_[a] = acc;
    }
}

i64 Embedding::operator()(i64 a) const { return image_.at(a); }

i64 Embedding::preimage(i64 b) const
{
    for (i64 a = 0; a < small_->q(); ++a)
        if (image_[a] == b) return a;
    return -1;
}

QParams q_params(i64 q)
{
    auto [p, k] = prime_power(q);
    (void)k;
    if (p == 2) throw std::invalid_argument("q_params: q must be odd");
    QParams r;
    r.q = q;
    r.p = 2;
    r.eps = ((q - 1) / 2) % 2 == 0 ? 1 : -1;
    r.a = v_p(q - r.eps, 2);
    r.e = 1;
    return r;
}

QParams q_params_oddp(i64 q, int p)
{
    if (!is_prime(p) || p == 2) throw std::invalid_argument("q_params_oddp: p must be an odd prime");
    if (q % p == 0) throw std::invalid_argument("q_params_oddp: p divides q");
    prime_power(q);
    QParams r;
    r.q = q;
    r.p = p;
    r.eps = 1;
    i64 t = q % p;
    int e = 1;
    while (t != 1) {
        t = t * (q % p) % p;
        ++e;
    }
    r.e = e;
    // (q^e - 1)_p computed with exact arithmetic modulo growing powers of p
    i64 qe_minus_1_mod = 0;
    (void)qe_minus_1_mod;
    int a = 0;
    i64 pk = p;
    while (true) {
        // q^e mod p^(a+1)
        i64 m = pk, acc = 1;
        for (int i = 0; i < e; ++i) acc = static_cast<i64>((static_cast<__int128>(acc) * (q % m)) % m);
        if (acc % m == 1 % m) {
            ++a;
            pk *= p;
        } else {
            break;
        }
    }
    r.a = a;
    return r;
}

std::pair<FieldElement, FieldElement> solve_sum_of_squares(const FieldElement& lambda, int eps, i64 q)
{
    FieldPtr fq = field_of_order(q);
    if (fq->p() == 2) throw std::invalid_argument("solve_sum_of_squares: q must be odd");
    if (lambda.parent->q() != q) throw std::invalid_argument("solve_sum_of_squares: lambda not in F_q");
    bool need_nonzero_b = lambda.parent->neg(1) == lambda.v;
    if (eps == 1) {
        for (i64 b = 0; b < q; ++b) {
            if (need_nonzero_b && b == 0) continue;
            for (i64 c = 0; c < q; ++c)
                if (fq->add(fq->mul(b, b), fq->mul(c, c)) == lambda.v) return {{fq, b}, {fq, c}};
        }
        throw std::logic_error("solve_sum_of_squares: no solution");
    }
    FieldPtr f2 = field_make(fq->p(), 2 * fq->k());
    Embedding emb(fq, f2);
    i64 lam = emb(lambda.v);
    std::vector<i64> cand;
    for (i64 x = 0; x < f2->q(); ++x)
        if (f2->pow(x, q) == f2->neg(x)) cand.push_back(x);
    for (i64 b : cand) {
        if (need_nonzero_b && b == 0) continue;
        for (i64 c : cand)
            if (f2->add(f2->mul(b, b), f2->mul(c, c)) == lam) return {{f2, b}, {f2, c}};
    }
    throw std::logic_error("solve_sum_of_squares: no solution");
}

}  // namespace radsub
