#include "radsub/matgrp.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace radsub {

namespace {

uint64_t hash_bytes(const u8* d, size_t len)
{
    uint64_t h = 1469598103934665603ULL;
    for (size_t i = 0; i < len; ++i) {
        h ^= d[i];
        h *= 1099511628211ULL;
    }
    return h ^ (h >> 29);
}

}  // namespace

void mul_raw(const GF& F, int n, const u8* x, const u8* y, u8* out)
{
    for (int i = 0; i < n; ++i) {
        u8* zr = out + i * n;
        for (int j = 0; j < n; ++j) zr[j] = 0;
        for (int k = 0; k < n; ++k) {
            u8 xik = x[i * n + k];
            if (!xik) continue;
            const u8* mr = F.mul_row(xik);
            const u8* yr = y + k * n;
            for (int j = 0; j < n; ++j) zr[j] = F.add(zr[j], mr[yr[j]]);
        }
    }
}

GeneratedGroup::GeneratedGroup(GFPtr gf, int n) : gf_(std::move(gf)), n_(n), nn_(static_cast<size_t>(n) * n)
{
    rehash(64);
    insert(identity(n).a.data());
}

Mat GeneratedGroup::element(size_t i) const
{
    Mat m(n_, n_);
    std::copy(data(i), data(i) + nn_, m.a.begin());
    return m;
}

void GeneratedGroup::rehash(size_t slots)
{
    slots_.assign(slots, 0);
    for (size_t i = 0; i < count_; ++i) {
        size_t h = hash_bytes(data(i), nn_) & (slots - 1);
        while (slots_[h]) h = (h + 1) & (slots - 1);
        slots_[h] = static_cast<uint32_t>(i + 1);
    }
}

long GeneratedGroup::find(const u8* d) const
{
    if (slots_.empty()) return -1;
    size_t mask = slots_.size() - 1;
    size_t h = hash_bytes(d, nn_) & mask;
    while (slots_[h]) {
        size_t i = slots_[h] - 1;
        if (std::equal(d, d + nn_, data(i))) return static_cast<long>(i);
        h = (h + 1) & mask;
    }
    return -1;
}

std::pair<size_t, bool> GeneratedGroup::insert(const u8* d)
{
    long f = find(d);
    if (f >= 0) return {static_cast<size_t>(f), false};
    if (2 * (count_ + 1) > slots_.size()) rehash(slots_.size() * 2);
    arena_.insert(arena_.end(), d, d + nn_);
    ++count_;
    size_t mask = slots_.size() - 1;
    size_t h = hash_bytes(d, nn_) & mask;
    while (slots_[h]) h = (h + 1) & mask;
    slots_[h] = static_cast<uint32_t>(count_);
    return {count_ - 1, true};
}

bool GeneratedGroup::add_generator(const Mat& g, size_t cap)
{
    if (g.r != n_ || g.c != n_) throw std::invalid_argument("add_generator: size mismatch");
    if (det(*gf_, g) == 0) throw std::invalid_argument("add_generator: singular generator");
    gens_.push_back(g);
    if (contains(g)) return false;
    const GF& F = *gf_;
    std::vector<u8> buf(nn_);
    size_t old = count_;
    auto push = [&](const u8* d) {
        if (insert(d).second && count_ > cap) throw CapExceeded("closure exceeded cap of " + std::to_string(cap));
    };
    for (size_t i = 0; i < old; ++i) {
        mul_raw(F, n_, data(i), g.a.data(), buf.data());
        push(buf.data());
    }
    for (size_t j = old; j < count_; ++j)
        for (const auto& s : gens_) {
            mul_raw(F, n_, data(j), s.a.data(), buf.data());
            push(buf.data());
        }
    return true;
}

std::vector<Mat> GeneratedGroup::sorted_elements() const
{
    std::vector<Mat> v;
    v.reserve(count_);
    for (size_t i = 0; i < count_; ++i) v.push_back(element(i));
    std::sort(v.begin(), v.end());
    return v;
}

GeneratedGroup closure(const GFPtr& gf, int n, const std::vector<Mat>& gens, size_t cap)
{
    GeneratedGroup g(gf, n);
    for (const auto& x : gens) g.add_generator(x, cap);
    return g;
}

Ambient ambient_group(GroupKind kind, int n, i64 q, Variant variant, size_t cap)
{
    FormKind fk = form_kind_of(kind);
    if (fk != FormKind::orthogonal) variant = Variant::none;
    Ambient A{kind, standard_space(fk, n, q, variant), {}};
    const GF& F = *A.space.gf;
    i64 target = classical_order(kind, n, q, variant);
    if (static_cast<size_t>(target) > cap) throw CapExceeded("ambient group order " + std::to_string(target) + " exceeds cap");
    A.group = GeneratedGroup(A.space.gf, n);
    bool special = kind == GroupKind::SL || kind == GroupKind::SU;
    int Q = F.q();
    i64 nvec = ipow(Q, n);
    std::vector<u8> u(n), v(n);
    auto decode = [&](i64 code, std::vector<u8>& w) {
        for (int i = 0; i < n; ++i) {
            w[i] = static_cast<u8>(code % Q);
            code /= Q;
        }
    };
    for (i64 cu = 1; cu < nvec && static_cast<i64>(A.group.order()) < target; ++cu) {
        decode(cu, u);
        for (i64 cv = 1; cv < nvec && static_cast<i64>(A.group.order()) < target; ++cv) {
            decode(cv, v);
            Mat m = identity(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = F.add(m(i, j), F.mul(u[i], v[j]));
            u8 d = det(F, m);
            if (d == 0 || (special && d != 1)) continue;
            if (!is_isometry(m, A.space)) continue;
            if (A.group.contains(m)) continue;
            A.group.add_generator(m, cap);
        }
    }
    if (static_cast<i64>(A.group.order()) != target)
        throw std::logic_error("ambient_group: generated order " + std::to_string(A.group.order()) +
                               " differs from " + std::to_string(target));
    return A;
}

namespace {

/// Index arithmetic on a fully enumerated group.
class IndexGroup {
public:
    explicit IndexGroup(const GeneratedGroup& G) : G_(G), F_(G.gf()), n_(G.n()), buf_(G.n() * G.n()), buf2_(buf_.size()) {}

    size_t size() const { return G_.order(); }

    uint32_t mul(uint32_t a, uint32_t b)
    {
        mul_raw(F_, n_, G_.data(a), G_.data(b), buf_.data());
        long r = G_.find(buf_.data());
        if (r < 0) throw std::logic_error("IndexGroup: product outside the group");
        return static_cast<uint32_t>(r);
    }

    uint32_t inv(uint32_t a)
    {
        if (inv_.empty()) inv_.assign(size(), UINT32_MAX);
        if (inv_[a] == UINT32_MAX) {
            Mat m = inverse(F_, G_.element(a));
            long r = G_.find(m);
            if (r < 0) throw std::logic_error("IndexGroup: inverse outside the group");
            inv_[a] = static_cast<uint32_t>(r);
            inv_[r] = a;
        }
        return inv_[a];
    }

    /// g x g^{-1}
    uint32_t conj(uint32_t g, uint32_t x) { return mul(mul(g, x), inv(g)); }

    uint32_t pow(uint32_t a, i64 e)
    {
        uint32_t r = 0;
        for (i64 i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

    long find(const Mat& m) const { return G_.find(m); }
    const GeneratedGroup& group() const { return G_; }

    i64 elem_order(uint32_t a)
    {
        i64 k = 1;
        uint32_t x = a;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }

private:
    const GeneratedGroup& G_;
    const GF& F_;
    int n_;
    std::vector<u8> buf_, buf2_;
    std::vector<uint32_t> inv_;
};

/// A subgroup of an IndexGroup: membership flags, element list, generators.
struct SubIdx {
    std::vector<char> mem;
    std::vector<uint32_t> elems;
    std::vector<uint32_t> gens;

    explicit SubIdx(size_t n = 0) : mem(n, 0) {}
    void add(uint32_t x)
    {
        if (!mem[x]) {
            mem[x] = 1;
            elems.push_back(x);
        }
    }
};

SubIdx trivial_sub(size_t n)
{
    SubIdx s(n);
    s.add(0);
    return s;
}

/// Extends the closure by a new generator (right-multiplication BFS).
void sub_add_generator(IndexGroup& G, SubIdx& H, uint32_t g)
{
    H.gens.push_back(g);
    if (H.mem[g]) return;
    size_t old = H.elems.size();
    for (size_t i = 0; i < old; ++i) H.add(G.mul(H.elems[i], g));
    for (size_t j = old; j < H.elems.size(); ++j)
        for (uint32_t s : H.gens) H.add(G.mul(H.elems[j], s));
}

bool normalizes(IndexGroup& G, uint32_t y, const SubIdx& T)
{
    for (uint32_t t : T.gens)
        if (!T.mem[G.conj(y, t)]) return false;
    return true;
}

i64 p_part(i64 n, int p)
{
    i64 r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

/// Grows T (a p-subgroup inside `within`) to a Sylow p-subgroup of `within`.
void grow_to_sylow(IndexGroup& G, SubIdx& T, const std::vector<uint32_t>& within, int p)
{
    i64 target = p_part(static_cast<i64>(within.size()), p);
    while (static_cast<i64>(T.elems.size()) < target) {
        bool grown = false;
        for (uint32_t y : within) {
            if (T.mem[y]) continue;
            if (!T.mem[G.pow(y, p)]) continue;
            if (!normalizes(G, y, T)) continue;
            size_t base = T.elems.size();
            std::vector<uint32_t> coset(T.elems.begin(), T.elems.begin() + base);
            for (int j = 1; j < p; ++j) {
                for (auto& c : coset) c = G.mul(c, y);
                for (auto c : coset) T.add(c);
            }
            T.gens.push_back(y);
            grown = true;
            break;
        }
        if (!grown) throw std::logic_error("grow_to_sylow: no extending element found");
    }
}

/// Largest subgroup of T normalized by all of `gens`.
SubIdx core_under(IndexGroup& G, const SubIdx& T, const std::vector<uint32_t>& gens)
{
    std::vector<char> mem = T.mem;
    std::vector<uint32_t> cur = T.elems;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<uint32_t> next;
        for (uint32_t x : cur) {
            bool keep = true;
            for (uint32_t g : gens)
                if (!mem[G.conj(G.inv(g), x)]) {
                    keep = false;
                    break;
                }
            if (keep) next.push_back(x);
        }
        if (next.size() != cur.size()) {
            changed = true;
            std::fill(mem.begin(), mem.end(), 0);
            for (auto x : next) mem[x] = 1;
            cur = next;
        }
    }
    SubIdx C(G.size());
    for (auto x : cur) C.add(x);
    // generators: greedy
    SubIdx gen = trivial_sub(G.size());
    for (auto x : cur)
        if (!gen.mem[x]) sub_add_generator(G, gen, x);
    C.gens = gen.gens;
    return C;
}

std::vector<uint32_t> normalizer_idx(IndexGroup& G, const SubIdx& R)
{
    std::vector<uint32_t> N;
    for (uint32_t g = 0; g < G.size(); ++g)
        if (normalizes(G, g, R)) N.push_back(g);
    return N;
}

/// Greedy generating set of a subgroup given by its element list.
std::vector<uint32_t> generators_of(IndexGroup& G, const std::vector<uint32_t>& elems)
{
    SubIdx gen = trivial_sub(G.size());
    for (auto x : elems)
        if (!gen.mem[x]) sub_add_generator(G, gen, x);
    return gen.gens;
}

struct RadicalTest {
    bool radical = false;
    i64 normalizer_order = 0;
};

RadicalTest radical_test(IndexGroup& G, const SubIdx& R, int p)
{
    RadicalTest out;
    std::vector<uint32_t> N = normalizer_idx(G, R);
    out.normalizer_order = static_cast<i64>(N.size());
    i64 np = p_part(static_cast<i64>(N.size()), p);
    if (np == static_cast<i64>(R.elems.size())) {
        out.radical = true;
        return out;
    }
    SubIdx T = R;
    grow_to_sylow(G, T, N, p);
    SubIdx C = core_under(G, T, generators_of(G, N));
    out.radical = C.elems.size() == R.elems.size();
    return out;
}

SubIdx sub_from_group(IndexGroup& G, const GeneratedGroup& R)
{
    SubIdx s(G.size());
    for (size_t i = 0; i < R.order(); ++i) {
        long k = G.group().find(R.data(i));
        if (k < 0) throw std::invalid_argument("subgroup is not contained in the ambient group");
        s.add(static_cast<uint32_t>(k));
    }
    for (const auto& g : R.gens()) s.gens.push_back(static_cast<uint32_t>(G.find(g)));
    if (s.gens.empty()) s.gens = generators_of(G, s.elems);
    return s;
}

GeneratedGroup group_from_sub(const GeneratedGroup& ambient, const SubIdx& s)
{
    GeneratedGroup g(ambient.gf_ptr(), ambient.n());
    for (auto x : s.gens) g.add_generator(ambient.element(x));
    if (g.order() != s.elems.size()) throw std::logic_error("group_from_sub: generator set incomplete");
    return g;
}

}  // namespace

GeneratedGroup normalizer(const GeneratedGroup& ambient, const GeneratedGroup& R)
{
    IndexGroup G(ambient);
    SubIdx r = sub_from_group(G, R);
    auto N = normalizer_idx(G, r);
    SubIdx s(G.size());
    for (auto x : N) s.add(x);
    s.gens = generators_of(G, N);
    return group_from_sub(ambient, s);
}

GeneratedGroup centralizer(const GeneratedGroup& ambient, const GeneratedGroup& S)
{
    IndexGroup G(ambient);
    SubIdx r = sub_from_group(G, S);
    std::vector<uint32_t> C;
    for (uint32_t g = 0; g < G.size(); ++g) {
        bool ok = true;
        for (auto s : r.gens)
            if (G.mul(g, s) != G.mul(s, g)) {
                ok = false;
                break;
            }
        if (ok) C.push_back(g);
    }
    SubIdx s(G.size());
    for (auto x : C) s.add(x);
    s.gens = generators_of(G, C);
    return group_from_sub(ambient, s);
}

GeneratedGroup sylow_p(const GeneratedGroup& ambient, int p)
{
    IndexGroup G(ambient);
    std::vector<uint32_t> all(G.size());
    for (uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    SubIdx T = trivial_sub(G.size());
    grow_to_sylow(G, T, all, p);
    return group_from_sub(ambient, T);
}

GeneratedGroup core_p(const GeneratedGroup& group, int p)
{
    IndexGroup G(group);
    std::vector<uint32_t> all(G.size());
    for (uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    SubIdx T = trivial_sub(G.size());
    grow_to_sylow(G, T, all, p);
    std::vector<uint32_t> gens;
    for (const auto& g : group.gens()) gens.push_back(static_cast<uint32_t>(G.find(g)));
    SubIdx C = core_under(G, T, gens);
    return group_from_sub(group, C);
}

bool is_p_group(const GeneratedGroup& g, int p) { return p_part(static_cast<i64>(g.order()), p) == static_cast<i64>(g.order()); }

bool is_radical(const GeneratedGroup& ambient, const GeneratedGroup& R, int p)
{
    if (!is_p_group(R, p)) throw std::invalid_argument("is_radical: R is not a p-group");
    IndexGroup G(ambient);
    SubIdx r = sub_from_group(G, R);
    return radical_test(G, r, p).radical;
}

namespace {

using Bits = std::vector<uint64_t>;

struct BitsHash {
    size_t operator()(const Bits& b) const
    {
        return hash_bytes(reinterpret_cast<const u8*>(b.data()), b.size() * sizeof(uint64_t));
    }
};

/// Subgroup lattice of a p-group held as a local multiplication table.
class LocalPGroup {
public:
    LocalPGroup(IndexGroup& G, const SubIdx& S) : s_(S.elems.size()), elems_(S.elems)
    {
        std::unordered_map<uint32_t, int> loc;
        for (int i = 0; i < s_; ++i) loc[elems_[i]] = i;
        mt_.resize(static_cast<size_t>(s_) * s_);
        inv_.resize(s_);
        for (int i = 0; i < s_; ++i)
            for (int j = 0; j < s_; ++j) mt_[i * s_ + j] = loc.at(G.mul(elems_[i], elems_[j]));
        for (int i = 0; i < s_; ++i)
            for (int j = 0; j < s_; ++j)
                if (mt_[i * s_ + j] == identity_local()) inv_[i] = j;
        words_ = (s_ + 63) / 64;
    }

    int size() const { return s_; }
    int identity_local() const { return 0; }
    int mul(int a, int b) const { return mt_[a * s_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    uint32_t global(int a) const { return elems_[a]; }
    Bits empty() const { return Bits(words_, 0); }
    static bool test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }
    static void set(Bits& b, int i) { b[i >> 6] |= 1ULL << (i & 63); }

    Bits conj_bits(int g, const Bits& b) const
    {
        Bits r = empty();
        for (int i = 0; i < s_; ++i)
            if (test(b, i)) set(r, conj(g, i));
        return r;
    }

    Bits canonical(const Bits& b) const
    {
        Bits best = b;
        for (int g = 1; g < s_; ++g) {
            Bits c = conj_bits(g, b);
            if (c < best) best = c;
        }
        return best;
    }

private:
    int s_;
    std::vector<uint32_t> elems_;
    std::vector<int> mt_, inv_;
    int words_ = 0;
};

struct LocalSub {
    Bits bits;
    std::vector<int> elems;
    std::vector<int> gens;
};

LocalSub local_sub(const LocalPGroup& P, const Bits& b, int p)
{
    LocalSub s;
    s.bits = b;
    for (int i = 0; i < P.size(); ++i)
        if (LocalPGroup::test(b, i)) s.elems.push_back(i);
    // greedy generators by index-p steps is unnecessary here: use closure
    Bits gen = P.empty();
    std::vector<int> list{0};
    LocalPGroup::set(gen, 0);
    for (int x : s.elems) {
        if (LocalPGroup::test(gen, x)) continue;
        s.gens.push_back(x);
        size_t old = list.size();
        for (size_t i = 0; i < old; ++i) {
            int y = P.mul(list[i], x);
            if (!LocalPGroup::test(gen, y)) {
                LocalPGroup::set(gen, y);
                list.push_back(y);
            }
        }
        for (size_t j = old; j < list.size(); ++j)
            for (int g : s.gens) {
                int y = P.mul(list[j], g);
                if (!LocalPGroup::test(gen, y)) {
                    LocalPGroup::set(gen, y);
                    list.push_back(y);
                }
            }
    }
    (void)p;
    return s;
}

/// All subgroups of the p-group P that contain O, up to P-conjugacy.
std::vector<LocalSub> subgroup_classes(const LocalPGroup& P, const Bits& O, int p)
{
    std::vector<LocalSub> out;
    std::unordered_set<Bits, BitsHash> seen_raw, seen_canon;
    Bits c0 = P.canonical(O);
    seen_canon.insert(c0);
    seen_raw.insert(O);
    out.push_back(local_sub(P, c0, p));
    for (size_t qi = 0; qi < out.size(); ++qi) {
        const LocalSub H = out[qi];
        for (int x = 0; x < P.size(); ++x) {
            if (LocalPGroup::test(H.bits, x)) continue;
            int xp = 0;
            for (int j = 0; j < p; ++j) xp = P.mul(xp, x);
            if (!LocalPGroup::test(H.bits, xp)) continue;
            bool norm = true;
            for (int h : H.gens)
                if (!LocalPGroup::test(H.bits, P.conj(x, h))) {
                    norm = false;
                    break;
                }
            if (!norm) continue;
            Bits K = H.bits;
            std::vector<int> coset = H.elems;
            for (int j = 1; j < p; ++j) {
                for (auto& c : coset) c = P.mul(c, x);
                for (int c : coset) LocalPGroup::set(K, c);
            }
            if (!seen_raw.insert(K).second) continue;
            Bits c = P.canonical(K);
            if (!seen_canon.insert(c).second) continue;
            out.push_back(local_sub(P, c, p));
        }
    }
    return out;
}

struct Candidate {
    SubIdx sub;
    i64 normalizer_order;
    std::vector<std::pair<i64, int>> invariant;  // (element order, trace) multiset
    std::vector<std::vector<u8>> canon;
};

}  // namespace

std::vector<RadicalClass> enumerate_radical_classes(const GeneratedGroup& ambient, int p, size_t cap)
{
    if (ambient.order() > cap) throw CapExceeded("ambient group exceeds cap");
    IndexGroup G(ambient);
    std::vector<uint32_t> all(G.size());
    for (uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    SubIdx S = trivial_sub(G.size());
    grow_to_sylow(G, S, all, p);
    std::vector<uint32_t> ggens;
    for (const auto& g : ambient.gens()) ggens.push_back(static_cast<uint32_t>(G.find(g)));
    SubIdx O = core_under(G, S, ggens);

    // local copy of S with the identity at position 0
    std::sort(S.elems.begin(), S.elems.end());
    LocalPGroup P(G, S);
    Bits ob = P.empty();
    for (int i = 0; i < P.size(); ++i)
        if (O.mem[P.global(i)]) LocalPGroup::set(ob, i);
    auto classes = subgroup_classes(P, ob, p);

    std::vector<Candidate> radicals;
    for (const auto& ls : classes) {
        SubIdx R(G.size());
        for (int e : ls.elems) R.add(P.global(e));
        for (int g : ls.gens) R.gens.push_back(P.global(g));
        RadicalTest t = radical_test(G, R, p);
        if (!t.radical) continue;
        Candidate c{R, t.normalizer_order, {}, {}};
        for (auto x : R.elems) {
            Mat m = ambient.element(x);
            u8 tr = 0;
            for (int i = 0; i < m.r; ++i) tr = ambient.gf().add(tr, m(i, i));
            c.invariant.push_back({G.elem_order(x), tr});
        }
        std::sort(c.invariant.begin(), c.invariant.end());
        radicals.push_back(std::move(c));
    }

    // merge ambient-conjugate candidates
    std::vector<Candidate> reps;
    for (auto& c : radicals) {
        bool dup = false;
        for (auto& r : reps) {
            if (r.sub.elems.size() != c.sub.elems.size() || r.invariant != c.invariant) continue;
            for (uint32_t g = 0; g < G.size() && !dup; ++g) {
                bool ok = true;
                for (auto x : c.sub.gens)
                    if (!r.sub.mem[G.conj(g, x)]) {
                        ok = false;
                        break;
                    }
                if (ok) dup = true;
            }
            if (dup) break;
        }
        if (!dup) reps.push_back(std::move(c));
    }

    std::vector<RadicalClass> out;
    for (auto& r : reps) {
        for (auto x : r.sub.elems) r.canon.push_back(std::vector<u8>(ambient.data(x), ambient.data(x) + ambient.n() * ambient.n()));
        std::sort(r.canon.begin(), r.canon.end());
    }
    std::sort(reps.begin(), reps.end(), [](const Candidate& a, const Candidate& b) {
        if (a.sub.elems.size() != b.sub.elems.size()) return a.sub.elems.size() < b.sub.elems.size();
        return a.canon < b.canon;
    });
    for (auto& r : reps) {
        RadicalClass rc;
        rc.rep = group_from_sub(ambient, r.sub);
        rc.normalizer_order = r.normalizer_order;
        rc.class_size = static_cast<i64>(G.size()) / r.normalizer_order;
        out.push_back(std::move(rc));
    }
    return out;
}

namespace {

struct SSLevel {
    std::vector<u8> base;
    std::vector<Mat> gens;
    std::unordered_map<std::string, Mat> trans;      // point -> u with u*base = point
    std::unordered_map<std::string, Mat> trans_inv;
    std::vector<std::string> orbit;
};

std::string key(const std::vector<u8>& v) { return std::string(v.begin(), v.end()); }

class SchreierSims {
public:
    SchreierSims(const GF& F, int n) : F_(F), n_(n) {}

    void build(const std::vector<Mat>& gens)
    {
        Mat id = identity(n_);
        for (const auto& g : gens) {
            if (g == id) continue;
            ensure_base_moves(g);
            for (size_t l = 0; l < levels_.size() && fixes_prefix(g, l); ++l) levels_[l].gens.push_back(g);
        }
        for (size_t l = 0; l < levels_.size(); ++l) recompute_orbit(l);
        long i = static_cast<long>(levels_.size()) - 1;
        while (i >= 0) {
            bool restarted = false;
            SSLevel& L = levels_[i];
            for (size_t oi = 0; !restarted && oi < L.orbit.size(); ++oi) {
                const Mat u = L.trans.at(L.orbit[oi]);
                for (size_t gi = 0; !restarted && gi < L.gens.size(); ++gi) {
                    Mat xu = mat_mul(F_, L.gens[gi], u);
                    std::vector<u8> pt = mat_vec(F_, xu, L.base);
                    const Mat& upt = L.trans.at(key(pt));
                    if (xu == upt) continue;
                    Mat h = mat_mul(F_, levels_[i].trans_inv.at(key(pt)), xu);
                    auto [y, j] = strip(h, i + 1);
                    if (j < levels_.size() || y != id) {
                        if (j == levels_.size()) ensure_base_moves(y);
                        for (size_t l = i + 1; l <= j && l < levels_.size(); ++l) {
                            levels_[l].gens.push_back(y);
                            recompute_orbit(l);
                        }
                        i = static_cast<long>(std::min(j, levels_.size() - 1));
                        restarted = true;
                    }
                }
            }
            if (!restarted) --i;
        }
    }

    i64 order() const
    {
        i64 r = 1;
        for (const auto& L : levels_) {
            __int128 t = static_cast<__int128>(r) * static_cast<i64>(L.orbit.size());
            if (t > INT64_MAX) throw std::overflow_error("bsgs_order: order exceeds 64 bits");
            r = static_cast<i64>(t);
        }
        return r;
    }

private:
    bool fixes_prefix(const Mat& g, size_t l) const
    {
        for (size_t k = 0; k < l; ++k)
            if (mat_vec(F_, g, levels_[k].base) != levels_[k].base) return false;
        return true;
    }

    void ensure_base_moves(const Mat& g)
    {
        for (const auto& L : levels_)
            if (mat_vec(F_, g, L.base) != L.base) return;
        for (int j = 0; j < n_; ++j) {
            std::vector<u8> e(n_, 0);
            e[j] = 1;
            if (mat_vec(F_, g, e) != e) {
                bool used = false;
                for (const auto& L : levels_) used = used || L.base == e;
                if (used) continue;
                SSLevel L;
                L.base = e;
                levels_.push_back(L);
                recompute_orbit(levels_.size() - 1);
                return;
            }
        }
        throw std::logic_error("bsgs: non-identity element fixes every basis vector");
    }

    void recompute_orbit(size_t l)
    {
        SSLevel& L = levels_[l];
        if (L.orbit.empty()) {
            L.orbit.push_back(key(L.base));
            L.trans.emplace(key(L.base), identity(n_));
            L.trans_inv.emplace(key(L.base), identity(n_));
        }
        for (size_t k = 0; k < L.orbit.size(); ++k) {
            const Mat u = L.trans.at(L.orbit[k]);
            for (const auto& g : L.gens) {
                Mat gu = mat_mul(F_, g, u);
                std::vector<u8> pt = mat_vec(F_, gu, L.base);
                std::string kp = key(pt);
                if (L.trans.count(kp)) continue;
                L.trans.emplace(kp, gu);
                L.trans_inv.emplace(kp, inverse(F_, gu));
                L.orbit.push_back(kp);
            }
        }
    }

    std::pair<Mat, size_t> strip(Mat h, size_t from) const
    {
        for (size_t l = from; l < levels_.size(); ++l) {
            const SSLevel& L = levels_[l];
            std::string kp = key(mat_vec(F_, h, L.base));
            auto it = L.trans_inv.find(kp);
            if (it == L.trans_inv.end()) return {h, l};
            h = mat_mul(F_, it->second, h);
        }
        return {h, levels_.size()};
    }

    const GF& F_;
    int n_;
    std::vector<SSLevel> levels_;
};

}  // namespace

i64 bsgs_order(const GF& F, int n, const std::vector<Mat>& gens)
{
    SchreierSims ss(F, n);
    ss.build(gens);
    return ss.order();
}

std::string serialize_matrix(const SerializedMatrix& s)
{
    std::ostringstream os;
    os << "q=" << s.q << ";kind=" << to_string(s.kind) << ";n=" << s.n;
    if (s.variant != Variant::none) os << ";variant=" << (s.variant == Variant::plus ? "+" : "-");
    os << ";rows=" << mat_to_string(s.m);
    return os.str();
}

SerializedMatrix parse_matrix(const std::string& text)
{
    SerializedMatrix s;
    auto pos = text.find("rows=");
    if (pos == std::string::npos) throw std::invalid_argument("matrix text: missing rows");
    std::string head = text.substr(0, pos), rows = text.substr(pos + 5);
    std::map<std::string, std::string> kv;
    std::stringstream hs(head);
    std::string item;
    while (std::getline(hs, item, ';')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("matrix text: bad field '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    try {
        s.q = std::stoll(kv.at("q"));
        s.kind = parse_group_kind(kv.at("kind"));
        s.n = std::stoi(kv.at("n"));
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("matrix text: q, kind and n are required");
    }
    if (kv.count("variant")) {
        const auto& v = kv["variant"];
        if (v == "+") s.variant = Variant::plus;
        else if (v == "-") s.variant = Variant::minus;
        else throw std::invalid_argument("matrix text: variant must be + or -");
    } else if (s.kind == GroupKind::O) {
        s.variant = Variant::plus;
    }
    if (s.n < 1) throw std::invalid_argument("matrix text: n must be positive");
    s.m = Mat(s.n, s.n);
    i64 fq = (s.kind == GroupKind::GU || s.kind == GroupKind::SU) ? s.q * s.q : s.q;
    std::stringstream rs(rows);
    std::string row;
    int i = 0;
    while (std::getline(rs, row, ';')) {
        if (i >= s.n) throw std::invalid_argument("matrix text: too many rows");
        std::stringstream cs(row);
        std::string cell;
        int j = 0;
        while (std::getline(cs, cell, ',')) {
            if (j >= s.n) throw std::invalid_argument("matrix text: too many columns");
            long v = std::stol(cell);
            if (v < 0 || v >= fq) throw std::invalid_argument("matrix text: entry out of range");
            s.m(i, j++) = static_cast<u8>(v);
        }
        if (j != s.n) throw std::invalid_argument("matrix text: short row");
        ++i;
    }
    if (i != s.n) throw std::invalid_argument("matrix text: wrong number of rows");
    return s;
}

}  // namespace radsub
