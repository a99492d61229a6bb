#include "radsub/basics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

namespace radsub {

namespace {

bool is_form_kind(GroupKind k) { return k == GroupKind::Sp || k == GroupKind::O; }
bool is_linear_kind(GroupKind k) { return k == GroupKind::GL || k == GroupKind::GU; }

/// Sign eps_G of the linear group: +1 for GL/SL, -1 for GU/SU.
int group_sign(GroupKind k) { return (k == GroupKind::GU || k == GroupKind::SU) ? -1 : 1; }

int two_a(i64 q) { return v_p(q * q - 1, 2) - 1; }

/// 4 | (q - eps_G): the cyclic group Z_alpha exists for every alpha.
bool z_applies(GroupKind k, i64 q) { return (q - group_sign(k)) % 4 == 0; }


int ilog(int n, int p)
{
    int l = 0;
    while (n >= p) {
        n /= p;
        ++l;
    }
    return l;
}

u8 u(i64 x) { return static_cast<u8>(x); }

/// A group given by generators on a space with an optional Gram matrix.
struct Rep {
    GFPtr gf;
    int n = 0;
    Mat gram;  ///< empty for GL
    std::vector<Mat> gens;
};

Rep rep_tensor(const Rep& A, const Rep& B)
{
    const GF& F = *A.gf;
    Rep r;
    r.gf = A.gf;
    r.n = A.n * B.n;
    if (A.gram.r && B.gram.r) r.gram = kron(F, A.gram, B.gram);
    Mat IA = identity(A.n), IB = identity(B.n);
    for (const auto& g : A.gens) r.gens.push_back(kron(F, g, IB));
    for (const auto& g : B.gens) r.gens.push_back(kron(F, IA, g));
    return r;
}

Rep rep_mfold(const Rep& R, int m)
{
    if (m == 1) return R;
    const GF& F = *R.gf;
    Rep r;
    r.gf = R.gf;
    r.n = R.n * m;
    Mat Im = identity(m);
    if (R.gram.r) r.gram = kron(F, Im, R.gram);
    for (const auto& g : R.gens) r.gens.push_back(kron(F, Im, g));
    return r;
}

/// R wr A_cj with A_cj elementary abelian of order p^cj acting regularly.
Rep rep_wreath_level(const Rep& R, int cj, int p)
{
    const GF& F = *R.gf;
    int N = static_cast<int>(ipow(p, cj));
    Rep r;
    r.gf = R.gf;
    r.n = R.n * N;
    Mat IN = identity(N);
    if (R.gram.r) r.gram = kron(F, IN, R.gram);
    for (const auto& g : R.gens) {
        std::vector<Mat> blocks(N, identity(R.n));
        blocks[0] = g;
        r.gens.push_back(block_diag(blocks));
    }
    Mat Id = identity(R.n);
    i64 step = 1;
    for (int d = 0; d < cj; ++d, step *= p) {
        Mat P(N, N);
        for (int x = 0; x < N; ++x) {
            int digit = static_cast<int>((x / step) % p);
            int y = static_cast<int>(x + ((digit + 1) % p - digit) * step);
            P(y, x) = 1;
        }
        r.gens.push_back(kron(F, P, Id));
    }
    return r;
}

Rep rep_wreath(Rep R, const std::vector<int>& c, int p)
{
    for (auto it = c.rbegin(); it != c.rend(); ++it) R = rep_wreath_level(R, *it, p);
    return R;
}

/// Least element of order 2^v_2(q - eps) in F_q (eps = +1) or in the norm-one
/// subgroup of F_{q^2} (eps = -1); it generates GL_1(eps q)_2.
i64 delta0(i64 q, int eps)
{
    FieldPtr F = field_of_order(eps == 1 ? q : q * q);
    i64 ord = i64{1} << v_p(q - eps, 2);
    for (i64 x = 1; x < F->q(); ++x) {
        if (eps == -1 && F->pow(x, q + 1) != 1) continue;
        if (F->mult_order(x) == ord) return x;
    }
    throw std::logic_error("delta0: no generator found");
}

/// Companion matrix over F_s of the minimal polynomial of an element of
/// multiplicative order `ord` in F_{s^d} (the element has degree d over F_s).
Mat companion_of_order(i64 s, int d, i64 ord)
{
    auto [p, k] = prime_power(s);
    FieldPtr small = field_of_order(s);
    FieldPtr big = field_make(p, k * d);
    i64 Q = big->q();
    if ((Q - 1) % ord) throw std::logic_error("companion_of_order: order does not divide Q - 1");
    i64 z = big->pow(big->primitive(), (Q - 1) / ord);
    std::vector<i64> poly{1};
    i64 w = z;
    for (int i = 0; i < d; ++i) {
        std::vector<i64> next(poly.size() + 1, 0);
        for (size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] = big->add(next[j + 1], poly[j]);
            next[j] = big->sub(next[j], big->mul(poly[j], w));
        }
        poly = next;
        w = big->pow(w, s);
    }
    if (w != z) throw std::logic_error("companion_of_order: element lies in a proper subfield");
    Embedding emb(small, big);
    Mat C(d, d);
    for (int i = 0; i + 1 < d; ++i) C(i + 1, i) = 1;
    for (int i = 0; i < d; ++i) {
        i64 c = emb.preimage(poly[i]);
        if (c < 0) throw std::logic_error("companion_of_order: coefficient outside the base field");
        C(i, d - 1) = u(small->neg(c));
    }
    return C;
}

/// k x k shift with delta in the corner: e_i -> e_{i+1}, e_k -> delta e_1.
Mat delta_shift(int k, u8 delta)
{
    Mat x(k, k);
    for (int i = 0; i + 1 < k; ++i) x(i + 1, i) = 1;
    x(0, k - 1) = delta;
    return x;
}

Mat reversal(int k)
{
    Mat J(k, k);
    for (int i = 0; i < k; ++i) J(k - 1 - i, i) = 1;
    return J;
}

/// Cyclic Sylow 2-subgroup of GL_1((eps q)^{2^alpha}) inside GL_{2^alpha}(eps q).
/// For eps = -1 the result is unitary for `gram`.
Rep cyclic_rep(i64 q, int eps, int alpha)
{
    Rep r;
    r.gf = gf_make(eps == 1 ? q : q * q);
    const GF& F = *r.gf;
    int k = 1 << alpha;
    r.n = k;
    if ((q - eps) % 4 == 0) {
        r.gens.push_back(delta_shift(k, u(delta0(q, eps))));
        if (eps == -1) r.gram = identity(k);
    } else if (alpha == 0) {
        r.gens.push_back(scalar(1, F.neg(1)));
        if (eps == -1) r.gram = identity(1);
    } else {
        i64 ord = i64{1} << (two_a(q) + alpha);
        if (eps == 1) {
            r.gens.push_back(companion_of_order(q, k, ord));
        } else {
            int h = k / 2;
            Mat C = companion_of_order(q * q, h, ord);
            Mat Cd = inverse(F, transpose(conj(F, C)));
            r.gens.push_back(block_diag({C, Cd}));
            Mat H(k, k);
            for (int i = 0; i < h; ++i) H(i, h + i) = H(h + i, i) = 1;
            r.gram = H;
        }
    }
    return r;
}

/// The semidihedral group S = GL_2(eps q)_2 for 4 | (q + eps).
Rep semidihedral_rep(i64 q, int eps)
{
    Rep r;
    r.gf = gf_make(eps == 1 ? q : q * q);
    const GF& F = *r.gf;
    r.n = 2;
    i64 ord = i64{1} << (two_a(q) + 1);
    if (eps == 1) {
        Mat C = companion_of_order(q, 2, ord);
        Mat Cq = mat_pow(F, C, q);
        Mat Phi(2, 2);
        Phi(0, 0) = 1;
        Phi(0, 1) = Cq(0, 0);
        Phi(1, 1) = Cq(1, 0);
        r.gens = {C, Phi};
    } else {
        FieldPtr F2 = F.field();
        i64 z = F2->pow(F2->primitive(), (F2->q() - 1) / ord);
        Mat X(2, 2);
        X(0, 0) = u(z);
        X(1, 1) = u(F2->inv(F2->pow(z, q)));
        Mat S(2, 2);
        S(0, 1) = S(1, 0) = 1;
        r.gens = {X, S};
        r.gram = S;
    }
    return r;
}

Rep extraspecial_rep(int eta, int gamma, i64 q, int eps)
{
    Rep r;
    r.gf = gf_make(eps == 1 ? q : q * q);
    r.n = 1 << gamma;
    r.gens = build_extraspecial(eta, gamma, q, eps);
    if (eps == -1) r.gram = identity(r.n);
    return r;
}

/// Restriction of scalars GL_k(eps q) -> I(W), dim W = 2k, where W is
/// orthogonal (s = +1) or symplectic (s = -1).  Also provides the
/// semilinear involution tau with tau X^ tau^{-1} = (X^{-T})^ for X unitary.
struct GlEmbedding {
    i64 q;
    int eps, s, k;
    GFPtr small, big;  ///< F_q, and F_{q^2} when eps = -1
    Mat gram, tau;
    std::vector<std::array<u8, 2>> coord;  ///< eps = -1: z = u + v theta
    std::vector<i64> beta;                 ///< {1, theta} as F_{q^2} codes

    GlEmbedding(i64 q_, int s_, int k_) : q(q_), eps(q_params(q_).eps), s(s_), k(k_)
    {
        small = gf_make(q);
        const GF& F = *small;
        int n = 2 * k;
        if (eps == 1) {
            gram = Mat(n, n);
            tau = Mat(n, n);
            for (int i = 0; i < k; ++i) {
                gram(i, k + i) = tau(i, k + i) = 1;
                gram(k + i, i) = tau(k + i, i) = (s == 1) ? u8{1} : F.neg(1);
            }
            return;
        }
        big = gf_make(q * q);
        FieldPtr fs = field_of_order(q), fb = field_of_order(q * q);
        Embedding emb(fs, fb);
        i64 theta = -1;
        for (i64 z = 0; z < fb->q() && theta < 0; ++z)
            if (emb.preimage(z) < 0) theta = z;
        beta = {1, theta};
        coord.assign(fb->q(), {0, 0});
        for (i64 a = 0; a < q; ++a)
            for (i64 b = 0; b < q; ++b) coord[fb->add(emb(a), fb->mul(emb(b), theta))] = {u(a), u(b)};
        auto tr = [&](i64 z) { return coord[fb->add(z, fb->pow(z, q))][0]; };
        i64 t = (s == 1) ? 1 : fb->sub(theta, fb->pow(theta, q));
        gram = Mat(n, n);
        for (int i = 0; i < k; ++i)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    gram(2 * i + a, 2 * i + b) = tr(fb->mul(fb->mul(t, beta[a]), fb->pow(beta[b], q)));
        i64 c = 1;
        if (s == -1) {
            for (c = 1; c < fb->q(); ++c)
                if (fb->pow(c, q + 1) == fb->neg(1)) break;
        }
        tau = Mat(n, n);
        for (int i = 0; i < k; ++i)
            for (int b = 0; b < 2; ++b) {
                auto v = coord[fb->mul(c, fb->pow(beta[b], q))];
                tau(2 * i, 2 * i + b) = v[0];
                tau(2 * i + 1, 2 * i + b) = v[1];
            }
    }

    Mat lift(const Mat& X) const
    {
        int n = 2 * k;
        Mat Y(n, n);
        if (eps == 1) {
            Mat Xd = inverse(*small, transpose(X));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    Y(i, j) = X(i, j);
                    Y(k + i, k + j) = Xd(i, j);
                }
            return Y;
        }
        const Field& fb = *big->field();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                for (int b = 0; b < 2; ++b) {
                    auto v = coord[fb.mul(X(i, j), beta[b])];
                    Y(2 * i, 2 * j + b) = v[0];
                    Y(2 * i + 1, 2 * j + b) = v[1];
                }
        return Y;
    }
};

/// P_i (i = 1..4) on W of dimension 2 * 2^alpha (4 * 2^alpha for i = 3).
Rep p_family(int i, int alpha, i64 q, int s)
{
    int eps = q_params(q).eps;
    int k = 1 << alpha;
    GFPtr gk = gf_make(eps == 1 ? q : q * q);
    const GF& Fk = *gk;
    u8 d0 = u(delta0(q, eps));
    Mat x = delta_shift(k, d0);
    Rep r;
    r.gf = gf_make(q);
    const GF& F = *r.gf;
    if (i == 3) {
        GlEmbedding E(q, s, 2 * k);
        Mat J2(2, 2);
        J2(0, 1) = 1;
        J2(1, 0) = Fk.neg(1);
        Mat y = kron(Fk, reversal(k), J2);
        r.n = 4 * k;
        r.gram = E.gram;
        r.gens = {E.lift(kron(Fk, x, identity(2))), mat_mul(F, E.lift(y), E.tau)};
        return r;
    }
    GlEmbedding E(q, s, k);
    r.n = 2 * k;
    r.gram = E.gram;
    r.gens = {E.lift(x)};
    if (i == 4) r.gens.push_back(mat_mul(F, E.lift(reversal(k)), E.tau));
    if (i == 2) {
        Mat DJ = reversal(k);
        for (int j = 1; j < k; j += 2)
            for (int c = 0; c < k; ++c) DJ(j, c) = Fk.neg(DJ(j, c));
        r.gens.push_back(mat_mul(F, E.lift(DJ), E.tau));
    }
    return r;
}

Mat sp_gram(const GF& F, int n)
{
    Mat G(n, n);
    int h = n / 2;
    for (int i = 0; i < h; ++i) {
        G(i, h + i) = 1;
        G(h + i, i) = F.neg(1);
    }
    return G;
}

Mat orth_gram(const GF& F, int n, int disc)
{
    Mat G = identity(n);
    if (disc == -1) G(n - 1, n - 1) = u(F.field()->primitive());
    return G;
}

/// E_eta^{2 gamma + 1} over F_q on a space with orthogonal (eta = +) or
/// alternating (eta = -) Gram matrix.
Rep extraspecial_form_rep(int eta, int gamma, i64 q)
{
    Rep r;
    r.gf = gf_make(q);
    const GF& F = *r.gf;
    r.n = 1 << gamma;
    r.gens = build_extraspecial(eta, gamma, q, 1);
    if (eta == 1) {
        r.gram = identity(r.n);
    } else {
        Mat J2(2, 2);
        J2(0, 1) = 1;
        J2(1, 0) = F.neg(1);
        r.gram = kron(F, identity(r.n / 2), J2);
    }
    return r;
}

Rep space_only(const GFPtr& gf, const Mat& gram)
{
    Rep r;
    r.gf = gf;
    r.n = gram.r;
    r.gram = gram;
    return r;
}

Rep basic_rep_form(const BasicLabel& b, i64 q)
{
    int s = b.kind == GroupKind::O ? 1 : -1;
    GFPtr gf = gf_make(q);
    const GF& F = *gf;
    Rep R;
    if (b.i == 0) {
        int wdisc = b.alpha == 1 ? -1 : 1;
        if (b.gamma == 0) {
            Mat G = b.kind == GroupKind::O ? orth_gram(F, b.m, wdisc) : sp_gram(F, b.m);
            R = space_only(gf, G);
            R.gens.push_back(scalar(b.m, F.neg(1)));
        } else if (b.kind == GroupKind::O && b.eta == 1) {
            R = rep_tensor(space_only(gf, orth_gram(F, b.m, wdisc)), extraspecial_form_rep(1, b.gamma, q));
        } else if (b.kind == GroupKind::O) {
            R = rep_tensor(extraspecial_form_rep(-1, b.gamma, q), space_only(gf, sp_gram(F, 2 * b.m)));
        } else if (b.eta == 1) {
            R = rep_tensor(extraspecial_form_rep(1, b.gamma, q), space_only(gf, sp_gram(F, 2 * b.m)));
        } else {
            R = rep_tensor(extraspecial_form_rep(-1, b.gamma, q), space_only(gf, orth_gram(F, b.m, wdisc)));
        }
    } else {
        R = p_family(b.i, b.alpha, q, s);
        if (b.gamma > 0) R = rep_tensor(R, extraspecial_form_rep(1, b.gamma, q));
        R = rep_mfold(R, b.m);
    }
    return rep_wreath(R, b.c, 2);
}

Rep basic_rep_linear(const BasicLabel& b, i64 q)
{
    int eps = group_sign(b.kind);
    if (b.p != 2) {
        QParams qp = q_params_oddp(q, b.p);
        Rep R;
        R.gf = gf_make(q);
        const GF& F = *R.gf;
        i64 ord = ipow(b.p, qp.a + b.alpha);
        int d = qp.e * static_cast<int>(ipow(b.p, b.alpha));
        R.n = d;
        if (d == 1) {
            FieldPtr f = F.field();
            R.gens.push_back(scalar(1, u(f->pow(f->primitive(), (q - 1) / ord))));
        } else {
            R.gens.push_back(companion_of_order(q, d, ord));
        }
        if (b.gamma > 0) {
            if (qp.e != 1) throw std::invalid_argument("build_basic: extraspecial part needs e = 1");
            FieldPtr f = F.field();
            u8 w = u(f->pow(f->primitive(), (q - 1) / b.p));
            Mat x(b.p, b.p), y(b.p, b.p);
            for (int j = 0; j < b.p; ++j) {
                x(j, j) = u(f->pow(w, j));
                y((j + 1) % b.p, j) = 1;
            }
            Rep E;
            E.gf = R.gf;
            E.n = static_cast<int>(ipow(b.p, b.gamma));
            for (int j = 0; j < b.gamma; ++j) {
                Mat L = identity(static_cast<int>(ipow(b.p, j)));
                Mat Rr = identity(static_cast<int>(ipow(b.p, b.gamma - 1 - j)));
                E.gens.push_back(kron(F, kron(F, L, x), Rr));
                E.gens.push_back(kron(F, kron(F, L, y), Rr));
            }
            R = rep_tensor(E, R);
        }
        R = rep_mfold(R, b.m);
        return rep_wreath(R, b.c, b.p);
    }
    Rep R;
    if (b.i == 2) {
        R = semidihedral_rep(q, eps);
        if (b.gamma >= 2) R = rep_tensor(extraspecial_rep(1, b.gamma - 1, q, eps), R);
    } else if (z_applies(b.kind, q) || b.alpha > 0) {
        R = cyclic_rep(q, eps, b.alpha);
        if (b.gamma > 0) R = rep_tensor(extraspecial_rep(1, b.gamma, q, eps), R);
    } else if (b.gamma == 0) {
        R = cyclic_rep(q, eps, 0);
    } else {
        R = extraspecial_rep(b.eta, b.gamma, q, eps);
    }
    R = rep_mfold(R, b.m);
    return rep_wreath(R, b.c, 2);
}

Rep basic_rep(const BasicLabel& b, i64 q)
{
    return is_form_kind(b.kind) ? basic_rep_form(b, q) : basic_rep_linear(b, q);
}

FormKind block_form_kind(GroupKind k)
{
    switch (k) {
    case GroupKind::GU:
    case GroupKind::SU: return FormKind::unitary;
    case GroupKind::Sp: return FormKind::symplectic;
    case GroupKind::O: return FormKind::orthogonal;
    default: return FormKind::linear;
    }
}

Variant variant_of_disc(int disc) { return disc == -1 ? Variant::minus : Variant::plus; }

/// Moves a representation onto the standard space of its kind.
BasicGroup to_standard(const Rep& R, GroupKind kind, i64 q)
{
    FormKind fk = block_form_kind(kind);
    BasicGroup out;
    const GF& F = *R.gf;
    if (fk == FormKind::linear) {
        out.space = standard_space(fk, R.n, q);
        out.gens = R.gens;
        return out;
    }
    Variant v = Variant::none;
    if (fk == FormKind::orthogonal) v = variant_of_disc(discriminant(F, R.gram));
    out.space = standard_space(fk, R.n, q, v);
    Mat P = congruence_to_standard(F, fk, R.gram);
    Mat Pi = inverse(F, P);
    for (const auto& g : R.gens) out.gens.push_back(mat_mul(F, mat_mul(F, Pi, g), P));
    return out;
}

std::vector<std::vector<int>> compositions_upto(int maxsum)
{
    std::vector<std::vector<int>> out{{}};
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int left) {
        for (int x = 1; x <= left; ++x) {
            cur.push_back(x);
            out.push_back(cur);
            rec(cur, left - x);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(cur, maxsum);
    return out;
}

bool is_triangular(int t)
{
    for (int k = 1; k * (k + 1) / 2 <= t; ++k)
        if (k * (k + 1) / 2 == t) return true;
    return false;
}

std::string join_c(const std::vector<int>& c)
{
    std::string s;
    for (size_t j = 0; j < c.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(c[j]);
    }
    return s;
}

}  // namespace

int BasicLabel::csum() const
{
    int s = 0;
    for (int x : c) s += x;
    return s;
}

bool BasicLabel::operator==(const BasicLabel& o) const
{
    return kind == o.kind && i == o.i && eta == o.eta && m == o.m && alpha == o.alpha && gamma == o.gamma &&
           c == o.c && p == o.p && disc == o.disc;
}

bool BasicLabel::operator<(const BasicLabel& o) const
{
    return std::tie(i, eta, m, alpha, gamma, c, disc) < std::tie(o.i, o.eta, o.m, o.alpha, o.gamma, o.c, o.disc);
}

bool LabelBlock::operator<(const LabelBlock& o) const
{
    if (dim != o.dim) return dim < o.dim;
    if (basic.has_value() != o.basic.has_value()) return !basic.has_value();
    if (basic && *basic != *o.basic) return *basic < *o.basic;
    return disc < o.disc;
}

std::string to_string(const BasicLabel& b)
{
    std::ostringstream os;
    os << 'R' << b.i;
    if (b.eta == 1) os << '+';
    if (b.eta == -1) os << '-';
    os << "_{m=" << b.m << ",a=" << b.alpha << ",g=" << b.gamma << ",c=(" << join_c(b.c) << ")}";
    if (b.kind == GroupKind::O && b.disc == -1) os << "@disc-";
    return os.str();
}

std::string to_string(const RadicalLabel& r)
{
    std::string s;
    for (size_t j = 0; j < r.blocks.size(); ++j) {
        if (j) s += " x ";
        const auto& bl = r.blocks[j];
        s += bl.basic ? to_string(*bl.basic) : "1_{n=" + std::to_string(bl.dim) + "}";
    }
    if (r.kind == GroupKind::SL || r.kind == GroupKind::SU) return r.blocks.empty() ? "1" : "iota(" + s + ")";
    return s.empty() ? "1" : s;
}

BasicLabel parse_basic_label(const std::string& s, GroupKind kind, int p)
{
    static const std::regex re(R"(R([0-4])([+-]?)_\{m=(\d+),a=(\d+),g=(\d+),c=\(([0-9,]*)\)\}(@disc([+-]))?)");
    std::smatch mt;
    if (!std::regex_match(s, mt, re)) throw std::invalid_argument("parse_basic_label: malformed label '" + s + "'");
    BasicLabel b;
    b.kind = kind;
    b.p = p;
    b.i = std::stoi(mt[1]);
    b.eta = mt[2] == "+" ? 1 : mt[2] == "-" ? -1 : 0;
    b.m = std::stoi(mt[3]);
    b.alpha = std::stoi(mt[4]);
    b.gamma = std::stoi(mt[5]);
    std::string cs = mt[6];
    std::stringstream ss(cs);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) b.c.push_back(std::stoi(part));
    if (b.m < 1) throw std::invalid_argument("parse_basic_label: m must be positive in '" + s + "'");
    for (int c : b.c)
        if (c < 1) throw std::invalid_argument("parse_basic_label: c entries must be positive in '" + s + "'");
    if (kind == GroupKind::O) b.disc = mt[8] == "-" ? -1 : 1;
    return b;
}

int label_dim(const BasicLabel& b, i64 q)
{
    int cs = b.csum();
    if (b.p != 2) {
        QParams qp = q_params_oddp(q, b.p);
        return b.m * qp.e * static_cast<int>(ipow(b.p, b.alpha + b.gamma + cs));
    }
    if (is_linear_kind(b.kind)) {
        if (b.i == 2) return b.m << (b.gamma + cs);
        return b.m << (b.alpha + b.gamma + cs);
    }
    if (b.i == 0) {
        bool wide = b.gamma > 0 && ((b.kind == GroupKind::O) == (b.eta == -1));
        return b.m << (b.gamma + cs + (wide ? 1 : 0));
    }
    return b.m << (b.alpha + b.gamma + cs + (b.i == 3 ? 2 : 1));
}

int predicted_log_order(const BasicLabel& b, i64 q)
{
    int base;
    if (b.p != 2) {
        base = q_params_oddp(q, b.p).a + b.alpha + 2 * b.gamma;
    } else {
        int a = two_a(q);
        if (is_linear_kind(b.kind)) {
            if (b.i == 2)
                base = a + 2 * b.gamma;
            else if (z_applies(b.kind, q) || b.alpha > 0)
                base = a + b.alpha + 2 * b.gamma;
            else
                base = b.gamma == 0 ? 1 : 2 * b.gamma + 1;
        } else if (b.i == 0) {
            base = b.gamma == 0 ? 1 : 2 * b.gamma + 1;
        } else if (b.i == 1) {
            base = a + b.alpha + 2 * b.gamma;
        } else {
            base = a + b.alpha + 1 + 2 * b.gamma;
        }
    }
    i64 log = base;
    for (auto it = b.c.rbegin(); it != b.c.rend(); ++it) {
        log = ipow(b.p, *it) * log + *it;
        if (log > (i64{1} << 30)) throw std::overflow_error("predicted_log_order: too large");
    }
    return static_cast<int>(log);
}

i64 predicted_order(const BasicLabel& b, i64 q)
{
    int l = predicted_log_order(b, q);
    i64 r = 1;
    for (int j = 0; j < l; ++j) {
        if (r > (i64{1} << 62) / b.p) throw std::overflow_error("predicted_order: exceeds 2^62");
        r *= b.p;
    }
    return r;
}

bool label_legal(const BasicLabel& b, i64 q, bool generic)
{
    if (b.m < 1 || b.alpha < 0 || b.gamma < 0) return false;
    for (int x : b.c)
        if (x < 1) return false;
    int c1 = b.c.empty() ? 0 : b.c.back();
    if (b.p != 2) {
        if (b.kind != GroupKind::GL && b.kind != GroupKind::GU) return false;
        if (b.i != 1 || b.eta != 0 || b.disc != 0) return false;
        if (q % b.p == 0) return false;
        return b.gamma == 0 || q_params_oddp(q, b.p).e == 1;
    }
    if (q % 2 == 0) return false;
    if (is_linear_kind(b.kind)) {
        if (b.disc != 0) return false;
        bool za = z_applies(b.kind, q);
        if (b.i == 1) {
            if (za || b.alpha > 0) return b.eta == 0;
            if (b.gamma == 0) return b.eta == 0 && c1 != 1;
            if (b.gamma == 1) return b.eta == -1;
            return b.eta == 1 || b.eta == -1;
        }
        if (b.i == 2) return !za && b.alpha == 0 && b.gamma >= 1 && b.eta == 0;
        return false;
    }
    if (!is_form_kind(b.kind)) return false;
    bool isO = b.kind == GroupKind::O;
    int a = q_params(q).a;
    int want_disc = 0;
    if (isO) want_disc = (b.i == 0 && b.gamma == 0 && b.c.empty() && b.alpha == 1) ? -1 : 1;
    if (b.disc != want_disc) return false;
    if (b.i == 0) {
        if (b.gamma == 0) {
            if (b.eta != 1 || c1 == 1) return false;
            if (isO) return b.alpha <= 1;
            return b.m % 2 == 0 && b.alpha == 0;
        }
        if (b.eta != 1 && b.eta != -1) return false;
        if (b.eta == 1 && b.gamma < 2) return false;
        bool wide_alpha = b.m % 2 == 0 || a >= 3 || generic;
        bool alpha_branch = (isO && b.eta == 1) || (!isO && b.eta == -1);
        if (alpha_branch) {
            if (b.alpha > (wide_alpha ? 1 : 0)) return false;
        } else if (b.alpha != 0) {
            return false;
        }
        if (!generic && a == 2 && b.alpha == 0) return false;
        return true;
    }
    if (b.eta != 0) return false;
    if (b.i == 1 || b.i == 3 || b.i == 4) return true;
    if (b.i == 2) return b.alpha >= 1;
    return false;
}

std::vector<Mat> build_extraspecial(int eta, int gamma, i64 q, int eps)
{
    if (gamma < 1) throw std::invalid_argument("build_extraspecial: gamma must be positive");
    if (q % 2 == 0) throw std::invalid_argument("build_extraspecial: q must be odd");
    GFPtr gf = gf_make(eps == 1 ? q : q * q);
    const GF& F = *gf;
    u8 m1 = F.neg(1);
    Mat d1(2, 2), d2(2, 2), q1(2, 2), q2(2, 2);
    d1(0, 0) = m1;
    d1(1, 1) = 1;
    d2(0, 1) = d2(1, 0) = 1;
    q1(0, 1) = 1;
    q1(1, 0) = m1;
    FieldPtr fq = field_of_order(q);
    auto [b, b2] = solve_sum_of_squares(FieldElement(fq, fq->neg(1)), eps, q);
    q2(0, 0) = u(b.v);
    q2(0, 1) = q2(1, 0) = u(b2.v);
    q2(1, 1) = F.neg(u(b.v));
    std::vector<Mat> gens;
    for (int j = 0; j < gamma; ++j) {
        Mat L = identity(1 << j), R = identity(1 << (gamma - 1 - j));
        bool quat = eta == -1 && j == gamma - 1;
        for (const Mat* g : {quat ? &q1 : &d1, quat ? &q2 : &d2}) gens.push_back(kron(F, kron(F, L, *g), R));
    }
    return gens;
}

BasicGroup build_basic(const BasicLabel& b, i64 q)
{
    if (b.p != 2 && b.kind != GroupKind::GL)
        throw std::invalid_argument("build_basic: odd p is supported for GL only");
    if (!label_legal(b, q, true) && !label_legal(b, q, false))
        throw std::invalid_argument("build_basic: illegal label " + to_string(b));
    Rep R = basic_rep(b, q);
    if (R.n != label_dim(b, q)) throw std::logic_error("build_basic: dimension mismatch for " + to_string(b));
    if (b.kind == GroupKind::O && discriminant(*R.gf, R.gram) != b.disc)
        throw std::logic_error("build_basic: discriminant mismatch for " + to_string(b));
    return to_standard(R, b.kind, q);
}

BasicGroup build_radical(const RadicalLabel& r)
{
    if (r.kind == GroupKind::SL || r.kind == GroupKind::SU) {
        RadicalLabel inner = r;
        inner.kind = r.kind == GroupKind::SL ? GroupKind::GL : GroupKind::GU;
        inner.n = 2;
        BasicGroup out;
        out.space = standard_space(block_form_kind(r.kind), 3, r.q);
        const GF& F = *out.space.gf;
        if (r.blocks.empty()) return out;
        BasicGroup g2 = build_radical(inner);
        for (const auto& g : g2.gens) {
            Mat h = block_diag({g, scalar(1, F.inv(det(F, g)))});
            out.gens.push_back(h);
        }
        return out;
    }
    int total = 0;
    for (const auto& bl : r.blocks) total += bl.dim;
    if (total != r.n) throw std::invalid_argument("build_radical: block dimensions do not sum to n");
    FormKind fk = block_form_kind(r.kind);
    std::vector<Mat> grams;
    std::vector<std::vector<Mat>> gens;
    GFPtr gf;
    for (const auto& bl : r.blocks) {
        BasicGroup g;
        if (bl.basic) {
            g = build_basic(*bl.basic, r.q);
        } else {
            g.space = standard_space(fk, bl.dim, r.q, fk == FormKind::orthogonal ? variant_of_disc(bl.disc) : Variant::none);
        }
        gf = g.space.gf;
        grams.push_back(fk == FormKind::linear ? identity(bl.dim) : g.space.gram);
        gens.push_back(g.gens);
    }
    Rep R;
    R.gf = gf ? gf : gf_make(fk == FormKind::unitary ? r.q * r.q : r.q);
    R.n = r.n;
    if (fk != FormKind::linear) R.gram = block_diag(grams);
    for (size_t j = 0; j < r.blocks.size(); ++j)
        for (const auto& g : gens[j]) {
            std::vector<Mat> bd;
            for (size_t k = 0; k < r.blocks.size(); ++k) bd.push_back(k == j ? g : identity(r.blocks[k].dim));
            R.gens.push_back(block_diag(bd));
        }
    BasicGroup out = to_standard(R, r.kind, r.q);
    if (fk == FormKind::orthogonal && r.variant != Variant::none && out.space.variant != r.variant)
        throw std::logic_error("build_radical: block discriminants do not match the ambient variant");
    return out;
}

int radical_log_order(const RadicalLabel& r)
{
    int s = 0;
    for (const auto& bl : r.blocks)
        if (bl.basic) s += predicted_log_order(*bl.basic, r.q);
    return s;
}

std::vector<BasicLabel> basic_labels_of_dim(GroupKind kind, int k, i64 q, int disc, bool generic)
{
    std::vector<BasicLabel> out;
    int p = 2;
    int L = ilog(k, p) + 1;
    std::vector<int> families;
    if (is_linear_kind(kind))
        families = {1, 2};
    else
        families = {0, 1, 2, 3, 4};
    auto comps = compositions_upto(L);
    for (int i : families)
        for (int eta : {-1, 0, 1})
            for (int m = 1; m <= k; ++m)
                for (int alpha = 0; alpha <= L; ++alpha)
                    for (int gamma = 0; gamma <= L; ++gamma)
                        for (const auto& c : comps) {
                            BasicLabel b;
                            b.kind = kind;
                            b.i = i;
                            b.eta = eta;
                            b.m = m;
                            b.alpha = alpha;
                            b.gamma = gamma;
                            b.c = c;
                            if (kind == GroupKind::O)
                                b.disc = (i == 0 && gamma == 0 && c.empty() && alpha == 1) ? -1 : 1;
                            if (label_dim(b, q) != k) continue;
                            if (!label_legal(b, q, generic)) continue;
                            if (kind == GroupKind::O && b.disc != disc) continue;
                            if (generic && k == 2 && i == 0 && gamma == 0 && c.empty()) continue;
                            out.push_back(b);
                        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct BlockType {
    LabelBlock block;
    bool selfnorm = false;
    int logord = 0;
};

bool multiplicity_forbidden(int t, int p)
{
    if (p == 2) return t == 2 || t == 4;
    if (p == 3) return t == 3;
    return false;
}

constexpr i64 kBruteBlockCap = 100000;

/// Radicality and self-normalization of a single block inside the isometry
/// group of its own space: brute force where the group is small, the
/// classification otherwise.
struct BlockJudge {
    GroupKind kind;
    i64 q;
    int p;
    std::map<std::pair<int, int>, Ambient> cache;

    std::pair<bool, bool> judge(const BasicLabel& b, int dim)
    {
        Variant v = kind == GroupKind::O ? variant_of_disc(b.disc) : Variant::none;
        i64 ord = classical_order(kind, dim, q, v);
        if (ord <= kBruteBlockCap) {
            auto key = std::make_pair(dim, b.disc);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, ambient_group(kind, dim, q, v)).first;
            const Ambient& A = it->second;
            BasicGroup g = build_basic(b, q);
            GeneratedGroup R = closure(A.space.gf, dim, g.gens);
            bool rad = is_radical(A.group, R, p);
            bool sn = rad && normalizer(A.group, R).order() == R.order();
            return {rad, sn};
        }
        bool rad = true;
        if (kind == GroupKind::O && p == 2 && q_params(q).a == 2 && b.i == 4 && b.alpha == 0 && b.gamma == 0 &&
            b.m % 2 == 0)
            rad = false;
        bool sylow = predicted_log_order(b, q) == v_p(ord, p);
        bool sn = false;
        if (rad && sylow) {
            if (p != 2) {
                sn = q_params_oddp(q, p).e == 1 && ipow(p, v_p(q - 1, p)) == q - 1;
            } else if (is_linear_kind(kind)) {
                i64 d = q - group_sign(kind);
                sn = (d & (d - 1)) == 0;
            } else if (kind == GroupKind::Sp) {
                sn = q_params(q).a >= 3;
            } else {
                sn = true;
            }
        }
        return {rad, sn};
    }
};

std::vector<RadicalLabel> sl3_labels_impl(GroupKind kind, i64 q, LabelMode mode)
{
    int epsG = group_sign(kind);
    auto all = sl3_radical_labels(q, epsG);
    if (mode == LabelMode::generic) return all;
    i64 ord = classical_order(kind, 3, q);
    if (ord > 2000000) return all;
    Ambient A = ambient_group(kind, 3, q);
    std::vector<RadicalLabel> out;
    for (const auto& r : all) {
        BasicGroup g = build_radical(r);
        GeneratedGroup R = closure(A.space.gf, 3, g.gens);
        if (is_radical(A.group, R, 2)) out.push_back(r);
    }
    return out;
}

}  // namespace

std::vector<RadicalLabel> sl3_radical_labels(i64 q, int eps)
{
    GroupKind lin = eps == 1 ? GroupKind::GL : GroupKind::GU;
    GroupKind outer = eps == 1 ? GroupKind::SL : GroupKind::SU;
    auto mk = [&](int i, int eta, int m, int alpha, int gamma, std::vector<int> c) {
        BasicLabel b;
        b.kind = lin;
        b.i = i;
        b.eta = eta;
        b.m = m;
        b.alpha = alpha;
        b.gamma = gamma;
        b.c = std::move(c);
        return LabelBlock{b, label_dim(b, q), 0};
    };
    auto lab = [&](std::vector<LabelBlock> blocks) {
        RadicalLabel r;
        r.kind = outer;
        r.n = 3;
        r.q = q;
        r.p = 2;
        r.blocks = std::move(blocks);
        std::sort(r.blocks.begin(), r.blocks.end());
        return r;
    };
    std::vector<RadicalLabel> out;
    out.push_back(lab({}));
    out.push_back(lab({mk(1, 0, 2, 0, 0, {})}));
    out.push_back(lab({mk(1, 0, 1, 0, 0, {}), mk(1, 0, 1, 0, 0, {})}));
    out.push_back(lab({mk(1, 0, 1, 1, 0, {})}));
    bool za = z_applies(lin, q);
    out.push_back(lab({mk(1, za ? 0 : -1, 1, 0, 1, {})}));
    if (za)
        out.push_back(lab({mk(1, 0, 1, 0, 0, {1})}));
    else
        out.push_back(lab({mk(2, 0, 1, 0, 1, {})}));
    return out;
}

std::vector<RadicalLabel> enumerate_labels(GroupKind kind, int n, i64 q, int p, Variant variant, LabelMode mode)
{
    if (n < 1) throw std::invalid_argument("enumerate_labels: n must be positive");
    if (q % p == 0) throw std::invalid_argument("enumerate_labels: p divides q");
    if (kind == GroupKind::SL || kind == GroupKind::SU) {
        if (n != 3 || p != 2) throw std::invalid_argument("enumerate_labels: SL/SU supported for n = 3, p = 2 only");
        return sl3_labels_impl(kind, q, mode);
    }
    if (p != 2 && kind != GroupKind::GL)
        throw std::invalid_argument("enumerate_labels: odd p is supported for GL only");
    if (p == 2 && q % 2 == 0) throw std::invalid_argument("enumerate_labels: p = 2 needs odd q");
    if (kind == GroupKind::O && variant == Variant::none)
        throw std::invalid_argument("enumerate_labels: orthogonal variant required");
    if (kind == GroupKind::Sp && n % 2) throw std::invalid_argument("enumerate_labels: symplectic n must be even");
    bool generic = mode == LabelMode::generic;

    std::vector<BlockType> types;
    BlockJudge judge{kind, q, p, {}};
    for (int d = 1; d <= n; ++d) {
        std::vector<BasicLabel> cands;
        if (p == 2) {
            for (int disc : kind == GroupKind::O ? std::vector<int>{1, -1} : std::vector<int>{0}) {
                auto v = basic_labels_of_dim(kind, d, q, disc, generic);
                cands.insert(cands.end(), v.begin(), v.end());
            }
        } else {
            QParams qp = q_params_oddp(q, p);
            int L = ilog(d, p) + 1;
            for (int m = 1; m <= d; ++m)
                for (int alpha = 0; alpha <= L; ++alpha)
                    for (int gamma = 0; gamma <= L; ++gamma)
                        for (const auto& c : compositions_upto(L)) {
                            BasicLabel b;
                            b.kind = kind;
                            b.p = p;
                            b.m = m;
                            b.alpha = alpha;
                            b.gamma = gamma;
                            b.c = c;
                            if (gamma > 0 && qp.e != 1) continue;
                            if (label_dim(b, q) == d && label_legal(b, q, generic)) cands.push_back(b);
                        }
        }
        for (const auto& b : cands) {
            BlockType t;
            t.block = LabelBlock{b, d, b.disc};
            t.logord = predicted_log_order(b, q);
            if (!generic) {
                auto [rad, sn] = judge.judge(b, d);
                if (!rad) continue;
                t.selfnorm = sn;
            }
            types.push_back(t);
        }
    }
    bool trivial_allowed = p != 2 && q_params_oddp(q, p).e > 1;

    int target_disc = kind == GroupKind::O ? (variant == Variant::minus ? -1 : 1) : 0;
    std::vector<RadicalLabel> out;
    std::vector<LabelBlock> cur;
    std::function<void(size_t, int, int)> rec = [&](size_t idx, int left, int disc) {
        if (left == 0) {
            if (kind == GroupKind::O && disc != target_disc) return;
            if (cur.empty()) return;
            RadicalLabel r;
            r.kind = kind;
            r.n = n;
            r.q = q;
            r.p = p;
            r.variant = kind == GroupKind::O ? variant : Variant::none;
            r.blocks = cur;
            std::sort(r.blocks.begin(), r.blocks.end());
            out.push_back(r);
            return;
        }
        if (idx == types.size()) return;
        const BlockType& t = types[idx];
        int d = t.block.dim;
        rec(idx + 1, left, disc);
        int dd = disc;
        for (int mult = 1; mult * d <= left; ++mult) {
            cur.push_back(t.block);
            if (kind == GroupKind::O) dd *= t.block.disc;
            if (!(t.selfnorm && multiplicity_forbidden(mult, p))) rec(idx + 1, left - mult * d, dd);
        }
        for (int mult = 1; mult * d <= left; ++mult) cur.pop_back();
    };
    if (trivial_allowed) {
        for (int d0 = 1; d0 <= n; ++d0) {
            if (!generic && classical_order(kind, d0, q) <= kBruteBlockCap) {
                Ambient A = ambient_group(kind, d0, q);
                if (core_p(A.group, p).order() != 1) continue;
            }
            cur = {LabelBlock{std::nullopt, d0, 0}};
            if (d0 == n) {
                RadicalLabel r;
                r.kind = kind;
                r.n = n;
                r.q = q;
                r.p = p;
                r.blocks = cur;
                out.push_back(r);
            } else {
                rec(0, n - d0, 1);
            }
        }
        cur.clear();
    }
    rec(0, n, 1);
    std::sort(out.begin(), out.end(), [](const RadicalLabel& x, const RadicalLabel& y) {
        int lx = radical_log_order(x), ly = radical_log_order(y);
        if (lx != ly) return lx < ly;
        return to_string(x) < to_string(y);
    });
    return out;
}

namespace {

/// The coincident spelling at a = 2 (R^3 and R^4 with alpha = 0 name R^0 groups).
std::optional<BasicLabel> r0_spelling(const BasicLabel& b, i64 q)
{
    if (q_params(q).a != 2 || b.alpha != 0 || (b.i != 3 && b.i != 4)) return std::nullopt;
    bool isO = b.kind == GroupKind::O;
    BasicLabel r = b;
    r.i = 0;
    r.gamma = b.gamma + 1;
    r.eta = ((b.i == 4) == isO) ? 1 : -1;
    return r;
}

bool weight_block_ok(GroupKind kind, const LabelBlock& bl, i64 q, bool principal)
{
    if (!bl.basic) return false;
    const BasicLabel& b0 = *bl.basic;
    int a = q_params(q).a;
    std::vector<BasicLabel> spellings{b0};
    if (auto alt = r0_spelling(b0, q)) spellings.push_back(*alt);
    for (const auto& b : spellings) {
        int c1 = b.c.empty() ? 0 : b.c.back();
        bool pm1 = b.i == 0 && b.gamma == 0 && b.c.empty();
        if (is_linear_kind(kind)) {
            if (b.m % 2 == 0) continue;
            bool ok = z_applies(kind, q) ? b.i == 1
                                         : (b.i == 2 || (b.i == 1 && (b.alpha >= 1 || b.gamma == 0 ||
                                                                      (b.eta == -1 && b.gamma == 1))));
            if (ok && principal && (b.m != 1 || b.alpha != 0)) ok = false;
            if (ok) return true;
        } else if (kind == GroupKind::O) {
            bool ok = false;
            if (pm1) {
                ok = b.m == 1 || (!principal && b.m % 2 == 0 && bl.disc == -1);
            } else if (bl.disc == 1) {
                if (b.i == 0 && b.gamma == 0 && c1 >= 2 && b.m == 1) ok = true;
                if (!principal) {
                    if (b.i == 0 && b.gamma == 0 && c1 >= 2 && b.m % 2 == 0) ok = true;
                    if (b.i == 0 && b.eta == -1 && b.alpha == 0 && b.gamma == 1) ok = true;
                    if ((b.i == 1 || b.i == 2) && b.m % 2 == 1) ok = true;
                }
                if (b.i == 4 && b.m == 1 && b.alpha == 0) ok = true;
            }
            if (ok) return true;
        } else {
            bool ok = false;
            bool third = b.i == 0 && b.eta == -1 && b.m == 1 && b.gamma == 1 &&
                         (b.alpha == 0 || (b.alpha == 1 && a >= 3));
            bool sixth = b.i == 4 && b.m == 1 && b.alpha == 0;
            if (third || sixth) ok = true;
            if (!principal) {
                if (pm1) ok = true;
                if (b.i == 0 && b.gamma == 0 && b.alpha == 0 && c1 >= 2) ok = true;
                if (b.i == 0 && b.eta == -1 && b.alpha == 1 && b.gamma == 1 && b.m % 2 == 0) ok = true;
                if ((b.i == 1 || b.i == 2) && b.m % 2 == 1) ok = true;
            }
            if (ok) return true;
        }
    }
    return false;
}

}  // namespace

std::vector<RadicalLabel> weight_labels(GroupKind kind, int n, i64 q, bool principal_only, Variant variant)
{
    if (!is_linear_kind(kind) && !is_form_kind(kind))
        throw std::invalid_argument("weight_labels: kind must be GL, GU, Sp or O");
    auto all = enumerate_labels(kind, n, q, 2, variant, LabelMode::exact);
    std::vector<RadicalLabel> out;
    for (const auto& r : all) {
        bool ok = true;
        for (const auto& bl : r.blocks)
            if (!weight_block_ok(kind, bl, q, principal_only)) ok = false;
        if (ok && principal_only) {
            for (size_t j = 0; j < r.blocks.size();) {
                size_t k = j;
                while (k < r.blocks.size() && r.blocks[k] == r.blocks[j]) ++k;
                if (!is_triangular(static_cast<int>(k - j))) ok = false;
                j = k;
            }
        }
        if (ok) out.push_back(r);
    }
    return out;
}

}  // namespace radsub
