#include "radsub/forms.hpp"

namespace radsub {

std::string to_string(GroupKind k)
{
    switch (k) {
    case GroupKind::GL: return "GL";
    case GroupKind::GU: return "GU";
    case GroupKind::Sp: return "Sp";
    case GroupKind::O: return "O";
    case GroupKind::SL: return "SL";
    case GroupKind::SU: return "SU";
    }
    return "?";
}

GroupKind parse_group_kind(const std::string& s)
{
    if (s == "GL") return GroupKind::GL;
    if (s == "GU") return GroupKind::GU;
    if (s == "Sp") return GroupKind::Sp;
    if (s == "O") return GroupKind::O;
    if (s == "SL") return GroupKind::SL;
    if (s == "SU") return GroupKind::SU;
    throw std::invalid_argument("unknown group kind: " + s);
}

FormKind form_kind_of(GroupKind k)
{
    switch (k) {
    case GroupKind::GL:
    case GroupKind::SL: return FormKind::linear;
    case GroupKind::GU:
    case GroupKind::SU: return FormKind::unitary;
    case GroupKind::Sp: return FormKind::symplectic;
    case GroupKind::O: return FormKind::orthogonal;
    }
    return FormKind::linear;
}

FormSpace standard_space(FormKind kind, int n, i64 q, Variant variant)
{
    if (n < 1) throw std::invalid_argument("standard_space: n must be positive");
    FormSpace s;
    s.kind = kind;
    s.n = n;
    s.q = q;
    s.gf = gf_make(kind == FormKind::unitary ? q * q : q);
    const GF& F = *s.gf;
    switch (kind) {
    case FormKind::linear:
        s.variant = Variant::none;
        break;
    case FormKind::unitary:
        s.gram = identity(n);
        s.variant = Variant::none;
        break;
    case FormKind::symplectic: {
        if (n % 2) throw std::invalid_argument("standard_space: symplectic space of odd dimension");
        int m = n / 2;
        s.gram = Mat(n, n);
        for (int i = 0; i < m; ++i) {
            s.gram(i, m + i) = 1;
            s.gram(m + i, i) = F.neg(1);
        }
        s.variant = Variant::none;
        break;
    }
    case FormKind::orthogonal:
        if (variant == Variant::none) throw std::invalid_argument("standard_space: orthogonal variant required");
        if (F.p() == 2) throw std::invalid_argument("standard_space: orthogonal spaces need odd q");
        s.gram = identity(n);
        if (variant == Variant::minus) s.gram(n - 1, n - 1) = static_cast<u8>(F.field()->primitive());
        s.variant = variant;
        break;
    }
    return s;
}

bool is_isometry(const Mat& m, const FormSpace& space)
{
    if (m.r != space.n || m.c != space.n) throw std::invalid_argument("is_isometry: size mismatch");
    const GF& F = *space.gf;
    if (det(F, m) == 0) return false;
    if (space.kind == FormKind::linear) return true;
    Mat lhs = mat_mul(F, mat_mul(F, transpose(m), space.gram), space.hermitian() ? conj(F, m) : m);
    return lhs == space.gram;
}

int discriminant(const GF& F, const Mat& gram)
{
    u8 d = det(F, gram);
    if (d == 0) throw std::invalid_argument("discriminant: degenerate form");
    return square_class(*F.field(), d) == SquareClass::square ? 1 : -1;
}

int orth_type(i64 q, int n, int disc)
{
    int eps = (q % 4 == 1) ? 1 : -1;
    int t = disc;
    if ((n / 2) % 2 == 1) t *= eps;
    return t;
}

namespace {

i64 checked_mul(i64 a, i64 b)
{
    __int128 r = static_cast<__int128>(a) * b;
    if (r > static_cast<__int128>(INT64_MAX) || r < -static_cast<__int128>(INT64_MAX))
        throw std::overflow_error("group order exceeds 64 bits");
    return static_cast<i64>(r);
}

}  // namespace

i64 classical_order(GroupKind kind, int n, i64 q, Variant variant)
{
    i64 r = 1;
    switch (kind) {
    case GroupKind::GL:
    case GroupKind::SL:
        for (int i = 0; i < n; ++i) r = checked_mul(r, ipow(q, n) - ipow(q, i));
        if (kind == GroupKind::SL) r /= (q - 1);
        return r;
    case GroupKind::GU:
    case GroupKind::SU:
        for (int i = 1; i <= n; ++i) {
            i64 t = ipow(q, i) - (i % 2 ? -1 : 1);
            r = checked_mul(r, checked_mul(ipow(q, i - 1), t));
        }
        if (kind == GroupKind::SU) r /= (q + 1);
        return r;
    case GroupKind::Sp: {
        int m = n / 2;
        r = ipow(q, m * m);
        for (int i = 1; i <= m; ++i) r = checked_mul(r, ipow(q, 2 * i) - 1);
        return r;
    }
    case GroupKind::O: {
        int m = n / 2;
        if (n % 2) {
            r = checked_mul(2, ipow(q, m * m));
            for (int i = 1; i <= m; ++i) r = checked_mul(r, ipow(q, 2 * i) - 1);
            return r;
        }
        int disc = variant == Variant::minus ? -1 : 1;
        int ty = orth_type(q, n, disc);
        r = checked_mul(2, ipow(q, m * (m - 1)));
        r = checked_mul(r, ipow(q, m) - ty);
        for (int i = 1; i < m; ++i) r = checked_mul(r, ipow(q, 2 * i) - 1);
        return r;
    }
    }
    return r;
}

Variant variant_of(const GF& F, const Mat& gram) { return discriminant(F, gram) == 1 ? Variant::plus : Variant::minus; }

namespace {

using Vec = std::vector<u8>;

Vec column(const Mat& P, int j)
{
    Vec v(P.r);
    for (int i = 0; i < P.r; ++i) v[i] = P(i, j);
    return v;
}

Vec axpy(const GF& F, const Vec& x, u8 s, const Vec& y)
{
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = F.add(x[i], F.mul(s, y[i]));
    return r;
}

Vec vscale(const GF& F, const Vec& x, u8 s)
{
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = F.mul(s, x[i]);
    return r;
}

Mat from_columns(const std::vector<Vec>& cols)
{
    int n = static_cast<int>(cols.size());
    Mat P(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) P(i, j) = cols[j][i];
    return P;
}

// Orthogonal: basis with Gram diag(1, ..., 1, d), d in {1, d0}.
Mat orth_basis(const GF& F, const Mat& G)
{
    int n = G.r;
    std::vector<Vec> work;
    for (int j = 0; j < n; ++j) work.push_back(column(identity(n), j));
    auto B = [&](const Vec& u, const Vec& v) { return form_value(F, G, u, v, false); };
    std::vector<Vec> out;
    while (!work.empty()) {
        Vec chosen;
        if (work.size() >= 2) {
            // find v in span(work[0], work[1]) with B(v,v) = 1, or anisotropic
            // in the whole remaining space when the pair is degenerate
            bool found = false;
            for (size_t i = 0; i < work.size() && !found; ++i)
                for (size_t j = i + 1; j < work.size() && !found; ++j)
                    for (int s = 0; s < F.q() && !found; ++s)
                        for (int t = 0; t < F.q() && !found; ++t) {
                            Vec v = axpy(F, vscale(F, work[i], static_cast<u8>(s)), static_cast<u8>(t), work[j]);
                            if (B(v, v) == 1) {
                                chosen = v;
                                found = true;
                            }
                        }
            if (!found) throw std::logic_error("orth_basis: no unit vector");
        } else {
            Vec v = work[0];
            u8 d = B(v, v);
            if (d == 0) throw std::invalid_argument("congruence: degenerate form");
            u8 target = square_class(*F.field(), d) == SquareClass::square ? 1 : static_cast<u8>(F.field()->primitive());
            // find s with s^2 d = target
            for (int s = 1; s < F.q(); ++s)
                if (F.mul(F.mul(static_cast<u8>(s), static_cast<u8>(s)), d) == target) {
                    chosen = vscale(F, v, static_cast<u8>(s));
                    break;
                }
        }
        out.push_back(chosen);
        u8 bb = B(chosen, chosen);
        u8 binv = F.inv(bb);
        std::vector<Vec> next;
        for (const auto& w : work) {
            Vec r = axpy(F, w, F.neg(F.mul(B(w, chosen), binv)), chosen);
            bool zero = true;
            for (u8 x : r) zero = zero && x == 0;
            if (!zero) next.push_back(r);
        }
        // keep a basis of the complement
        std::vector<Vec> basis;
        for (const auto& w : next) {
            std::vector<Vec> trial = basis;
            trial.push_back(w);
            Mat M(static_cast<int>(trial.size()), n);
            for (size_t i = 0; i < trial.size(); ++i)
                for (int j = 0; j < n; ++j) M(static_cast<int>(i), j) = trial[i][j];
            if (rank(F, M) == static_cast<int>(trial.size())) basis = trial;
        }
        work = basis;
    }
    return from_columns(out);
}

// Hermitian: orthonormal basis.
Mat herm_basis(const GF& F, const Mat& G)
{
    int n = G.r;
    auto H = [&](const Vec& u, const Vec& v) { return form_value(F, G, u, v, true); };
    std::vector<Vec> work;
    for (int j = 0; j < n; ++j) work.push_back(column(identity(n), j));
    std::vector<Vec> out;
    while (!work.empty()) {
        Vec chosen;
        bool found = false;
        for (size_t i = 0; i < work.size() && !found; ++i)
            if (H(work[i], work[i]) != 0) {
                chosen = work[i];
                found = true;
            }
        for (size_t i = 0; i < work.size() && !found; ++i)
            for (size_t j = i + 1; j < work.size() && !found; ++j)
                for (int t = 1; t < F.q() && !found; ++t) {
                    Vec v = axpy(F, work[i], static_cast<u8>(t), work[j]);
                    if (H(v, v) != 0) {
                        chosen = v;
                        found = true;
                    }
                }
        if (!found) throw std::invalid_argument("congruence: degenerate hermitian form");
        u8 nv = H(chosen, chosen);
        for (int s = 1; s < F.q(); ++s)
            if (F.mul(F.mul(static_cast<u8>(s), F.conj(static_cast<u8>(s))), nv) == 1) {
                chosen = vscale(F, chosen, static_cast<u8>(s));
                break;
            }
        if (H(chosen, chosen) != 1) throw std::logic_error("herm_basis: normalization failed");
        out.push_back(chosen);
        std::vector<Vec> next;
        for (const auto& w : work) {
            Vec r = axpy(F, w, F.neg(H(w, chosen)), chosen);
            next.push_back(r);
        }
        std::vector<Vec> basis;
        for (const auto& w : next) {
            std::vector<Vec> trial = basis;
            trial.push_back(w);
            Mat M(static_cast<int>(trial.size()), n);
            for (size_t i = 0; i < trial.size(); ++i)
                for (int j = 0; j < n; ++j) M(static_cast<int>(i), j) = trial[i][j];
            if (rank(F, M) == static_cast<int>(trial.size())) basis = trial;
        }
        if (basis.size() + out.size() > static_cast<size_t>(n)) basis.resize(n - out.size());
        work = basis;
    }
    return from_columns(out);
}

// Alternating: basis e_1..e_m, f_1..f_m with B(e_i, f_i) = 1.
Mat symp_basis(const GF& F, const Mat& G)
{
    int n = G.r;
    auto B = [&](const Vec& u, const Vec& v) { return form_value(F, G, u, v, false); };
    std::vector<Vec> work;
    for (int j = 0; j < n; ++j) work.push_back(column(identity(n), j));
    std::vector<Vec> es, fs;
    while (!work.empty()) {
        Vec e = work[0], f;
        bool found = false;
        for (size_t j = 1; j < work.size(); ++j)
            if (B(e, work[j]) != 0) {
                f = vscale(F, work[j], F.inv(B(e, work[j])));
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("congruence: degenerate alternating form");
        es.push_back(e);
        fs.push_back(f);
        std::vector<Vec> next;
        for (size_t j = 1; j < work.size(); ++j) {
            // w - B(w,f) e + B(w,e) f  is orthogonal to e and f
            Vec w = work[j];
            Vec r = axpy(F, w, F.neg(B(w, f)), e);
            r = axpy(F, r, B(w, e), f);
            next.push_back(r);
        }
        std::vector<Vec> basis;
        for (const auto& w : next) {
            std::vector<Vec> trial = basis;
            trial.push_back(w);
            Mat M(static_cast<int>(trial.size()), n);
            for (size_t i = 0; i < trial.size(); ++i)
                for (int j = 0; j < n; ++j) M(static_cast<int>(i), j) = trial[i][j];
            if (rank(F, M) == static_cast<int>(trial.size())) basis = trial;
        }
        work = basis;
    }
    std::vector<Vec> cols = es;
    cols.insert(cols.end(), fs.begin(), fs.end());
    return from_columns(cols);
}

}  // namespace

Mat congruence_to_standard(const GF& F, FormKind kind, const Mat& gram)
{
    switch (kind) {
    case FormKind::linear: return identity(gram.r);
    case FormKind::orthogonal: return orth_basis(F, gram);
    case FormKind::unitary: return herm_basis(F, gram);
    case FormKind::symplectic: return symp_basis(F, gram);
    }
    return identity(gram.r);
}

}  // namespace radsub
