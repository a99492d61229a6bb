#include "radsub/parity.hpp"

#include <algorithm>

namespace radsub {

namespace {

void require_orthogonal(const FormSpace& space)
{
    if (space.kind != FormKind::orthogonal) throw std::invalid_argument("parity: orthogonal space required");
}

u8 form(const GF& F, const FormSpace& s, const std::vector<u8>& x, const std::vector<u8>& y)
{
    return form_value(F, s.gram, x, y, false);
}

std::vector<u8> column(const Mat& m, int j)
{
    std::vector<u8> v(m.r);
    for (int i = 0; i < m.r; ++i) v[i] = m(i, j);
    return v;
}

std::vector<u8> combine(const GF& F, const std::vector<u8>& x, u8 s, const std::vector<u8>& y)
{
    std::vector<u8> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = F.add(x[i], F.mul(s, y[i]));
    return r;
}

}  // namespace

std::string to_string(const Parity& x) { return "(" + std::to_string(x.t) + "," + std::to_string(x.tp) + ")"; }

int ParityGroup::size() const
{
    int s = 0;
    for (int i = 0; i < 4; ++i) s += (mask >> i) & 1;
    return s;
}

ParityGroup ParityGroup::with(const Parity& x) const
{
    ParityGroup g = *this;
    std::uint8_t add = 0;
    for (int i = 0; i < 4; ++i)
        if ((mask >> i) & 1) add |= static_cast<std::uint8_t>(1 << (i ^ x.index()));
    g.mask |= add;
    return g;
}

std::vector<Parity> ParityGroup::elements() const
{
    std::vector<Parity> out;
    for (int tp = 0; tp < 2; ++tp)
        for (int t = 0; t < 2; ++t)
            if (contains({t, tp})) out.push_back({t, tp});
    return out;
}

ParityGroup ParityGroup::of(std::initializer_list<Parity> xs)
{
    ParityGroup g;
    for (const auto& x : xs) g = g.with(x);
    return g;
}

std::string to_string(const ParityGroup& g)
{
    std::string s = "{";
    bool first = true;
    for (const auto& x : g.elements()) {
        if (!first) s += ",";
        s += to_string(x);
        first = false;
    }
    return s + "}";
}

Mat reflection(const std::vector<u8>& v, const FormSpace& space)
{
    require_orthogonal(space);
    const GF& F = *space.gf;
    u8 vv = form(F, space, v, v);
    if (vv == 0) throw std::invalid_argument("reflection: isotropic vector");
    // r_v = I - 2 v (v^T G) / (v,v)
    std::vector<u8> row(space.n, 0);
    for (int j = 0; j < space.n; ++j)
        for (int i = 0; i < space.n; ++i) row[j] = F.add(row[j], F.mul(v[i], space.gram(i, j)));
    u8 s = F.neg(F.mul(F.from_int(2), F.inv(vv)));
    Mat r = identity(space.n);
    for (int i = 0; i < space.n; ++i)
        for (int j = 0; j < space.n; ++j) r(i, j) = F.add(r(i, j), F.mul(s, F.mul(v[i], row[j])));
    return r;
}

std::vector<std::vector<u8>> reflect_decompose(const Mat& X, const FormSpace& space, bool reverse_pivots)
{
    require_orthogonal(space);
    if (!is_isometry(X, space)) throw std::invalid_argument("reflect_decompose: not an isometry");
    const GF& F = *space.gf;
    int n = space.n;
    Mat P = congruence_to_standard(F, FormKind::orthogonal, space.gram);
    Mat Y = X;
    std::vector<std::vector<u8>> out;
    auto apply = [&](const std::vector<u8>& w) {
        out.push_back(w);
        Y = mat_mul(F, reflection(w, space), Y);
    };
    for (int jj = 0; jj < n; ++jj) {
        int j = reverse_pivots ? n - 1 - jj : jj;
        std::vector<u8> v = column(P, j);
        std::vector<u8> y = mat_vec(F, Y, v);
        if (y == v) continue;
        std::vector<u8> w = combine(F, y, F.neg(1), v);
        if (form(F, space, w, w) != 0) {
            apply(w);
        } else {
            apply(combine(F, y, 1, v));
            apply(v);
        }
    }
    if (Y != identity(n)) throw std::logic_error("reflect_decompose: residual is not the identity");
    return out;
}

Parity parity_of(const Mat& X, const FormSpace& space)
{
    const GF& F = *space.gf;
    auto vs = reflect_decompose(X, space);
    u8 theta = 1;
    for (const auto& v : vs) theta = F.mul(theta, form(F, space, v, v));
    Parity r;
    r.tp = square_class(*F.field(), theta) == SquareClass::nonsquare ? 1 : 0;
    r.t = static_cast<int>((vs.size() + r.tp) % 2);
    return r;
}

ParityGroup parity_group(const std::vector<Mat>& gens, const FormSpace& space)
{
    ParityGroup g;
    for (const auto& x : gens) g = g.with(parity_of(x, space));
    return g;
}

GeneratedGroup omega_kernel(const GeneratedGroup& R, const FormSpace& space)
{
    require_orthogonal(space);
    GeneratedGroup K(R.gf_ptr(), R.n());
    for (size_t i = 0; i < R.order(); ++i) {
        Mat x = R.element(i);
        if (K.contains(x)) continue;
        if (parity_of(x, space).is_zero()) K.add_generator(x);
    }
    return K;
}

}  // namespace radsub
