#include "radsub/verify.hpp"

#include "radsub/forms.hpp"

#include <algorithm>
#include <random>

namespace radsub {

OracleComparison compare_with_oracle(GroupKind kind, int n, i64 q, int p, Variant variant, size_t cap)
{
    OracleComparison out;
    out.labels = enumerate_labels(kind, n, q, p, variant);
    for (const auto& r : out.labels) out.label_orders.push_back(ipow(p, radical_log_order(r)));
    Ambient A = ambient_group(kind, n, q, variant, cap);
    out.ambient_order = static_cast<i64>(A.group.order());
    for (const auto& c : enumerate_radical_classes(A.group, p, cap))
        out.oracle_orders.push_back(static_cast<i64>(c.rep.order()));
    std::sort(out.label_orders.begin(), out.label_orders.end());
    std::sort(out.oracle_orders.begin(), out.oracle_orders.end());
    out.match = out.label_orders == out.oracle_orders;
    return out;
}

RotationParityReport verify_rotation_parity(i64 q)
{
    RotationParityReport out;
    out.q = q;
    FormSpace space = standard_space(FormKind::orthogonal, 2, q, Variant::plus);
    const GF& F = *space.gf;
    FieldPtr small = F.field();
    FieldPtr big = field_make(small->p(), 2 * small->k());
    Embedding emb(small, big);
    i64 minus_one = big->neg(1);
    i64 root = -1;
    for (i64 x = 0; x < big->q() && root < 0; ++x)
        if (big->mul(x, x) == minus_one) root = x;
    int eps = q_params(q).eps;
    i64 e = (q - eps) / 2;
    for (int a = 0; a < F.q(); ++a) {
        for (int b = 0; b < F.q(); ++b) {
            if (F.add(F.mul(a, a), F.mul(b, b)) != 1) continue;
            Mat X(2, 2);
            X(0, 0) = static_cast<u8>(a);
            X(0, 1) = static_cast<u8>(b);
            X(1, 0) = F.neg(static_cast<u8>(b));
            X(1, 1) = static_cast<u8>(a);
            ++out.rotations;
            i64 z = big->pow(big->add(emb(a), big->mul(root, emb(b))), e);
            if (z != 1 && z != minus_one) {
                ++out.mismatches;
                continue;
            }
            int t = z == 1 ? 0 : 1;
            if (!(parity_of(X, space) == Parity{t, t})) ++out.mismatches;
        }
    }
    return out;
}

namespace {

Parity parity_of_word(const GF& F, const FormSpace& space, const std::vector<std::vector<u8>>& vs)
{
    u8 theta = 1;
    for (const auto& v : vs) theta = F.mul(theta, form_value(F, space.gram, v, v, false));
    Parity p;
    p.tp = square_class(*F.field(), theta) == SquareClass::nonsquare ? 1 : 0;
    p.t = (static_cast<int>(vs.size()) + p.tp) % 2;
    return p;
}

}  // namespace

ParityFuzzReport parity_fuzz(int n, i64 q, Variant variant, int words, std::uint64_t seed)
{
    ParityFuzzReport out;
    out.n = n;
    out.q = q;
    out.words = words;
    FormSpace space = standard_space(FormKind::orthogonal, n, q, variant);
    const GF& F = *space.gf;
    std::mt19937_64 rng(seed);
    auto random_anisotropic = [&] {
        std::vector<u8> v(static_cast<size_t>(n));
        for (;;) {
            for (auto& x : v) x = static_cast<u8>(rng() % static_cast<std::uint64_t>(F.q()));
            if (form_value(F, space.gram, v, v, false) != 0) return v;
        }
    };
    auto random_word = [&] {
        std::vector<std::vector<u8>> vs(1 + rng() % 8);
        for (auto& v : vs) v = random_anisotropic();
        return vs;
    };
    auto product = [&](const std::vector<std::vector<u8>>& vs) {
        Mat X = identity(n);
        for (const auto& v : vs) X = mat_mul(F, X, reflection(v, space));
        return X;
    };
    for (int w = 0; w < words; ++w) {
        auto wx = random_word(), wy = random_word();
        Mat X = product(wx), Y = product(wy);
        Parity px = parity_of(X, space), py = parity_of(Y, space);
        Parity pxy = parity_of(mat_mul(F, X, Y), space);
        if (!(pxy == (px ^ py))) ++out.hom_failures;
        if (!(px == parity_of_word(F, space, wx)) || !(py == parity_of_word(F, space, wy))) ++out.word_failures;
        int det_bit = det(F, X) == 1 ? 0 : 1;
        if (((px.t + px.tp) & 1) != det_bit) ++out.det_failures;
        if (!(px == parity_of_word(F, space, reflect_decompose(X, space, true)))) ++out.pivot_failures;
    }
    return out;
}

}  // namespace radsub
