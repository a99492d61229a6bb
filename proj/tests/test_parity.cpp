#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "radsub/basics.hpp"
#include "radsub/parity.hpp"
#include "radsub/verify.hpp"

using namespace radsub;

namespace {

Mat product_of_reflections(const std::vector<std::vector<u8>>& vs, const FormSpace& space)
{
    Mat x = identity(space.n);
    for (const auto& v : vs) x = mat_mul(*space.gf, x, reflection(v, space));
    return x;
}

/// -I on the span of the basis vectors listed in `idx`.
Mat minus_on(const FormSpace& space, const std::vector<int>& idx)
{
    Mat x = identity(space.n);
    for (int i : idx) x(i, i) = space.gf->from_int(-1);
    return x;
}

bool in_det_one(const ParityGroup& g)
{
    for (const auto& x : g.elements())
        if ((x.t + x.tp) % 2) return false;
    return true;
}

}  // namespace

TEST_CASE("Parity and ParityGroup basics")
{
    CHECK(to_string(Parity{1, 0}) == "(1,0)");
    CHECK((Parity{1, 0} ^ Parity{1, 1}) == Parity{0, 1});
    CHECK(ParityGroup::trivial().size() == 1);
    CHECK(ParityGroup::full().size() == 4);
    auto g = ParityGroup::trivial().with({1, 1});
    CHECK(to_string(g) == "{(0,0),(1,1)}");
    CHECK(g.with({1, 0}) == ParityGroup::full());
}

TEST_CASE("reflect_decompose examples")
{
    auto s = standard_space(FormKind::orthogonal, 2, 3, Variant::plus);
    CHECK(reflect_decompose(identity(2), s).empty());

    std::vector<u8> v{1, 1};
    Mat r = reflection(v, s);
    auto d = reflect_decompose(r, s);
    CHECK(d.size() == 1);
    CHECK(product_of_reflections(d, s) == r);

    Mat m = scalar(2, 2);
    auto dm = reflect_decompose(m, s);
    CHECK(dm.size() == 2);
    CHECK(product_of_reflections(dm, s) == m);

    Mat bad = identity(2);
    bad(0, 1) = 1;
    CHECK_THROWS(reflect_decompose(bad, s));
}

TEST_CASE("decompositions reproduce every element of small orthogonal groups")
{
    for (auto [n, q, v] : {std::tuple{3, 3, Variant::plus}, std::tuple{3, 5, Variant::minus},
                           std::tuple{4, 3, Variant::plus}, std::tuple{4, 3, Variant::minus}}) {
        auto A = ambient_group(GroupKind::O, n, q, v);
        for (size_t i = 0; i < A.group.order(); ++i) {
            Mat x = A.group.element(i);
            auto d = reflect_decompose(x, A.space);
            auto dr = reflect_decompose(x, A.space, true);
            CHECK(d.size() <= static_cast<size_t>(2 * n));
            CHECK(product_of_reflections(d, A.space) == x);
            CHECK(product_of_reflections(dr, A.space) == x);
        }
    }
}

TEST_CASE("parity of -I on a subspace")
{
    for (i64 q : {3, 5, 7, 9}) {
        for (int n = 1; n <= 6; ++n) {
            auto plus = standard_space(FormKind::orthogonal, n, q, Variant::plus);
            auto minus = standard_space(FormKind::orthogonal, n, q, Variant::minus);
            for (int k = 1; k <= n; ++k) {
                std::vector<int> first, last;
                for (int i = 0; i < k; ++i) first.push_back(i);
                for (int i = n - k; i < n; ++i) last.push_back(i);
                // disc(W) = + when W avoids the nonsquare diagonal entry.
                Parity want_plus = k % 2 == 0 ? Parity{0, 0} : Parity{1, 0};
                Parity want_minus = k % 2 == 0 ? Parity{1, 1} : Parity{0, 1};
                CHECK(parity_of(minus_on(plus, first), plus) == want_plus);
                CHECK(parity_of(minus_on(minus, last), minus) == want_minus);
            }
        }
    }
}

TEST_CASE("rotations of O_2^+(q)")
{
    for (i64 q : {3, 5, 7, 9, 11, 13}) {
        auto r = verify_rotation_parity(q);
        CHECK(r.rotations == q - q_params(q).eps);
        CHECK(r.mismatches == 0);
    }
}

TEST_CASE("centralizer of a square root of -1")
{
    // Y commuting with X0 = diag(J, ..., J), J^2 = -1, is F_q[i]-linear with
    // i acting as X0; its parity is (t,t) with det(Y)^{(q-eps)/2} = (-1)^t.
    for (i64 q : {3, 5}) {
        for (int m : {1, 2}) {
            int n = 2 * m;
            auto A = ambient_group(GroupKind::O, n, q, Variant::plus);
            const GF& F = A.group.gf();
            Mat X0(n, n);
            for (int j = 0; j < m; ++j) {
                X0(2 * j, 2 * j + 1) = 1;
                X0(2 * j + 1, 2 * j) = F.from_int(-1);
            }
            auto C = centralizer(A.group, closure(A.group.gf_ptr(), n, {X0}));
            int eps = q_params(q).eps;
            FieldPtr small = F.field();
            FieldPtr big = eps == 1 ? small : field_make(small->p(), 2 * small->k());
            Embedding emb(small, big);
            i64 root = -1;
            for (i64 x = 0; x < big->q() && root < 0; ++x)
                if (big->mul(x, x) == big->neg(1)) root = x;
            REQUIRE(root >= 0);
            int checked = 0;
            for (size_t idx = 0; idx < C.order(); ++idx) {
                Mat Y = C.element(idx);
                auto z = [&](int j, int k) {
                    return big->sub(emb(Y(2 * j, 2 * k)), big->mul(root, emb(Y(2 * j + 1, 2 * k))));
                };
                i64 d = m == 1 ? z(0, 0) : big->sub(big->mul(z(0, 0), z(1, 1)), big->mul(z(0, 1), z(1, 0)));
                i64 s = big->pow(d, (q - eps) / 2);
                REQUIRE((s == 1 || s == big->neg(1)));
                int t = s == 1 ? 0 : 1;
                CHECK(parity_of(Y, A.space) == Parity{t, t});
                ++checked;
            }
            CHECK(checked > 0);
        }
    }
}

TEST_CASE("parity fuzz in O_4^+(3) and O_6^+(3)")
{
    auto a = parity_fuzz(4, 3, Variant::plus, 2000, 11);
    CHECK(a.ok());
    auto b = parity_fuzz(6, 3, Variant::plus, 2000, 12);
    CHECK(b.ok());
    auto c = parity_fuzz(5, 7, Variant::minus, 1000, 13);
    CHECK(c.ok());
}

TEST_CASE("parity_group is the span of generator parities")
{
    auto s = standard_space(FormKind::orthogonal, 2, 3, Variant::plus);
    auto b = build_basic(parse_basic_label("R4_{m=1,a=0,g=0,c=()}", GroupKind::O), 3);
    CHECK(parity_group(b.gens, b.space) == ParityGroup::full());
    CHECK(parity_group({}, s) == ParityGroup::trivial());
}

TEST_CASE("omega_kernel")
{
    auto b = build_basic(parse_basic_label("R4_{m=1,a=0,g=0,c=()}", GroupKind::O), 3);
    auto R = closure(b.space.gf, 2, b.gens);
    CHECK(R.order() == 8);
    CHECK(omega_kernel(R, b.space).order() == 2);

    auto line = standard_space(FormKind::orthogonal, 1, 3, Variant::plus);
    auto pm = closure(line.gf, 1, {scalar(1, 2)});
    CHECK(omega_kernel(pm, line).order() == 1);

    auto b3 = build_basic(parse_basic_label("R3_{m=1,a=0,g=0,c=()}", GroupKind::O), 3);
    auto R3 = closure(b3.space.gf, b3.space.n, b3.gens);
    CHECK(omega_kernel(R3, b3.space).order() == R3.order());
}

TEST_CASE("parities of basic subgroups follow the parity lemmas")
{
    int checked = 0;
    for (i64 q : {3, 7}) {
        for (int d = 1; d <= 8; ++d) {
            for (bool generic : {false, true}) {
                for (const auto& lab : basic_labels_of_dim(GroupKind::O, d, q, 1, generic)) {
                    if (generic && label_legal(lab, q, false)) continue;
                    CAPTURE(to_string(lab));
                    CAPTURE(q);
                    auto b = build_basic(lab, q);
                    ParityGroup g = parity_group(b.gens, b.space);
                    const int i = lab.i, m = lab.m, al = lab.alpha, ga = lab.gamma;
                    const int cs = lab.csum();
                    if (i == 3) CHECK(g == ParityGroup::trivial());
                    if (i == 1 || i == 2) CHECK(in_det_one(g));
                    if (i >= 1 && (m % 2 == 0 || ga >= 1)) CHECK(g == ParityGroup::trivial());
                    if (i == 0 && ga >= 2) CHECK(g == ParityGroup::trivial());
                    if (i == 0 && lab.eta == -1 && al == 0 && ga >= 1) CHECK(g == ParityGroup::trivial());
                    if (i == 0 && lab.eta == 1 && !(m % 2 == 1 && ga <= 1)) CHECK(in_det_one(g));
                    if (i == 4 && !(m % 2 == 1 && al == 0 && ga == 0)) CHECK(in_det_one(g));
                    if (i == 0 && lab.eta == 1 && ga == 0 && cs != 1) {
                        ParityGroup want;
                        if (m % 2 == 0)
                            want = al == 0 ? ParityGroup::trivial() : ParityGroup::of({{1, 1}});
                        else
                            want = al == 0 ? ParityGroup::of({{1, 0}}) : ParityGroup::of({{0, 1}});
                        CHECK(g == want);
                    }
                    if (m == 1 && ga == 0 && lab.c.empty() && i >= 1) {
                        if (i == 3)
                            CHECK(g == ParityGroup::trivial());
                        else if (i == 4 && al == 0)
                            CHECK(g == ParityGroup::full());
                        else
                            CHECK(g == ParityGroup::of({{1, 1}}));
                    }
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 50);
}
