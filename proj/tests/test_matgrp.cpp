#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "radsub/matgrp.hpp"
#include "radsub/verify.hpp"

using namespace radsub;

namespace {

Mat m2(int a, int b, int c, int d)
{
    Mat x(2, 2);
    x(0, 0) = static_cast<u8>(a);
    x(0, 1) = static_cast<u8>(b);
    x(1, 0) = static_cast<u8>(c);
    x(1, 1) = static_cast<u8>(d);
    return x;
}

}  // namespace

TEST_CASE("standard spaces")
{
    auto o2 = standard_space(FormKind::orthogonal, 2, 3, Variant::plus);
    CHECK(o2.gram == identity(2));
    CHECK(discriminant(*o2.gf, o2.gram) == 1);

    auto sp4 = standard_space(FormKind::symplectic, 4, 3);
    const GF& F = *sp4.gf;
    CHECK(transpose(sp4.gram) == mat_scale(F, sp4.gram, F.from_int(-1)));
    CHECK(mat_mul(F, sp4.gram, sp4.gram) == scalar(4, F.from_int(-1)));

    auto o2m = standard_space(FormKind::orthogonal, 2, 5, Variant::minus);
    CHECK(o2m.gram == m2(1, 0, 0, 2));
    CHECK(discriminant(*o2m.gf, o2m.gram) == -1);

    CHECK_THROWS(standard_space(FormKind::symplectic, 3, 3));
    CHECK_THROWS(standard_space(FormKind::orthogonal, 2, 3, Variant::none));
}

TEST_CASE("is_isometry")
{
    auto o3 = standard_space(FormKind::orthogonal, 3, 3, Variant::plus);
    CHECK(is_isometry(identity(3), o3));
    CHECK(is_isometry(scalar(3, 2), o3));
    auto o2 = standard_space(FormKind::orthogonal, 2, 3, Variant::plus);
    // 2^2 = 1 in F_3, so diag(2, 1) is the reflection in e_1.
    CHECK(is_isometry(m2(2, 0, 0, 1), o2));
    CHECK_FALSE(is_isometry(m2(2, 0, 0, 1), standard_space(FormKind::orthogonal, 2, 5, Variant::plus)));
    CHECK_FALSE(is_isometry(m2(1, 1, 0, 1), o2));
    CHECK_THROWS(is_isometry(identity(3), o2));
}

TEST_CASE("closure")
{
    auto gf = gf_make(3);
    CHECK(closure(gf, 2, {identity(2)}).order() == 1);
    CHECK(closure(gf, 2, {m2(2, 0, 0, 1), m2(0, 1, 1, 0)}).order() == 8);
    CHECK(closure(gf, 2, {m2(1, 1, 0, 1), m2(1, 0, 1, 1)}).order() == 24);
    CHECK_THROWS_AS(closure(gf, 2, {m2(1, 1, 0, 1), m2(1, 0, 1, 1)}, 10), CapExceeded);
    CHECK_THROWS(closure(gf, 2, {m2(1, 1, 1, 1)}));
}

TEST_CASE("ambient orders agree with the classical formulas")
{
    CHECK(ambient_group(GroupKind::GL, 2, 3).group.order() == 48);
    CHECK(ambient_group(GroupKind::GL, 2, 5).group.order() == 480);
    CHECK(ambient_group(GroupKind::GU, 2, 3).group.order() == 96);
    CHECK(ambient_group(GroupKind::Sp, 2, 3).group.order() == 24);
    CHECK(ambient_group(GroupKind::Sp, 4, 3).group.order() == 51840);
    CHECK(ambient_group(GroupKind::O, 4, 3, Variant::plus).group.order() == 1152);
    CHECK(ambient_group(GroupKind::O, 4, 3, Variant::minus).group.order() == 1440);
    CHECK(ambient_group(GroupKind::SL, 3, 3).group.order() == 5616);
    CHECK(ambient_group(GroupKind::SU, 3, 3).group.order() == 6048);
    CHECK(classical_order(GroupKind::GL, 3, 3) == 11232);
}

TEST_CASE("normalizer, centralizer, core and Sylow in GL_2(3)")
{
    auto G = ambient_group(GroupKind::GL, 2, 3).group;
    auto one = closure(G.gf_ptr(), 2, {identity(2)});
    CHECK(normalizer(G, one).order() == 48);
    auto Z = closure(G.gf_ptr(), 2, {scalar(2, 2)});
    CHECK(centralizer(G, Z).order() == 48);

    auto S = sylow_p(G, 2);
    CHECK(S.order() == 16);
    // The semidihedral Sylow 2-subgroup is self-normalizing.
    CHECK(normalizer(G, S).order() == 16);
    CHECK(core_p(S, 2).order() == 16);
    auto O2 = core_p(G, 2);
    CHECK(O2.order() == 8);
    CHECK(is_radical(G, S, 2));
    CHECK_FALSE(is_radical(G, one, 2));

    auto sl = ambient_group(GroupKind::Sp, 2, 3).group;
    auto pm = closure(sl.gf_ptr(), 2, {scalar(2, 2)});
    CHECK_FALSE(is_radical(sl, pm, 2));
    CHECK(core_p(sl, 2).order() == 8);
    CHECK(sylow_p(sl, 2).order() == 8);

    // An S_3 inside GL_2(3) has no normal 2-subgroup.
    auto s3 = closure(G.gf_ptr(), 2, {m2(1, 1, 0, 1), m2(2, 0, 0, 1)});
    CHECK(s3.order() == 6);
    CHECK(core_p(s3, 2).order() == 1);
}

TEST_CASE("Sylow 3 of GL_2(4)")
{
    auto G = ambient_group(GroupKind::GL, 2, 4).group;
    CHECK(G.order() == 180);
    CHECK(sylow_p(G, 3).order() == 9);
}

TEST_CASE("radical class oracle on small groups")
{
    auto sp2 = ambient_group(GroupKind::Sp, 2, 3).group;
    auto c = enumerate_radical_classes(sp2, 2);
    REQUIRE(c.size() == 1);
    CHECK(c[0].rep.order() == 8);

    auto gl1 = ambient_group(GroupKind::GL, 1, 5).group;
    auto c1 = enumerate_radical_classes(gl1, 2);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].rep.order() == 4);

    // Frozen oracle values for GL_2(3).
    auto gl = ambient_group(GroupKind::GL, 2, 3).group;
    auto c2 = enumerate_radical_classes(gl, 2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].rep.order() == 8);
    CHECK(c2[1].rep.order() == 16);

    auto O2 = core_p(gl, 2);
    for (const auto& rc : c2) {
        for (size_t i = 0; i < O2.order(); ++i) CHECK(rc.rep.contains(O2.element(i)));
        CHECK(gl.order() % rc.rep.order() == 0);
        auto N = normalizer(gl, rc.rep);
        auto C = centralizer(gl, rc.rep);
        CHECK(N.order() % C.order() == 0);
        CHECK(normalizer(N, C).order() == N.order());
    }
}

TEST_CASE("radical classes of a direct product are products of classes")
{
    // SL_2(3) x GL_1(5) embedded block diagonally in GL_3(5) is not over one
    // field, so use SL_2(3) x GL_1(3) = block diagonal inside GL_3(3).
    auto gf = gf_make(3);
    auto sl = ambient_group(GroupKind::Sp, 2, 3).group;
    std::vector<Mat> gens;
    for (const auto& g : sl.gens()) gens.push_back(block_diag({g, identity(1)}));
    gens.push_back(block_diag({identity(2), scalar(1, 2)}));
    auto P = closure(gf, 3, gens);
    CHECK(P.order() == 48);
    auto cp = enumerate_radical_classes(P, 2);
    auto c1 = enumerate_radical_classes(sl, 2);
    auto c2 = enumerate_radical_classes(ambient_group(GroupKind::GL, 1, 3).group, 2);
    CHECK(cp.size() == c1.size() * c2.size());
}

TEST_CASE("oracle runs are deterministic")
{
    auto a = enumerate_radical_classes(ambient_group(GroupKind::O, 3, 3, Variant::plus).group, 2);
    auto b = enumerate_radical_classes(ambient_group(GroupKind::O, 3, 3, Variant::plus).group, 2);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].rep.sorted_elements() == b[i].rep.sorted_elements());
}

TEST_CASE("matrix serialization round trip")
{
    SerializedMatrix s;
    s.q = 3;
    s.kind = GroupKind::O;
    s.n = 2;
    s.variant = Variant::plus;
    s.m = m2(0, 1, 1, 0);
    std::string text = serialize_matrix(s);
    CHECK(text == "q=3;kind=O;n=2;variant=+;rows=0,1;1,0");
    auto back = parse_matrix(text);
    CHECK(back.m == s.m);
    CHECK(back.q == 3);
    CHECK(back.variant == Variant::plus);
    CHECK_THROWS(parse_matrix("q=3;kind=O;n=2;rows=0,1"));
    CHECK_THROWS(parse_matrix("garbage"));
}

TEST_CASE("oracle comparison for GL_2(3)")
{
    auto r = compare_with_oracle(GroupKind::GL, 2, 3);
    CHECK(r.match);
    CHECK(r.oracle_orders == std::vector<i64>{8, 16});
}
