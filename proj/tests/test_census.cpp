#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "radsub/census.hpp"

#include <algorithm>
#include <random>

using namespace radsub;

namespace {

using Poly = std::vector<long long>;

Poly mul(const Poly& a, const Poly& b)
{
    Poly c(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

/// 1 / (1 - t^k) truncated.
Poly geom(int k, int N)
{
    Poly p(N + 1, 0);
    for (int i = 0; i <= N; i += k) p[i] = 1;
    return p;
}

/// 1 + t^k truncated.
Poly binom(int k, int N)
{
    Poly p(N + 1, 0);
    p[0] = 1;
    if (k <= N) p[k] += 1;
    return p;
}

long long coef(const PSeries& s, int k) { return static_cast<long long>(s[k]); }

/// Number of partitions of n via Euler's pentagonal recurrence.
std::vector<long long> partition_numbers(int N)
{
    std::vector<long long> p(N + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= N; ++n)
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            long long s = k % 2 ? 1 : -1;
            p[n] += s * p[n - g1];
            if (g2 <= n) p[n] += s * p[n - g2];
        }
    return p;
}

/// 2-core by direct hook-length inspection: remove a removable domino while one exists.
bool has_hook_two(const Parts& lam)
{
    for (size_t i = 0; i < lam.size(); ++i)
        for (int j = 0; j < lam[i]; ++j) {
            int arm = lam[i] - j - 1;
            int leg = 0;
            for (size_t k = i + 1; k < lam.size() && lam[k] > j; ++k) ++leg;
            if (arm + leg + 1 == 2) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("partition counts")
{
    auto pn = partition_numbers(30);
    for (int n = 1; n <= 30; ++n) CHECK(static_cast<long long>(partitions(n).size()) == pn[n]);
    auto p4 = partitions(4);
    CHECK(p4.front() == Parts{4});
    CHECK(p4.back() == Parts{1, 1, 1, 1});
}

TEST_CASE("partitions_orth")
{
    auto w1 = partitions_orth(1);
    REQUIRE(w1.size() == 1);
    CHECK(w1[0].parts == Parts{1});
    CHECK(w1[0].a() == 1);
    CHECK(w1[0].kappa() == 1);

    auto w2 = partitions_orth(2);
    REQUIRE(w2.size() == 1);
    CHECK(w2[0].parts == Parts{1, 1});

    auto w4 = partitions_orth(4);
    std::vector<Parts> got;
    for (const auto& l : w4) got.push_back(l.parts);
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<Parts>{{1, 1, 1, 1}, {2, 2}, {3, 1}});
}

TEST_CASE("partition statistics")
{
    Partition l{{5, 3, 3, 2, 2, 1}};
    CHECK(l.size() == 16);
    CHECK(l.mult(3) == 2);
    CHECK(l.a() == 3);
    CHECK(l.kappa() == 2);
    CHECK(l.b() == 2);
    CHECK(l.iota() == 1);
    Partition e{{2, 2}};
    CHECK(e.a() == 0);
    CHECK(e.delta() == 1);
    CHECK(e.iota() == 0);
    for (int w = 1; w <= 16; ++w)
        for (const auto& lam : partitions_orth(w)) {
            int d = lam.delta();
            CHECK((d == 1 || d == lam.a() || d == lam.a() - 1));
        }
}

TEST_CASE("2-cores are staircases")
{
    for (int n = 1; n <= 14; ++n)
        for (const auto& p : partitions(n)) {
            bool core = !has_hook_two(p);
            CHECK(is_two_core(p) == core);
            bool stair = false;
            for (int k = 1; k * (k + 1) / 2 <= n; ++k) stair = stair || p == staircase(k);
            CHECK(core == stair);
            CHECK(two_core(p) == two_core_by_stripping(p));
        }
    auto cores = two_cores_upto(10);
    CHECK(cores.size() == 5);
}

TEST_CASE("2-quotients and core towers round trip")
{
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : partitions(n)) {
            auto tq = two_quotient(p);
            CHECK(from_two_quotient(tq) == p);
            int sz = 0;
            for (int x : tq.core) sz += x;
            for (int x : tq.q0) sz += 2 * x;
            for (int x : tq.q1) sz += 2 * x;
            CHECK(sz == n);
            CHECK(from_core_tower(core_tower(p)) == p);
        }
}

TEST_CASE("power series ring laws")
{
    const int N = 40;
    std::mt19937_64 rng(3);
    auto random_series = [&](bool unit) {
        PSeries s(N);
        for (int k = 0; k <= N; ++k) s.at(k) = static_cast<Coef>(static_cast<int>(rng() % 7) - 3);
        if (unit) s.at(0) = 1;
        return s;
    };
    for (int it = 0; it < 20; ++it) {
        auto f = random_series(true), g = random_series(false), h = random_series(false);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * f.inverse() == PSeries::one(N));
        CHECK(f.subst_neg().subst_neg() == f);
    }
    CHECK_THROWS(PSeries::monomial(1, 2, N).inverse());
    CHECK_THROWS(PSeries::monomial(0, 3, N).divided(2));
}

TEST_CASE("named series against independent products")
{
    const int N = 64;
    Poly s51(N + 1, 0), s511(N + 1, 0), s54(N + 1, 0);
    s51[0] = s511[0] = s54[0] = 1;
    for (int k = 1; k <= N; ++k) {
        if (2 * k - 1 <= N) s51 = mul(mul(s51, binom(2 * k - 1, N)), binom(2 * k - 1, N));
        if (2 * k <= N) s51 = mul(s51, geom(2 * k, N));
        if (4 * k <= N) s511 = mul(s511, geom(4 * k, N));
        if (2 * k - 1 <= N) s54 = mul(s54, binom(2 * k - 1, N));
        if (4 * k <= N) s54 = mul(s54, geom(4 * k, N));
    }
    auto g51 = series_named("5.1", N), g511 = series_named("5.1-1", N), g54 = series_named("5.4", N);
    auto g55 = series_named("5.5", N);
    for (int k = 0; k <= N; ++k) {
        CHECK(coef(g51, k) == s51[k]);
        CHECK(coef(g511, k) == s511[k]);
        CHECK(coef(g54, k) == s54[k]);
        CHECK(coef(g55, k) == s54[k]);
    }
    CHECK(coef(g51, 2) == 2);
    CHECK(coef(g511, 4) == 1);
    CHECK_THROWS(series_named("5.2", N));
    CHECK_THROWS(series_named("5.1", 300));
}

TEST_CASE("closed and expanded series agree, coefficients are nonnegative")
{
    for (const auto& id : series_ids()) {
        auto a = series_named(id, 64);
        CHECK(a == series_expanded(id, 64));
        for (int k = 0; k <= 64; ++k) CHECK(a[k] >= 0);
    }
    CHECK(series_ids().size() == 9);
}

TEST_CASE("theta series")
{
    auto th = theta_series(ThetaArg::t, 64);
    CHECK(coef(th, 0) == 1);
    CHECK(coef(th, 1) == 1);
    CHECK(coef(th, 2) == 0);
    CHECK(coef(th, 3) == 1);
    CHECK(th == theta_jacobi(64));
    auto t2 = theta_series(ThetaArg::t2, 64);
    for (int k = 1; k <= 64; k += 2) CHECK(coef(t2, k) == 0);
}

TEST_CASE("unipotent and weight counts")
{
    CHECK(count_unipotent(2, UnipotentTag::O_plus) + count_unipotent(2, UnipotentTag::O_minus) == 2);
    CHECK(count_unipotent(4, UnipotentTag::O_plus) - count_unipotent(4, UnipotentTag::O_minus) == 1);
    for (int w = 1; w <= 21; w += 2)
        CHECK(count_unipotent(w, UnipotentTag::SO_plus) == count_unipotent(w, UnipotentTag::O_plus));
    CHECK(count_principal_weights(1, WeightTag::O_plus) == 1);
    CHECK_THROWS(count_unipotent(4, UnipotentTag::Spin_minus));
    CHECK_THROWS(count_unipotent(0, UnipotentTag::O_plus));
    // Differences between the two signs vanish unless 4 | w.
    for (int w = 1; w <= 28; ++w)
        if (w % 4) CHECK(count_unipotent(w, UnipotentTag::O_plus) == count_unipotent(w, UnipotentTag::O_minus));
}

TEST_CASE("all identities hold up to w = 28")
{
    auto rows = verify_identities(28);
    int failed = 0;
    for (const auto& r : rows)
        if (!r.pass) {
            ++failed;
            MESSAGE("w=" << r.w << " " << r.tag);
        }
    CHECK(failed == 0);
    CHECK(rows.size() > 500);
    auto csv = identities_csv(verify_identities(2));
    CHECK(csv.rfind("w,tag,gf_value,enum_value,pass\n1,5.1,2,2,true\n", 0) == 0);
    CHECK_THROWS(verify_identities(65));
}

TEST_CASE("coefficients stay exact at large degree")
{
    CHECK(coef_to_string(series_named("5.1", 256)[256]) == "512337130113530");
}
