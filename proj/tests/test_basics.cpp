#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "radsub/basics.hpp"
#include "radsub/verify.hpp"

#include <set>

using namespace radsub;

namespace {

std::vector<std::string> label_strings(const std::vector<RadicalLabel>& ls)
{
    std::vector<std::string> out;
    for (const auto& r : ls) out.push_back(to_string(r));
    return out;
}

}  // namespace

TEST_CASE("label grammar round trip")
{
    for (const char* s : {"R4_{m=1,a=0,g=1,c=()}", "R0+_{m=1,a=0,g=0,c=(2)}", "R0+_{m=1,a=1,g=0,c=()}@disc-",
                          "R1_{m=2,a=1,g=0,c=(1,1)}", "R0-_{m=1,a=0,g=2,c=()}"}) {
        auto b = parse_basic_label(s, GroupKind::O);
        CHECK(to_string(b) == s);
    }
    CHECK_THROWS(parse_basic_label("R9_{m=1,a=0,g=0,c=()}", GroupKind::O));
    CHECK_THROWS(parse_basic_label("R1_{m=1,a=0}", GroupKind::O));
    CHECK_THROWS(parse_basic_label("R1_{m=0,a=0,g=0,c=()}", GroupKind::O));
}

TEST_CASE("extraspecial groups")
{
    auto gf3 = gf_make(3);
    CHECK(closure(gf3, 2, build_extraspecial(1, 1, 3, 1)).order() == 8);
    CHECK(closure(gf3, 2, build_extraspecial(-1, 1, 3, 1)).order() == 8);
    auto gf5 = gf_make(5);
    auto e = closure(gf5, 4, build_extraspecial(1, 2, 5, 1));
    CHECK(e.order() == 32);
    // Every square is central, hence +-I.
    for (size_t i = 0; i < e.order(); ++i) {
        Mat x = e.element(i);
        Mat s = mat_mul(*gf5, x, x);
        CHECK((s == identity(4) || s == scalar(4, 4)));
    }
    CHECK(closure(gf_make(9), 2, build_extraspecial(-1, 1, 3, -1)).order() == 8);
    CHECK_THROWS(build_extraspecial(1, 0, 3, 1));
}

TEST_CASE("build_basic examples")
{
    auto gl = build_basic(parse_basic_label("R1_{m=1,a=0,g=0,c=()}", GroupKind::GL), 5);
    CHECK(closure(gl.space.gf, 1, gl.gens).order() == 4);

    auto o = build_basic(parse_basic_label("R0+_{m=1,a=0,g=0,c=()}", GroupKind::O), 3);
    CHECK(closure(o.space.gf, 1, o.gens).order() == 2);

    // The construction has order 4 on Sp_2(3); this is what predicted_order follows.
    auto spl = parse_basic_label("R1_{m=1,a=0,g=0,c=()}", GroupKind::Sp);
    auto sp = build_basic(spl, 3);
    CHECK(closure(sp.space.gf, 2, sp.gens).order() == 4);
    CHECK(predicted_order(spl, 3) == 4);
}

TEST_CASE("predicted_order")
{
    CHECK(predicted_order(parse_basic_label("R0+_{m=1,a=0,g=2,c=()}", GroupKind::O), 7) == 32);
    for (const char* base : {"R1_{m=1,a=0,g=0,c=()}", "R4_{m=1,a=0,g=0,c=()}", "R0+_{m=1,a=0,g=1,c=()}"}) {
        auto b = parse_basic_label(base, GroupKind::O);
        auto w = b;
        w.c = {1};
        i64 o = predicted_order(b, 7);
        CHECK(predicted_order(w, 7) == o * o * 2);
    }
}

TEST_CASE("closure order equals predicted order on small labels")
{
    int n = 0;
    for (i64 q : {3, 5, 7}) {
        for (GroupKind k : {GroupKind::GL, GroupKind::GU, GroupKind::Sp, GroupKind::O}) {
            for (int d = 1; d <= 4; ++d) {
                for (int disc : k == GroupKind::O ? std::vector<int>{1, -1} : std::vector<int>{0}) {
                    for (const auto& b : basic_labels_of_dim(k, d, q, disc)) {
                        CAPTURE(to_string(b));
                        auto g = build_basic(b, q);
                        for (const auto& x : g.gens) CHECK(is_isometry(x, g.space));
                        CHECK(static_cast<i64>(closure(g.space.gf, d, g.gens).order()) == predicted_order(b, q));
                        CHECK(label_dim(b, q) == d);
                        ++n;
                    }
                }
            }
        }
    }
    CHECK(n > 20);
}

TEST_CASE("every enumerated label builds a radical subgroup")
{
    struct Case {
        GroupKind kind;
        int n;
        i64 q;
        Variant v;
    };
    for (auto c : {Case{GroupKind::GL, 2, 3, Variant::none}, Case{GroupKind::GL, 2, 5, Variant::none},
                   Case{GroupKind::GU, 2, 3, Variant::none}, Case{GroupKind::Sp, 2, 3, Variant::none},
                   Case{GroupKind::Sp, 2, 5, Variant::none}, Case{GroupKind::Sp, 4, 3, Variant::none},
                   Case{GroupKind::O, 3, 3, Variant::plus}, Case{GroupKind::O, 4, 3, Variant::plus},
                   Case{GroupKind::O, 4, 3, Variant::minus}, Case{GroupKind::GL, 3, 3, Variant::none}}) {
        auto A = ambient_group(c.kind, c.n, c.q, c.v);
        for (const auto& lab : enumerate_labels(c.kind, c.n, c.q, 2, c.v)) {
            CAPTURE(to_string(lab));
            auto g = build_radical(lab);
            for (const auto& x : g.gens) CHECK(A.group.contains(x));
            auto R = closure(g.space.gf, c.n, g.gens);
            CHECK(static_cast<int>(R.order()) == 1 << radical_log_order(lab));
            CHECK(is_radical(A.group, R, 2));
        }
    }
}

TEST_CASE("label enumeration examples")
{
    CHECK(label_strings(enumerate_labels(GroupKind::GL, 1, 5)) == std::vector<std::string>{"R1_{m=1,a=0,g=0,c=()}"});
    CHECK(label_strings(enumerate_labels(GroupKind::O, 2, 3, 2, Variant::plus)) ==
          std::vector<std::string>{"R4_{m=1,a=0,g=0,c=()}"});
    CHECK_THROWS(enumerate_labels(GroupKind::O, 2, 3, 2, Variant::none));
    CHECK_THROWS(enumerate_labels(GroupKind::Sp, 4, 3, 3));
    // Frozen oracle-backed class counts.
    CHECK(enumerate_labels(GroupKind::Sp, 4, 3).size() == 4);
    CHECK(enumerate_labels(GroupKind::O, 4, 3, 2, Variant::minus).size() == 4);
    CHECK(enumerate_labels(GroupKind::GL, 3, 3).size() == 4);
}

TEST_CASE("labels match the oracle on small groups")
{
    CHECK(compare_with_oracle(GroupKind::GL, 2, 5).match);
    CHECK(compare_with_oracle(GroupKind::O, 3, 3, 2, Variant::minus).match);
    CHECK(compare_with_oracle(GroupKind::Sp, 2, 5).match);
    CHECK(compare_with_oracle(GroupKind::GL, 2, 4, 3).match);
}

TEST_CASE("weight labels")
{
    auto w1p = weight_labels(GroupKind::O, 1, 3, true, Variant::plus);
    auto w1m = weight_labels(GroupKind::O, 1, 3, true, Variant::minus);
    CHECK(w1p.size() + w1m.size() == 2);
    CHECK(label_strings(weight_labels(GroupKind::O, 2, 3, true, Variant::plus)) ==
          std::vector<std::string>{"R4_{m=1,a=0,g=0,c=()}"});
    auto w4 = label_strings(weight_labels(GroupKind::O, 4, 3, true, Variant::plus));
    CHECK(std::set<std::string>(w4.begin(), w4.end()) ==
          std::set<std::string>{"R4_{m=1,a=0,g=1,c=()}", "R0+_{m=1,a=0,g=0,c=(2)}",
                                "R0+_{m=1,a=1,g=0,c=(2)}", "R4_{m=1,a=0,g=0,c=(1)}"});
}

TEST_CASE("SL_3 candidates")
{
    auto ls = sl3_radical_labels(3, 1);
    REQUIRE(ls.size() == 6);
    std::vector<int> logs;
    for (const auto& r : ls) logs.push_back(radical_log_order(r));
    CHECK(logs == std::vector<int>{0, 1, 2, 3, 3, 4});
}
