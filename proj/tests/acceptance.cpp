/** @file acceptance.cpp
 *  Runs the eight acceptance criteria and prints one PASS/FAIL line each.
 *
 *  `--expect-fail 2,7` declares criteria that are known to fail; the exit
 *  code is 0 exactly when the failing set equals the declared set.
 */

#include "radsub/census.hpp"
#include "radsub/f4.hpp"
#include "radsub/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace radsub;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string join(const std::vector<i64>& xs)
{
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

std::string group_name(GroupKind k, int n, i64 q, Variant v)
{
    std::string s = to_string(k) + std::to_string(n) + "(" + std::to_string(q) + ")";
    if (v == Variant::plus) s += "+";
    if (v == Variant::minus) s += "-";
    return s;
}

Outcome oracle_agreement()
{
    struct Case {
        GroupKind kind;
        int n;
        i64 q;
        Variant v;
    };
    const std::vector<Case> cases{
        {GroupKind::GL, 2, 3, Variant::none},  {GroupKind::GL, 2, 5, Variant::none},
        {GroupKind::GL, 3, 3, Variant::none},  {GroupKind::GU, 2, 3, Variant::none},
        {GroupKind::Sp, 2, 3, Variant::none},  {GroupKind::Sp, 2, 5, Variant::none},
        {GroupKind::Sp, 4, 3, Variant::none},  {GroupKind::O, 2, 3, Variant::plus},
        {GroupKind::O, 2, 3, Variant::minus},  {GroupKind::O, 3, 3, Variant::plus},
        {GroupKind::O, 3, 3, Variant::minus},  {GroupKind::O, 4, 3, Variant::plus},
        {GroupKind::O, 4, 3, Variant::minus},  {GroupKind::SL, 3, 3, Variant::none},
        {GroupKind::SU, 3, 3, Variant::none},
    };
    Outcome out{true, ""};
    std::vector<std::string> bad;
    for (const auto& c : cases) {
        auto r = compare_with_oracle(c.kind, c.n, c.q, 2, c.v);
        if (!r.match) {
            out.pass = false;
            bad.push_back(group_name(c.kind, c.n, c.q, c.v) + " labels " + join(r.label_orders) + " oracle " +
                          join(r.oracle_orders));
        }
    }
    out.detail = std::to_string(cases.size()) + " groups";
    for (const auto& b : bad) out.detail += "; " + b;
    return out;
}

Outcome sl3_count()
{
    Outcome out{true, ""};
    std::ostringstream os;
    os << "candidates " << sl3_radical_labels(3, 1).size();
    for (auto [kind, name] : {std::pair{GroupKind::SL, "SL3(3)"}, std::pair{GroupKind::SU, "SU3(3)"}}) {
        auto r = compare_with_oracle(kind, 3, 3);
        os << "; " << name << " oracle classes " << r.oracle_orders.size() << " (orders " << join(r.oracle_orders)
           << ")";
        if (r.oracle_orders.size() != 6) out.pass = false;
    }
    out.detail = os.str();
    return out;
}

Outcome parity_checks()
{
    Outcome out{true, ""};
    std::ostringstream os;
    int rotations = 0, mism = 0;
    for (i64 q : {3, 5, 7, 9, 11, 13}) {
        auto r = verify_rotation_parity(q);
        rotations += r.rotations;
        mism += r.mismatches;
        if (r.rotations != q - q_params(q).eps) out.pass = false;
    }
    os << rotations << " rotations, " << mism << " mismatches";
    if (mism) out.pass = false;
    for (int n : {4, 6}) {
        auto f = parity_fuzz(n, 3, Variant::plus, 10000, 20240601);
        os << "; O" << n << "+(3) fuzz " << f.words << " words, failures " << f.hom_failures << "/"
           << f.word_failures << "/" << f.det_failures << "/" << f.pivot_failures;
        if (!f.ok()) out.pass = false;
    }
    out.detail = os.str();
    return out;
}

Outcome basic_orders()
{
    Outcome out{true, ""};
    int total = 0, bad = 0;
    std::string first_bad;
    for (i64 q : {3, 7}) {
        for (GroupKind k : {GroupKind::GL, GroupKind::GU, GroupKind::Sp, GroupKind::O}) {
            for (int d = 1; d <= 8; ++d) {
                for (int disc : k == GroupKind::O ? std::vector<int>{1, -1} : std::vector<int>{0}) {
                    for (bool generic : {false, true}) {
                        for (const auto& b : basic_labels_of_dim(k, d, q, disc, generic)) {
                            if (generic && label_legal(b, q, false)) continue;
                            ++total;
                            BasicGroup g = build_basic(b, q);
                            i64 pred = predicted_order(b, q);
                            i64 got = pred <= 100000 ? static_cast<i64>(closure(g.space.gf, d, g.gens).order())
                                                     : bsgs_order(*g.space.gf, d, g.gens);
                            bool iso = true;
                            for (const auto& x : g.gens) iso = iso && is_isometry(x, g.space);
                            if (got != pred || !iso) {
                                ++bad;
                                if (first_bad.empty())
                                    first_bad = to_string(k) + " q=" + std::to_string(q) + " " + to_string(b);
                            }
                        }
                    }
                }
            }
        }
    }
    out.pass = bad == 0 && total > 0;
    out.detail = std::to_string(total) + " labels, " + std::to_string(bad) + " mismatches";
    if (!first_bad.empty()) out.detail += "; first " + first_bad;
    return out;
}

Outcome census_identities()
{
    auto t0 = std::chrono::steady_clock::now();
    auto rows = verify_identities(28);
    bool jacobi = theta_series(ThetaArg::t, 64) == theta_jacobi(64);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int failed = 0;
    for (const auto& r : rows) failed += r.pass ? 0 : 1;
    Outcome out;
    out.pass = failed == 0 && jacobi && secs < 5.0;
    std::ostringstream os;
    os << rows.size() << " identities, " << failed << " failures, Jacobi to t^64 " << (jacobi ? "ok" : "differs")
       << ", " << std::fixed;
    os.precision(2);
    os << secs << " s";
    out.detail = os.str();
    return out;
}

Outcome f4_counts()
{
    Outcome out{true, ""};
    std::ostringstream os;
    for (i64 q : {3, 7}) {
        auto c = count_alp_principal(q);
        os << "q=" << q << " (" << c.alp1 << "," << c.alp2 << "," << c.alp1 + c.alp2 << ") ";
        if (c.alp1 != 19 || c.alp2 != 7 || c.alp1 + c.alp2 != 26) out.pass = false;
    }
    for (i64 q : {7, 13}) {
        int n = count_alp_quasi(q);
        os << "quasi q=" << q << " " << n << " ";
        if (n != 9) out.pass = false;
    }
    out.detail = os.str();
    out.detail.pop_back();
    return out;
}

Outcome table_cells()
{
    Outcome out{true, ""};
    std::ostringstream os;
    for (i64 q : {3, 7}) {
        int rows = 0, skipped = 0, excluded_ok = 0, excluded = 0;
        std::vector<std::string> bad;
        for (const auto& c : verify_table_sizes(q)) {
            if (c.skipped) {
                ++skipped;
                out.pass = false;
                continue;
            }
            ++rows;
            if (c.excluded) {
                ++excluded;
                excluded_ok += c.exclusion_pass ? 1 : 0;
            }
            if (!c.parity_pass) bad.push_back(c.id + " parity " + c.parity_computed + " vs " + c.parity_expected);
            if (!c.size_pass)
                bad.push_back(c.id + " size " + std::to_string(c.log2_computed.value_or(-1)) + " vs " +
                              std::to_string(c.log2_expected.value_or(-1)));
            if (!c.exclusion_pass) bad.push_back(c.id + " exclusion");
        }
        if (!bad.empty()) out.pass = false;
        os << (q == 3 ? "" : "; ") << "q=" << q << " " << rows << " rows, " << skipped << " skipped, exclusions "
           << excluded_ok << "/" << excluded;
        for (const auto& b : bad) os << ", " << b;
    }
    out.detail = os.str();
    return out;
}

Outcome odd_p()
{
    Outcome out{true, ""};
    std::ostringstream os;
    for (i64 q : {4, 7}) {
        auto r = compare_with_oracle(GroupKind::GL, 2, q, 3);
        os << (q == 4 ? "" : "; ") << "GL2(" << q << ") p=3 labels " << join(r.label_orders) << " oracle "
           << join(r.oracle_orders);
        if (!r.match) out.pass = false;
    }
    out.detail = os.str();
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    std::vector<int> expect_fail;
    app.add_option("--expect-fail", expect_fail, "Criteria expected to fail")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle agreement on small classical groups", oracle_agreement},
        {"SL3(3) and SU3(3) have 6 radical 2-classes", sl3_count},
        {"rotation parity and parity fuzz", parity_checks},
        {"basic subgroup orders, dimension <= 8, q in {3,7}", basic_orders},
        {"census identities w <= 28", census_identities},
        {"F4 weight counts", f4_counts},
        {"F4 table cells at q = 3 and q = 7", table_cells},
        {"odd p: GL2(4) and GL2(7) at p = 3", odd_p},
    };

    std::set<int> failed;
    for (size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) failed.insert(id);
        std::ostringstream t;
        t.setf(std::ios::fixed);
        t.precision(2);
        t << secs;
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ["
                  << o.detail << "] (" << t.str() << " s)" << std::endl;
    }

    std::set<int> expected(expect_fail.begin(), expect_fail.end());
    if (failed == expected) {
        if (!expected.empty()) std::cout << "failing criteria match the expected set" << std::endl;
        return 0;
    }
    std::cout << "failing criteria differ from the expected set" << std::endl;
    return 1;
}
