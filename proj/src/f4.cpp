#include "radsub/f4.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <sstream>

namespace radsub {

std::string to_string(const Affine& x)
{
    if (x.c1 == 0) return std::to_string(x.c0);
    std::string s = (x.c1 == 1 ? "" : std::to_string(x.c1)) + "a";
    if (x.c0 > 0) s += "+" + std::to_string(x.c0);
    if (x.c0 < 0) s += std::to_string(x.c0);
    return s;
}

namespace {

std::string r0(const std::string& c)
{
    return "R0+_{m=1,a=0,g=0,c=(" + c + ")}";
}

std::string r0n(const std::string& c)
{
    return "R0+_{m=1,a=1,g=0,c=(" + c + ")}" + (c.empty() ? "@disc-" : "");
}

std::string r4(int g, const std::string& c)
{
    return "R4_{m=1,a=0,g=" + std::to_string(g) + ",c=(" + c + ")}";
}

const ParityGroup P0 = ParityGroup::trivial();
const ParityGroup P10 = ParityGroup::of({{1, 0}});
const ParityGroup P01 = ParityGroup::of({{0, 1}});
const ParityGroup PF = ParityGroup::full();

std::vector<std::string> rep(const std::string& s, int k)
{
    return std::vector<std::string>(static_cast<size_t>(k), s);
}

std::vector<std::string> cat(std::initializer_list<std::vector<std::string>> parts)
{
    std::vector<std::string> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

TableRow row(F4Table t, int k, std::vector<std::string> blocks, ParityGroup par, std::optional<Affine> size = {},
             std::optional<int> center = {}, bool excluded = false)
{
    TableRow r;
    r.table = t;
    r.id = "R_" + std::to_string(k);
    r.blocks = std::move(blocks);
    r.parity = par;
    r.log2_size = size;
    r.log2_center = center;
    r.excluded = excluded;
    return r;
}

std::vector<TableRow> table2()
{
    const auto T = F4Table::Ta2;
    const std::string pm = r0("");
    const std::string pmn = r0n("");
    auto A = [](int c0, int c1 = 0) { return Affine{c0, c1}; };
    return {
        row(T, 1, {r0("3"), pm}, P10, A(11), 1),
        row(T, 2, {r0n("3"), pm}, PF, {}, {}, true),
        row(T, 3, {r0("1,2"), pm}, P10, A(13), 1),
        row(T, 4, {r0n("1,2"), pm}, PF, {}, {}, true),
        row(T, 5, {r4(2, ""), pm}, P10, {}, {}, true),
        row(T, 6, {r4(1, "1"), pm}, P10, {}, {}, true),
        row(T, 7, {r4(0, "1,1"), pm}, PF, A(6, 4), 1),
        row(T, 8, {r4(0, "2"), pm}, PF, A(5, 4), 1),
        row(T, 9, {r0("2"), r0n("2"), pm}, PF, A(11), 2),
        row(T, 10, {r0("2"), r4(1, ""), pm}, P10, A(9, 1), 2),
        row(T, 11, {r0("2"), r4(0, "1"), pm}, PF, A(8, 2), 2),
        row(T, 12, {r0n("2"), r4(1, ""), pm}, PF, {}, {}, true),
        row(T, 13, {r0n("2"), r4(0, "1"), pm}, PF, A(8, 1), 2),
        row(T, 14, {r4(1, ""), r4(0, "1"), pm}, PF, A(5, 3), 2),
        row(T, 15, cat({{r0("2"), r4(0, "")}, rep(pm, 3)}), PF, A(8, 1), 4),
        row(T, 16, cat({{r0n("2"), r4(0, "")}, rep(pm, 3)}), PF, A(8, 1), 4),
        row(T, 17, cat({{r4(1, ""), r4(0, "")}, rep(pm, 3)}), PF, A(5, 2), 4),
        row(T, 18, cat({{r4(0, "1"), r4(0, "")}, rep(pm, 3)}), PF, A(5, 3), 4),
        row(T, 19, cat({rep(r4(0, ""), 3), rep(pm, 3)}), PF, A(4, 3), 5),
        row(T, 20, cat({{r4(0, ""), pm}, rep(pmn, 6)}), PF, A(6, 1), 6),
        row(T, 21, cat({rep(pm, 3), rep(pmn, 6)}), PF, A(7), 7),
    };
}

std::vector<TableRow> table3()
{
    const auto T = F4Table::Ta3;
    auto A = [](int c0, int c1 = 0) { return Affine{c0, c1}; };
    return {
        row(T, 22, {r0("3")}, P10, A(9), 3),
        row(T, 23, {r0n("3")}, P01, A(9), 3),
        row(T, 24, {r0("1,2")}, P10, A(11), 1),
        row(T, 25, {r0n("1,2")}, P01, A(11), 1),
        row(T, 26, {r4(2, "")}, P0, A(4, 1), 5),
        row(T, 27, {r4(1, "1")}, P0, A(6, 2), 1),
        row(T, 28, {r4(0, "1,1")}, PF, A(4, 4), 1),
        row(T, 29, {r4(0, "2")}, PF, A(3, 4), 2),
        row(T, 30, {r0("2"), r0n("2")}, PF, A(9), 1),
        row(T, 31, {r0("2"), r4(1, "")}, P10, A(7, 1), 1),
        row(T, 32, {r0("2"), r4(0, "1")}, PF, A(6, 2), 1),
        row(T, 33, {r0n("2"), r4(1, "")}, P01, A(7, 1), 1),
        row(T, 34, {r0n("2"), r4(0, "1")}, PF, A(6, 2), 1),
        row(T, 35, {r4(1, ""), r4(0, "1")}, PF, A(3, 3), 1),
        row(T, 36, cat({{r4(0, "")}, rep(r0(""), 6)}), PF, A(4, 1), 5),
        row(T, 37, cat({{r4(0, "")}, rep(r0n(""), 6)}), PF, A(4, 1), 5),
    };
}

std::vector<TableRow> table1()
{
    auto line = [](int k, int dexp, int min_n, int disc, std::string fam, ParityGroup par, std::string number) {
        TableRow r;
        r.table = F4Table::Ta1;
        r.id = std::to_string(k);
        r.dim_exponent = dexp;
        r.min_n = min_n;
        r.disc = disc;
        r.family = std::move(fam);
        r.parity = par;
        r.number = std::move(number);
        return r;
    };
    return {
        line(1, -1, 2, 1, "R4_{m=1,a=0,g>=1,c} with g+|c|=n-1", P0, "2^(n-2)"),
        line(2, -1, 2, 1, "R0_{m=1,a=0,g=0,c} with |c|=n, c_1>=2", P10, "2^(n-2)"),
        line(3, -1, 2, 1, "R0_{m=1,a=1,g=0,c} with |c|=n, c_1>=2", P01, "2^(n-2)"),
        line(4, -1, 2, 1, "R4_{m=1,a=0,g=0,c} with |c|=n-1", PF, "2^(n-2)"),
        line(5, 1, 0, 1, "R4_{m=1,a=0,g=0,c=()}", PF, "1"),
        line(6, 0, 0, 1, "{+-1} on a line of square norm", P10, "1"),
        line(7, 0, 0, -1, "{+-1} on a line of non-square norm", P01, "1"),
    };
}

// Compositions of s, written (c_t, ..., c_1).
std::vector<std::vector<int>> compositions(int s)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int x = 1; x <= rest; ++x) {
            cur.push_back(x);
            rec(rest - x);
            cur.pop_back();
        }
    };
    rec(s);
    return out;
}

BasicLabel olabel(int i, int alpha, int gamma, std::vector<int> c, int disc = 1)
{
    BasicLabel b;
    b.kind = GroupKind::O;
    b.i = i;
    b.eta = i == 0 ? 1 : 0;
    b.m = 1;
    b.alpha = alpha;
    b.gamma = gamma;
    b.c = std::move(c);
    b.disc = disc;
    return b;
}

int two_log(size_t n)
{
    int l = 0;
    while ((size_t{1} << l) < n) ++l;
    if ((size_t{1} << l) != n) throw std::logic_error("f4: group order is not a power of 2");
    return l;
}

}  // namespace

std::vector<TableRow> table_rows(F4Table which)
{
    switch (which) {
    case F4Table::Ta1: return table1();
    case F4Table::Ta2: return table2();
    case F4Table::Ta3: return table3();
    }
    return {};
}

std::vector<TableRow> table1_rows_applicable(int d)
{
    std::vector<TableRow> out;
    for (const auto& r : table1()) {
        int dim = r.dim_exponent >= 0 ? 1 << r.dim_exponent : 1 << r.min_n;
        if (dim <= d) out.push_back(r);
    }
    return out;
}

std::vector<BasicLabel> table1_labels(const std::string& line, int n)
{
    std::vector<BasicLabel> out;
    int k = std::stoi(line);
    if (k >= 1 && k <= 4 && n < 2) return out;
    switch (k) {
    case 1:
        for (int g = 1; g <= n - 1; ++g)
            for (auto& c : compositions(n - 1 - g)) out.push_back(olabel(4, 0, g, c));
        break;
    case 2:
    case 3:
        for (auto& c : compositions(n))
            if (c.back() >= 2) out.push_back(olabel(0, k == 3 ? 1 : 0, 0, c));
        break;
    case 4:
        for (auto& c : compositions(n - 1)) out.push_back(olabel(4, 0, 0, c));
        break;
    case 5: out.push_back(olabel(4, 0, 0, {})); break;
    case 6: out.push_back(olabel(0, 0, 0, {})); break;
    case 7: out.push_back(olabel(0, 1, 0, {}, -1)); break;
    default: throw std::invalid_argument("table1_labels: no line " + line);
    }
    return out;
}

RadicalLabel table_row_label(const TableRow& row, i64 q)
{
    if (row.table == F4Table::Ta1) throw std::invalid_argument("table_row_label: Ta1 lines are label families");
    RadicalLabel r;
    r.kind = GroupKind::O;
    r.q = q;
    r.p = 2;
    r.variant = Variant::plus;
    int disc = 1;
    for (const auto& s : row.blocks) {
        BasicLabel b = parse_basic_label(s, GroupKind::O);
        int d = label_dim(b, q);
        r.blocks.push_back(LabelBlock{b, d, b.disc});
        r.n += d;
        disc *= b.disc;
    }
    if (disc != 1) throw std::logic_error("table_row_label: discriminant of " + row.id + " is not +");
    std::sort(r.blocks.begin(), r.blocks.end());
    return r;
}

namespace {

struct KernelData {
    GeneratedGroup R2;            // R'' = R' cut down to Omega
    std::vector<Mat> gens;        // generators of R''
    ParityGroup parity;
};

KernelData omega_part(const BasicGroup& g, size_t cap)
{
    const GF& F = *g.space.gf;
    int n = g.space.n;
    std::vector<Parity> par;
    KernelData out;
    for (const auto& s : g.gens) {
        par.push_back(parity_of(s, g.space));
        out.parity = out.parity.with(par.back());
    }
    // Transversal of the kernel indexed by parity, then Schreier generators.
    std::vector<std::optional<Mat>> T(4);
    T[0] = identity(n);
    for (bool grown = true; grown;) {
        grown = false;
        for (int p = 0; p < 4; ++p) {
            if (!T[p]) continue;
            for (size_t j = 0; j < g.gens.size(); ++j) {
                int np = p ^ par[j].index();
                if (!T[np]) {
                    T[np] = mat_mul(F, *T[p], g.gens[j]);
                    grown = true;
                }
            }
        }
    }
    for (int p = 0; p < 4; ++p) {
        if (!T[p]) continue;
        for (size_t j = 0; j < g.gens.size(); ++j) {
            int np = p ^ par[j].index();
            Mat s = mat_mul(F, mat_mul(F, *T[p], g.gens[j]), inverse(F, *T[np]));
            if (s != identity(n) && std::find(out.gens.begin(), out.gens.end(), s) == out.gens.end())
                out.gens.push_back(s);
        }
    }
    out.R2 = closure(g.space.gf, n, out.gens, cap);
    return out;
}

struct CenterData {
    size_t center = 0;       // |Z(R'')|
    size_t omega1 = 0;       // |{x in Z(R'') : x^2 = 1}|
    size_t mod_pm = 0;       // |{x : x^2 in {+-1}, [x, R''] in {+-1}}|
    size_t spin_omega1 = 0;  // |Omega_1(Z(R))| for the spin preimage R
    bool has_minus_one = false;
};

// det of g on the -1 eigenspace E of the involution t: with P = (1 - t)/2
// the projection onto E, gP + (1 - P) is g on E and the identity on ker P.
u8 det_on_minus_space(const GF& F, const Mat& g, const Mat& t)
{
    int n = g.r;
    u8 half = F.inv(F.from_int(2));
    Mat P = mat_scale(F, mat_add(F, identity(n), mat_scale(F, t, F.from_int(-1))), half);
    Mat Q = mat_add(F, identity(n), mat_scale(F, P, F.from_int(-1)));
    return det(F, mat_add(F, mat_mul(F, g, P), Q));
}

CenterData centers(const KernelData& k)
{
    const GeneratedGroup& G = k.R2;
    const GF& F = G.gf();
    int n = G.n();
    size_t nn = static_cast<size_t>(n) * n;
    std::vector<u8> xy(nn), yx(nn), sq(nn), neg(nn);
    Mat one = identity(n), minus = scalar(n, F.from_int(-1));
    CenterData c;
    c.has_minus_one = G.contains(minus);
    auto is_pm = [&](const u8* m, bool& plus) {
        if (std::memcmp(m, one.a.data(), nn) == 0) {
            plus = true;
            return true;
        }
        plus = false;
        return std::memcmp(m, minus.a.data(), nn) == 0;
    };
    std::vector<size_t> involutions;
    for (size_t i = 0; i < G.order(); ++i) {
        const u8* x = G.data(i);
        bool central = true, central_pm = true;
        for (const auto& g : k.gens) {
            mul_raw(F, n, x, g.a.data(), xy.data());
            mul_raw(F, n, g.a.data(), x, yx.data());
            if (std::memcmp(xy.data(), yx.data(), nn) == 0) continue;
            central = false;
            for (size_t e = 0; e < nn; ++e) neg[e] = F.neg(yx[e]);
            if (std::memcmp(xy.data(), neg.data(), nn) != 0) {
                central_pm = false;
                break;
            }
        }
        if (!central_pm) continue;
        mul_raw(F, n, x, x, sq.data());
        bool plus = false;
        bool sq_pm = is_pm(sq.data(), plus);
        if (sq_pm) ++c.mod_pm;
        if (central) {
            ++c.center;
            if (sq_pm && plus) {
                ++c.omega1;
                involutions.push_back(i);
            }
        }
    }
    // A central involution t of R'' with -1 eigenspace E of dimension 2k
    // lifts to elements of square (-1)^k; the lifts are central in R iff
    // every element of R'' has determinant 1 on E.
    for (size_t i : involutions) {
        Mat t = G.element(i);
        int dim_e = n - static_cast<int>(null_space(F, mat_add(F, t, minus)).size());
        if (dim_e % 4 != 0) continue;
        bool central = true;
        for (const auto& g : k.gens)
            if (det_on_minus_space(F, g, t) != 1) {
                central = false;
                break;
            }
        if (central) c.spin_omega1 += 2;
    }
    return c;
}

// Whether every generator fixes some vector of nonzero square norm.
bool fixes_square_line(const KernelData& k, const FormSpace& space)
{
    const GF& F = *space.gf;
    int n = space.n;
    Mat stacked(static_cast<int>(k.gens.size()) * n, n);
    for (size_t j = 0; j < k.gens.size(); ++j)
        for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col)
                stacked(static_cast<int>(j) * n + r, col) =
                    F.sub(k.gens[j](r, col), r == col ? u8{1} : u8{0});
    auto basis = null_space(F, stacked);
    size_t total = 1;
    for (size_t i = 0; i < basis.size(); ++i) {
        total *= static_cast<size_t>(F.q());
        if (total > 1000000) throw std::logic_error("fixes_square_line: fixed space too large");
    }
    std::vector<u8> v(static_cast<size_t>(n));
    for (size_t code = 1; code < total; ++code) {
        std::fill(v.begin(), v.end(), u8{0});
        size_t rest = code;
        for (const auto& b : basis) {
            u8 coef = static_cast<u8>(rest % static_cast<size_t>(F.q()));
            rest /= static_cast<size_t>(F.q());
            for (int e = 0; e < n; ++e) v[e] = F.add(v[e], F.mul(coef, b[e]));
        }
        u8 norm = form_value(F, space.gram, v, v, false);
        if (square_class(*F.field(), norm) == SquareClass::square) return true;
    }
    return false;
}

}  // namespace

std::vector<SizeCheck> verify_table_sizes(i64 q, size_t cap)
{
    if (q % 2 == 0) throw std::invalid_argument("verify_table_sizes: q must be odd");
    int a = q_params(q).a;
    std::vector<SizeCheck> out;
    for (F4Table t : {F4Table::Ta2, F4Table::Ta3}) {
        for (const auto& row : table_rows(t)) {
            SizeCheck sc;
            sc.id = row.id;
            sc.excluded = row.excluded;
            sc.parity_expected = to_string(row.parity);
            if (row.log2_size) sc.log2_expected = row.log2_size->at(a);
            sc.center_expected = row.log2_center;
            RadicalLabel lab = table_row_label(row, q);
            BasicGroup g = build_radical(lab);
            KernelData k;
            try {
                k = omega_part(g, cap);
            } catch (const CapExceeded&) {
                sc.skipped = true;
                sc.note = "closure cap exceeded";
                sc.parity_computed = to_string(parity_group(g.gens, g.space));
                sc.parity_pass = sc.parity_computed == sc.parity_expected;
                sc.pass = sc.parity_pass;
                out.push_back(sc);
                continue;
            }
            sc.parity_computed = to_string(k.parity);
            sc.parity_pass = k.parity == row.parity;
            int l2 = two_log(k.R2.order());
            bool consistent = true;
            // |R'| = |R''| |parity| is a consistency check on the predicted orders.
            if (l2 + two_log(static_cast<size_t>(k.parity.size())) != radical_log_order(lab)) {
                consistent = false;
                sc.note = "order of R' disagrees with the label";
            }
            CenterData c = centers(k);
            sc.omega1_center_rank = two_log(c.omega1);
            sc.spin_center_rank = two_log(c.spin_omega1);
            if (t == F4Table::Ta2) {
                // R is the preimage of R'' in Spin_9; |R / {+-1}| = |R''|.
                sc.log2_computed = l2;
                sc.center_computed = two_log(c.center);
                sc.fixes_square_line = fixes_square_line(k, g.space);
                sc.exclusion_pass = row.excluded ? sc.fixes_square_line && *sc.spin_center_rank >= 2
                                                 : !sc.fixes_square_line;
            } else {
                // Z(Spin_8) is the preimage of {+-1}, of order 4.
                sc.log2_computed = l2 + 1 - 2;
                sc.center_computed = two_log(c.mod_pm) + 1 - 2;
                sc.exclusion_pass = true;
                if (!c.has_minus_one) {
                    consistent = false;
                    sc.note = "-1 is not in R''";
                }
            }
            sc.size_pass = consistent && (!sc.log2_expected || *sc.log2_expected == *sc.log2_computed);
            sc.center_pass = !sc.center_expected || *sc.center_expected == *sc.center_computed;
            sc.pass = sc.parity_pass && sc.size_pass && sc.exclusion_pass;
            out.push_back(sc);
        }
    }
    return out;
}

std::vector<WeightOrbit> weight_orbits_r2()
{
    return {
        {"a1-1", "R_36", "E", "<(12)>"},       {"a1-2", "R_37", "E", "<(12)>"},
        {"a2-1", "R_32", "E", "<(12)>"},       {"a2-2", "R_34", "E", "<(12)>"},
        {"b1-1", "R_22", "S", "S"},            {"b1-2", "R_23", "<(13),(34)>", "<(13)>"},
        {"b2-1", "R_24", "S", "S"},            {"b2-2", "R_25", "<(13),(34)>", "<(13)>"},
        {"b3-1", "R_31", "S", "S"},            {"b3-2", "R_33", "<(13),(34)>", "<(13)>"},
        {"c1", "R_28", "Gamma", "S"},          {"c2", "R_29", "Gamma", "S"},
        {"c3", "R_30", "Gamma", "S"},          {"c4", "R_35", "Gamma", "S"},
    };
}

F4Count count_alp_principal(i64 q)
{
    if (q % 2 == 0) throw std::invalid_argument("count_alp_principal: q must be odd");
    F4Count c;
    c.q = q;
    // A weight of O_9 whose subgroup has parity exactly {(0,0),(1,0)} covers
    // two weights of Omega_9; every other row covers one.
    for (const auto& row : table_rows(F4Table::Ta2)) {
        if (row.excluded) continue;
        BasicGroup g = build_radical(table_row_label(row, q));
        ParityGroup par = parity_group(g.gens, g.space);
        if (par == P10) {
            c.alp1 += 2;
            c.doubled_rows.push_back(row.id);
        } else {
            c.alp1 += 1;
        }
    }
    for (const auto& o : weight_orbits_r2())
        if (o.s_stab == "S") ++c.alp2;
    return c;
}

int count_alp_quasi(i64 q)
{
    if (q % 2 == 0) throw std::invalid_argument("count_alp_quasi: q must be odd");
    if (q % 3 == 0) throw std::invalid_argument("count_alp_quasi: the block exists only when 3 does not divide q");
    int eps = (q - 1) % 3 == 0 ? 1 : -1;
    auto P = sl3_radical_labels(q, eps);
    // Each of P_3, P_5, P_6 carries one principal weight of SL_3(eps q); the
    // block's weight subgroups are the products R_1 x R_2 of two of them.
    std::vector<RadicalLabel> carriers{P.at(2), P.at(4), P.at(5)};
    int pairs = 0;
    for (size_t i = 0; i < carriers.size(); ++i)
        for (size_t j = 0; j < carriers.size(); ++j) ++pairs;
    return pairs;
}

std::string f4_report_json(i64 q, bool quasi, bool tables, size_t cap)
{
    nlohmann::ordered_json j;
    j["q"] = q;
    F4Count c = count_alp_principal(q);
    j["alp1"] = c.alp1;
    j["alp2"] = c.alp2;
    j["ibr"] = c.ibr;
    j["doubled_rows"] = c.doubled_rows;
    if (quasi) j["alp_quasi"] = count_alp_quasi(q);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    if (tables) {
        for (const auto& s : verify_table_sizes(q, cap)) {
            nlohmann::ordered_json r;
            r["id"] = s.id;
            r["parity"] = s.parity_computed;
            r["parity_expected"] = s.parity_expected;
            r["log2_expected"] = s.log2_expected ? nlohmann::ordered_json(*s.log2_expected) : nlohmann::ordered_json();
            r["log2_computed"] = s.log2_computed ? nlohmann::ordered_json(*s.log2_computed) : nlohmann::ordered_json();
            r["center_expected"] =
                s.center_expected ? nlohmann::ordered_json(*s.center_expected) : nlohmann::ordered_json();
            r["center_computed"] =
                s.center_computed ? nlohmann::ordered_json(*s.center_computed) : nlohmann::ordered_json();
            if (s.omega1_center_rank) r["omega1_center_rank"] = *s.omega1_center_rank;
            r["excluded"] = s.excluded;
            if (s.skipped) r["skipped"] = true;
            if (!s.note.empty()) r["note"] = s.note;
            r["pass"] = s.pass;
            rows.push_back(r);
        }
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

}  // namespace radsub
