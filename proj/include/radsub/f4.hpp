/** @file f4.hpp
 *  Principal weight subgroups of F_4(q), q odd, as transcribed table data
 *  plus the columns that can be recomputed from explicit constructions in
 *  O_9(q) and O_8(q).
 */
#pragma once

#include "radsub/basics.hpp"
#include "radsub/parity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radsub {

/// c0 + c1 * a.
struct Affine {
    int c0 = 0;
    int c1 = 0;

    int at(int a) const { return c0 + c1 * a; }
    bool operator==(const Affine& o) const { return c0 == o.c0 && c1 == o.c1; }
};

std::string to_string(const Affine& x);

enum class F4Table { Ta1, Ta2, Ta3 };

struct TableRow {
    F4Table table = F4Table::Ta2;
    std::string id;                    ///< "R_1".."R_37", or "1".."7" for Ta1
    std::vector<std::string> blocks;   ///< basic labels, repeated by multiplicity
    ParityGroup parity;
    std::optional<Affine> log2_size;   ///< blank cells are absent
    std::optional<int> log2_center;
    bool excluded = false;             ///< Ta2 rows whose R has B(R) of rank 2
    // Ta1 only.
    int dim_exponent = -1;             ///< dim V = 2^n for lines 1-4 (-1 there), 2 or 1 otherwise
    int min_n = 0;
    int disc = 1;
    std::string family;                ///< description of the label family
    std::string number;                ///< the "number" column
};

std::vector<TableRow> table_rows(F4Table which);

/// Ta1 lines usable in an orthogonal space of dimension at most d.
std::vector<TableRow> table1_rows_applicable(int d);

/// The concrete basic labels of a Ta1 line on a space of dimension 2^n
/// (lines 1-4), 2 (line 5) or 1 (lines 6, 7).
std::vector<BasicLabel> table1_labels(const std::string& line, int n);

/// Radical label of a Ta2 (dimension 9) or Ta3 (dimension 8) row.
RadicalLabel table_row_label(const TableRow& row, i64 q);

struct SizeCheck {
    std::string id;
    std::string parity_expected;
    std::string parity_computed;
    std::optional<int> log2_expected;
    std::optional<int> log2_computed;
    std::optional<int> center_expected;   ///< Ta2: log2 |Z(R'')|; Ta3: log2 |A~(R)/Z(Spin)|
    std::optional<int> center_computed;
    /// log2 |Omega_1(Z(R''))| in the orthogonal group.
    std::optional<int> omega1_center_rank;
    /// log2 |Omega_1(Z(R))| for the spin preimage R of R''.
    std::optional<int> spin_center_rank;
    /// Ta2 only: R'' fixes a vector of square norm, so R'' lies in some
    /// Omega_8^+ and R contains the rank 2 center of the matching Spin_8.
    bool fixes_square_line = false;
    bool excluded = false;
    bool skipped = false;
    std::string note;
    bool parity_pass = false;
    bool size_pass = false;       ///< true for blank size cells
    bool center_pass = false;     ///< true for blank center cells
    bool exclusion_pass = false;  ///< excluded rows fix a line and have spin_center_rank >= 2; others fix none
    /// parity, size and exclusion checks; the center column is reported separately.
    bool pass = false;
};

/// Rebuilds every row of Ta2 and Ta3 at q (a = 2 for q = 3, a = 3 for
/// q = 7), computes R'' = R' intersected with Omega, and compares the
/// parity, size and center columns.  Rows whose closure exceeds `cap` are
/// skipped with a note.
std::vector<SizeCheck> verify_table_sizes(i64 q, size_t cap = 4000000);

struct WeightOrbit {
    std::string name;        ///< "a1-1" ...
    std::string rep;         ///< "R_36" ...
    std::string gamma_stab;  ///< stabilizer in Gamma = S_4
    std::string s_stab;      ///< stabilizer in S = S_3; "S" when all of S
};

/// Representatives of the S-orbits of Ta3 weight subgroups with stabilizers.
std::vector<WeightOrbit> weight_orbits_r2();

struct F4Count {
    i64 q = 0;
    int alp1 = 0;
    int alp2 = 0;
    int ibr = 26;
    int alp_quasi = 0;
    std::vector<std::string> doubled_rows;  ///< Ta2 rows counted twice
};

/// Principal-block weight counts.  Row parities are recomputed at q.
F4Count count_alp_principal(i64 q);

/// Weights of the non-principal quasi-isolated 2-block; throws
/// std::invalid_argument when 3 divides q or q is even.
int count_alp_quasi(i64 q);

/// JSON report for the CLI.
std::string f4_report_json(i64 q, bool quasi, bool tables, size_t cap = 4000000);

}  // namespace radsub
