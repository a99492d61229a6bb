/** @file basics.hpp
 *  Labels for basic subgroups R^i_{m,alpha,gamma,c}, their explicit matrix
 *  realizations, and enumeration of radical-class labels of classical groups.
 */
#pragma once

#include "radsub/matgrp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radsub {

struct BasicLabel {
    GroupKind kind = GroupKind::GL;  ///< GL, GU, Sp or O
    int i = 1;                       ///< family 0..4
    int eta = 0;                     ///< +1, -1, or 0 when not applicable
    int m = 1;
    int alpha = 0;
    int gamma = 0;
    std::vector<int> c;              ///< (c_t, ..., c_1); c.back() is c_1
    int p = 2;
    int disc = 0;                    ///< O only: discriminant of the block space

    int csum() const;
    bool operator==(const BasicLabel& o) const;
    bool operator<(const BasicLabel& o) const;
};

/// One block of a radical label.  A trivial block (odd p only) has no label.
struct LabelBlock {
    std::optional<BasicLabel> basic;
    int dim = 0;
    int disc = 0;

    bool operator==(const LabelBlock& o) const { return basic == o.basic && dim == o.dim && disc == o.disc; }
    bool operator<(const LabelBlock& o) const;
};

struct RadicalLabel {
    GroupKind kind = GroupKind::GL;  ///< ambient kind; SL/SU for the n = 3 special case
    int n = 0;
    i64 q = 0;
    int p = 2;
    Variant variant = Variant::none;
    std::vector<LabelBlock> blocks;  ///< sorted canonically

    bool operator==(const RadicalLabel& o) const { return blocks == o.blocks && kind == o.kind && n == o.n; }
};

std::string to_string(const BasicLabel& b);
std::string to_string(const RadicalLabel& r);
/// Parses one basic label in the grammar of to_string (kind, p and disc come from the caller).
BasicLabel parse_basic_label(const std::string& s, GroupKind kind, int p = 2);

/// Dimension of the space V^i_{m,alpha,gamma,c} carrying the label.
int label_dim(const BasicLabel& b, i64 q);
/// log_p of the order of the basic subgroup.
int predicted_log_order(const BasicLabel& b, i64 q);
/// The order itself; throws std::overflow_error beyond 2^62.
i64 predicted_order(const BasicLabel& b, i64 q);

/// Structural legality of a label for the given q (see the legality table in
/// the README).  `generic` ignores the a = 2 coincidences and treats alpha = 1
/// branches as available, matching lists stated for arbitrary odd q.
bool label_legal(const BasicLabel& b, i64 q, bool generic = false);

/// Generators of E_eta^{2 gamma + 1} inside GL_{2^gamma}(eps q): over F_q when
/// eps = +1, over F_{q^2} preserving the identity hermitian form when eps = -1.
std::vector<Mat> build_extraspecial(int eta, int gamma, i64 q, int eps);

struct BasicGroup {
    FormSpace space;         ///< standard space of the block
    std::vector<Mat> gens;   ///< isometries of `space`
};

/// Generators of the basic subgroup on the standard space of its block.
BasicGroup build_basic(const BasicLabel& b, i64 q);

/// Generators of the subgroup named by a radical label on the standard space
/// of the ambient group.
BasicGroup build_radical(const RadicalLabel& r);

enum class LabelMode {
    exact,    ///< candidates filtered by radicality in each block's isometry group
    generic,  ///< structural legality only
};

/// All radical-class labels of the classical group of the given kind.  For
/// orthogonal groups the variant selects the sign of disc(V).  SL and SU are
/// supported for n = 3 (p = 2).
std::vector<RadicalLabel> enumerate_labels(GroupKind kind, int n, i64 q, int p = 2, Variant variant = Variant::none,
                                           LabelMode mode = LabelMode::exact);

/// Single-block labels of dimension k (the "A'_1(R) = {+-I}" lists).
std::vector<BasicLabel> basic_labels_of_dim(GroupKind kind, int k, i64 q, int disc = 1, bool generic = false);

/// Log_p of the order of the group named by a radical label.
int radical_log_order(const RadicalLabel& r);

/// The six candidates P_1..P_6 for SL_3(eps q), as GL_2(eps q) labels pushed
/// through g -> diag(g, det g^{-1}).  P_1 is the empty label.
std::vector<RadicalLabel> sl3_radical_labels(i64 q, int eps);

/// Weight-subgroup labels (p = 2).  With principal_only the basic blocks are
/// restricted to the principal-weight families.
std::vector<RadicalLabel> weight_labels(GroupKind kind, int n, i64 q, bool principal_only,
                                        Variant variant = Variant::none);

}  // namespace radsub
