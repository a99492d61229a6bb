/** @file forms.hpp
 *  Classical spaces: standard Gram matrices, isometry tests, congruence to
 *  the standard form and the orders of the classical groups.
 */
#pragma once

#include "radsub/matrix.hpp"

#include <optional>

namespace radsub {

enum class FormKind { linear, unitary, symplectic, orthogonal };
enum class Variant { plus, minus, none };

/// Ambient group kinds used by the oracle and the label calculus.
enum class GroupKind { GL, GU, Sp, O, SL, SU };

std::string to_string(GroupKind k);
GroupKind parse_group_kind(const std::string& s);
FormKind form_kind_of(GroupKind k);

struct FormSpace {
    FormKind kind = FormKind::linear;
    int n = 0;
    i64 q = 0;    ///< the q of GL_n(q), GU_n(q), Sp_n(q), O_n(q)
    GFPtr gf;     ///< matrix field: F_q, or F_{q^2} when unitary
    Mat gram;     ///< empty for linear
    Variant variant = Variant::none;  ///< orthogonal: sign of disc(V)

    bool hermitian() const { return kind == FormKind::unitary; }
};

/// Standard spaces: identity Gram for O_{n,+}, diag(1,...,1,d0) for O_{n,-}
/// with d0 the least generator of F_q^x, [[0,I],[-I,0]] for Sp and the
/// identity hermitian form for GU.
FormSpace standard_space(FormKind kind, int n, i64 q, Variant variant = Variant::none);

bool is_isometry(const Mat& m, const FormSpace& space);

/// sign of disc(V) = (a_1 ... a_n)^{(q-1)/2} for a symmetric Gram matrix
int discriminant(const GF& F, const Mat& gram);
/// ty(V) = disc(V) eps^{floor(n/2)}
int orth_type(i64 q, int n, int disc);

/// |GL_n(q)|, |Sp_n(q)|, ... as exact integers (uint64 overflow is an error).
i64 classical_order(GroupKind kind, int n, i64 q, Variant variant = Variant::none);

/// Congruence to the standard form: returns P with P^T G P^sigma equal to the
/// standard Gram of the same kind and dimension (sigma = conjugation when
/// hermitian).  For a symmetric G the variant of the target is disc(G).
/// X preserving G maps to P^{-1} X P preserving the standard form.
Mat congruence_to_standard(const GF& F, FormKind kind, const Mat& gram);

/// Variant matching a symmetric Gram matrix.
Variant variant_of(const GF& F, const Mat& gram);

}  // namespace radsub
