/** @file gfq.hpp
 *  Exact arithmetic in finite fields F_{p^k} and the small number-theoretic
 *  parameters (epsilon, a, e) the classical-group constructions depend on.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radsub {

using i64 = std::int64_t;

bool is_prime(i64 n);
/// Returns (p, k) with q = p^k, or throws if q is not a prime power.
std::pair<int, int> prime_power(i64 q);
int v_p(i64 n, int p);
i64 ipow(i64 b, int e);

/// A finite field F_{p^k} in a fixed polynomial basis.  Elements are encoded
/// as integers in [0, q): the base-p digits are the coefficients of
/// 1, x, ..., x^{k-1}.  Integer order therefore equals lexicographic order
/// on the coefficient sequence read from x^{k-1} down to 1.
class Field {
public:
    Field(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    i64 q() const { return q_; }
    const std::vector<int>& modulus() const { return mod_; }

    i64 add(i64 a, i64 b) const;
    i64 sub(i64 a, i64 b) const;
    i64 neg(i64 a) const;
    i64 mul(i64 a, i64 b) const;
    i64 inv(i64 a) const;
    i64 pow(i64 a, i64 e) const;
    i64 frob(i64 a) const { return pow(a, p_); }
    i64 from_int(i64 n) const;
    std::vector<int> coeffs(i64 a) const;
    i64 from_coeffs(const std::vector<int>& c) const;

    /// Order of a nonzero element in the multiplicative group.
    i64 mult_order(i64 a) const;
    /// Least (in element order) generator of the multiplicative group.
    i64 primitive() const;

private:
    int p_, k_;
    i64 q_;
    std::vector<int> mod_;
    std::vector<i64> pw_;
    mutable i64 prim_ = -1;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Canonical field for (p, k): the modulus is the least monic irreducible
/// polynomial of degree k over F_p.  Repeated calls return the same object.
FieldPtr field_make(int p, int k);
FieldPtr field_of_order(i64 q);

bool poly_irreducible(const std::vector<int>& f, int p);

struct FieldElement {
    FieldPtr parent;
    i64 v = 0;

    FieldElement() = default;
    FieldElement(FieldPtr f, i64 val) : parent(std::move(f)), v(val) {}

    std::vector<int> coeffs() const { return parent->coeffs(v); }
    bool is_zero() const { return v == 0; }
    FieldElement operator+(const FieldElement& o) const { return {parent, parent->add(v, o.v)}; }
    FieldElement operator-(const FieldElement& o) const { return {parent, parent->sub(v, o.v)}; }
    FieldElement operator-() const { return {parent, parent->neg(v)}; }
    FieldElement operator*(const FieldElement& o) const { return {parent, parent->mul(v, o.v)}; }
    FieldElement inv() const { return {parent, parent->inv(v)}; }
    FieldElement pow(i64 e) const { return {parent, parent->pow(v, e)}; }
    FieldElement frob() const { return {parent, parent->frob(v)}; }
    bool operator==(const FieldElement& o) const { return v == o.v && parent->q() == o.parent->q(); }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

enum class SquareClass { zero, square, nonsquare };

SquareClass square_class(const FieldElement& x);
SquareClass square_class(const Field& f, i64 x);

/// A field embedding F_small -> F_big sending the generator x of F_small to a
/// fixed root of its modulus in F_big (the least one in element order).
class Embedding {
public:
    Embedding(FieldPtr small, FieldPtr big);
    i64 operator()(i64 a) const;
    const FieldPtr& small() const { return small_; }
    const FieldPtr& big() const { return big_; }
    /// Preimage of an element of the image, or -1 when b is not in the image.
    i64 preimage(i64 b) const;

private:
    FieldPtr small_, big_;
    i64 root_;
    std::vector<i64> image_;
};

struct QParams {
    i64 q = 0;
    int p = 2;    ///< the prime the parameters refer to
    int eps = 1;  ///< sign with p^a | (q^e - eps) ... see q_params docs
    int a = 0;
    int e = 1;
};

/// p = 2 parameters: eps = (-1)^{(q-1)/2}, a = v_2(q - eps) >= 2.
QParams q_params(i64 q);
/// Odd-p parameters for GL_n(q): e = ord_p(q), p^a = (q^e - 1)_p.
QParams q_params_oddp(i64 q, int p);

/// (b, b') with b^2 + b'^2 = lambda.  For eps = +1 the pair lies in F_q; for
/// eps = -1 it lies in F_{q^2} with b^q = -b and b'^q = -b'.  The returned
/// elements live in F_q or F_{q^2} respectively; lambda is given in F_q.
std::pair<FieldElement, FieldElement> solve_sum_of_squares(const FieldElement& lambda, int eps, i64 q);

}  // namespace radsub
