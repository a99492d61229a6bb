/** @file matrix.hpp
 *  Dense matrices over a small finite field (q <= 256) backed by full
 *  addition and multiplication tables.
 */
#pragma once

#include "radsub/gfq.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace radsub {

using u8 = std::uint8_t;

/// Lookup tables for a field of order at most 256.
class GF {
public:
    explicit GF(FieldPtr f);

    const FieldPtr& field() const { return f_; }
    int q() const { return q_; }
    int p() const { return f_->p(); }

    u8 add(u8 a, u8 b) const { return add_[a * q_ + b]; }
    u8 mul(u8 a, u8 b) const { return mul_[a * q_ + b]; }
    u8 sub(u8 a, u8 b) const { return add_[a * q_ + neg_[b]]; }
    u8 neg(u8 a) const { return neg_[a]; }
    u8 inv(u8 a) const;
    u8 pow(u8 a, i64 e) const { return static_cast<u8>(f_->pow(a, e)); }
    u8 from_int(i64 n) const { return static_cast<u8>(f_->from_int(n)); }
    /// x -> x^{sqrt(q)} for fields of square order, identity otherwise.
    u8 conj(u8 a) const { return conj_[a]; }
    bool has_conj() const { return has_conj_; }
    const u8* mul_row(u8 a) const { return &mul_[a * q_]; }
    const u8* add_row(u8 a) const { return &add_[a * q_]; }

private:
    FieldPtr f_;
    int q_;
    bool has_conj_ = false;
    std::vector<u8> add_, mul_, neg_, inv_, conj_;
};

using GFPtr = std::shared_ptr<const GF>;
GFPtr gf_make(i64 q);

/// Row-major matrix with entries encoded as in Field.
struct Mat {
    int r = 0, c = 0;
    std::vector<u8> a;

    Mat() = default;
    Mat(int rows, int cols) : r(rows), c(cols), a(static_cast<size_t>(rows) * cols, 0) {}
    u8& operator()(int i, int j) { return a[static_cast<size_t>(i) * c + j]; }
    u8 operator()(int i, int j) const { return a[static_cast<size_t>(i) * c + j]; }
    bool operator==(const Mat& o) const { return r == o.r && c == o.c && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool operator<(const Mat& o) const { return a < o.a; }
};

Mat identity(int n);
Mat scalar(int n, u8 s);
Mat mat_mul(const GF& F, const Mat& x, const Mat& y);
Mat mat_add(const GF& F, const Mat& x, const Mat& y);
Mat mat_scale(const GF& F, const Mat& x, u8 s);
Mat transpose(const Mat& x);
/// Entrywise x -> x^{sqrt(q)}.
Mat conj(const GF& F, const Mat& x);
/// Conjugate transpose (plain transpose when F has no involution in use).
Mat adjoint(const GF& F, const Mat& x, bool hermitian);
u8 det(const GF& F, const Mat& x);
int rank(const GF& F, Mat x);
/// Inverse; throws std::domain_error when singular.
Mat inverse(const GF& F, const Mat& x);
Mat mat_pow(const GF& F, const Mat& x, i64 e);
Mat kron(const GF& F, const Mat& x, const Mat& y);
Mat block_diag(const std::vector<Mat>& blocks);
/// Basis (as rows) of the null space {v : x v = 0}.
std::vector<std::vector<u8>> null_space(const GF& F, const Mat& x);
/// Smallest k >= 1 with x^k = 1 (x invertible).
i64 mat_order(const GF& F, const Mat& x);

std::vector<u8> mat_vec(const GF& F, const Mat& x, const std::vector<u8>& v);
/// Bilinear or sesquilinear value u^T G v (v conjugated when hermitian).
u8 form_value(const GF& F, const Mat& G, const std::vector<u8>& u, const std::vector<u8>& v, bool hermitian);

std::string mat_to_string(const Mat& x);

}  // namespace radsub
