/** @file verify.hpp
 *  Verification runs shared by the CLI and the test suite: label
 *  enumeration against the brute-force radical-class oracle, the rotation
 *  parity formula in O_2^+(q), and randomized parity checks.
 */
#pragma once

#include "radsub/basics.hpp"
#include "radsub/parity.hpp"

#include <cstdint>
#include <vector>

namespace radsub {

struct OracleComparison {
    i64 ambient_order = 0;
    std::vector<RadicalLabel> labels;
    std::vector<i64> label_orders;   ///< sorted
    std::vector<i64> oracle_orders;  ///< sorted
    bool match = false;              ///< same class count and same order multiset
};

/// Enumerates labels and runs enumerate_radical_classes on the ambient group.
/// Throws CapExceeded when the ambient group does not fit in `cap`.
OracleComparison compare_with_oracle(GroupKind kind, int n, i64 q, int p = 2, Variant variant = Variant::none,
                                     size_t cap = 10000000);

struct RotationParityReport {
    i64 q = 0;
    int rotations = 0;   ///< elements [[a,b],[-b,a]] of O_2^+(q)
    int mismatches = 0;
};

/// Every rotation of O_2^+(q) has parity (t,t) with (a + b i)^{(q - eps)/2} = (-1)^t,
/// i a square root of -1 in F_q or F_{q^2}.
RotationParityReport verify_rotation_parity(i64 q);

struct ParityFuzzReport {
    int n = 0;
    i64 q = 0;
    int words = 0;
    int hom_failures = 0;      ///< parity(XY) != parity(X) + parity(Y)
    int word_failures = 0;     ///< parity(X) differs from the parity read off the reflection word
    int det_failures = 0;      ///< t + t' differs from the determinant bit
    int pivot_failures = 0;    ///< reversed pivot order gives another parity

    bool ok() const { return hom_failures + word_failures + det_failures + pivot_failures == 0; }
};

/// `words` random pairs (X, Y) of products of 1 to 8 random reflections in
/// O_n(q) with the given variant, drawn from a 64-bit Mersenne twister.
ParityFuzzReport parity_fuzz(int n, i64 q, Variant variant, int words, std::uint64_t seed);

}  // namespace radsub
