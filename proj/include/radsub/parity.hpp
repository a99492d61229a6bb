/** @file parity.hpp
 *  The coset of Omega(V) containing an orthogonal isometry, computed from a
 *  decomposition into reflections and the spinor norm of that decomposition.
 */
#pragma once

#include "radsub/matgrp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace radsub {

/// (t, t'): t' is the spinor-norm bit, t + t' is the determinant bit.
struct Parity {
    int t = 0;
    int tp = 0;

    Parity operator^(const Parity& o) const { return {t ^ o.t, tp ^ o.tp}; }
    bool operator==(const Parity& o) const { return t == o.t && tp == o.tp; }
    bool is_zero() const { return t == 0 && tp == 0; }
    int index() const { return t | (tp << 1); }
};

std::string to_string(const Parity& x);

/// A subgroup of (Z_2)^2, as a bitmask over Parity::index().
struct ParityGroup {
    std::uint8_t mask = 1;

    bool contains(const Parity& x) const { return (mask >> x.index()) & 1; }
    int size() const;
    /// Smallest subgroup containing this one and x.
    ParityGroup with(const Parity& x) const;
    std::vector<Parity> elements() const;
    bool operator==(const ParityGroup& o) const { return mask == o.mask; }

    static ParityGroup trivial() { return {}; }
    static ParityGroup full() { return {0xF}; }
    static ParityGroup of(std::initializer_list<Parity> xs);
};

/// e.g. "{(0,0),(1,0)}"
std::string to_string(const ParityGroup& g);

/// Vectors v_1, ..., v_k with X = r_{v_1} ... r_{v_k}, all anisotropic.  The
/// construction fixes an orthogonal basis vector by vector, using one
/// reflection per vector or two when the difference vector is isotropic, so
/// k <= 2n.  `reverse_pivots` processes the basis in the opposite order.
std::vector<std::vector<u8>> reflect_decompose(const Mat& X, const FormSpace& space, bool reverse_pivots = false);

/// The reflection r_v(x) = x - 2 (x,v)/(v,v) v.
Mat reflection(const std::vector<u8>& v, const FormSpace& space);

Parity parity_of(const Mat& X, const FormSpace& space);
ParityGroup parity_group(const std::vector<Mat>& gens, const FormSpace& space);

/// R intersected with Omega(V): the elements of parity (0,0).
GeneratedGroup omega_kernel(const GeneratedGroup& R, const FormSpace& space);

}  // namespace radsub
