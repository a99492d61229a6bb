/** @file matgrp.hpp
 *  Finite matrix groups held as explicit element sets, and the brute-force
 *  oracle for radical p-subgroups built on top of them.
 */
#pragma once

#include "radsub/forms.hpp"

#include <functional>
#include <stdexcept>

namespace radsub {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite matrix group: generator list plus the deduplicated element set,
/// stored as a flat arena of row-major byte encodings with a hash index.
class GeneratedGroup {
public:
    GeneratedGroup() = default;
    GeneratedGroup(GFPtr gf, int n);

    const GF& gf() const { return *gf_; }
    const GFPtr& gf_ptr() const { return gf_; }
    int n() const { return n_; }
    size_t order() const { return count_; }
    const std::vector<Mat>& gens() const { return gens_; }

    Mat element(size_t i) const;
    const u8* data(size_t i) const { return &arena_[i * nn_]; }
    long find(const u8* d) const;
    long find(const Mat& m) const { return find(m.a.data()); }
    bool contains(const Mat& m) const { return find(m) >= 0; }

    /// Appends g to the generators and extends the closure.  Returns false if
    /// g was already an element.  Throws CapExceeded past `cap` elements.
    bool add_generator(const Mat& g, size_t cap = 10000000);

    /// Element indices sorted by encoding (a canonical listing).
    std::vector<Mat> sorted_elements() const;

private:
    std::pair<size_t, bool> insert(const u8* d);
    void rehash(size_t slots);

    GFPtr gf_;
    int n_ = 0;
    size_t nn_ = 0, count_ = 0;
    std::vector<Mat> gens_;
    std::vector<u8> arena_;
    std::vector<uint32_t> slots_;
};

/// Raw n x n product on encodings.
void mul_raw(const GF& F, int n, const u8* x, const u8* y, u8* out);

GeneratedGroup closure(const GFPtr& gf, int n, const std::vector<Mat>& gens, size_t cap = 10000000);

/// The ambient group of a given kind on its standard space.  Generated by
/// rank-one isometries (transvections, reflections, quasi-reflections), with
/// a determinant filter for SL and SU; the order is checked against the
/// classical formula.
struct Ambient {
    GroupKind kind;
    FormSpace space;
    GeneratedGroup group;
};
Ambient ambient_group(GroupKind kind, int n, i64 q, Variant variant = Variant::none, size_t cap = 10000000);

GeneratedGroup normalizer(const GeneratedGroup& ambient, const GeneratedGroup& R);
GeneratedGroup centralizer(const GeneratedGroup& ambient, const GeneratedGroup& S);
GeneratedGroup sylow_p(const GeneratedGroup& ambient, int p);
GeneratedGroup core_p(const GeneratedGroup& group, int p);
bool is_p_group(const GeneratedGroup& g, int p);
bool is_radical(const GeneratedGroup& ambient, const GeneratedGroup& R, int p);

struct RadicalClass {
    GeneratedGroup rep;
    i64 class_size = 0;
    i64 normalizer_order = 0;
};

/// One representative per conjugacy class of radical p-subgroups, sorted by
/// (order, canonical encoding).
std::vector<RadicalClass> enumerate_radical_classes(const GeneratedGroup& ambient, int p, size_t cap = 10000000);

/// Exact order of the group generated by `gens` via a deterministic
/// Schreier-Sims computation on the natural module (base e_1, ..., e_n).
/// Used where explicit element enumeration is out of reach.
i64 bsgs_order(const GF& F, int n, const std::vector<Mat>& gens);

/// `q=<q>;kind=<k>;n=<n>[;variant=<+|->];rows=<r1>;<r2>;...` with rows
/// written as comma-separated element codes.
struct SerializedMatrix {
    i64 q = 0;
    GroupKind kind = GroupKind::GL;
    int n = 0;
    Variant variant = Variant::none;
    Mat m;
};
std::string serialize_matrix(const SerializedMatrix& s);
SerializedMatrix parse_matrix(const std::string& text);

}  // namespace radsub
