/** @file census.hpp
 *  Partition and 2-core combinatorics, truncated integer power series, and
 *  the unipotent-class / principal-weight counts of orthogonal and spin
 *  groups computed both as series coefficients and by direct enumeration.
 */
#pragma once

#include <string>
#include <vector>

namespace radsub {

using Coef = __int128;

std::string coef_to_string(Coef x);

using Parts = std::vector<int>;

/// All partitions of n, parts weakly decreasing, in reverse lexicographic order.
std::vector<Parts> partitions(int n);

struct Partition {
    Parts parts;

    int size() const;
    /// c_i, the number of parts equal to i.
    int mult(int i) const;
    /// Number of distinct odd parts.
    int a() const;
    /// Largest multiplicity of an odd part, 0 without odd parts.
    int kappa() const;
    int b() const;
    int delta() const;
    /// 1 iff some odd part occurs with odd multiplicity.
    int iota() const;
};

/// Partitions of w in which every even part occurs an even number of times.
std::vector<Partition> partitions_orth(int w);

/// The staircase (k, k-1, ..., 1).
Parts staircase(int k);
/// 2-cores of size at most n, smallest first.
std::vector<Parts> two_cores_upto(int n);
/// True iff no hook of the Young diagram has length 2.
bool is_two_core(const Parts& lam);
/// 2-core computed on a two-runner abacus.
Parts two_core(const Parts& lam);
/// 2-core computed by repeatedly removing dominoes.
Parts two_core_by_stripping(const Parts& lam);

struct TwoQuotient {
    Parts core;
    Parts q0, q1;
};
TwoQuotient two_quotient(const Parts& lam);
Parts from_two_quotient(const TwoQuotient& tq);

/// Row k holds 2^k cores; the rows end with the last non-empty one.
using CoreTower = std::vector<std::vector<Parts>>;
CoreTower core_tower(const Parts& lam);
Parts from_core_tower(const CoreTower& tower);

/// Formal power series truncated after t^N, with exact integer coefficients.
class PSeries {
public:
    explicit PSeries(int N = 64);
    static PSeries one(int N);
    static PSeries monomial(int k, Coef c, int N);

    int N() const { return static_cast<int>(c_.size()) - 1; }
    Coef operator[](int k) const { return k >= 0 && k <= N() ? c_[k] : 0; }
    Coef& at(int k) { return c_.at(k); }

    PSeries operator+(const PSeries& o) const;
    PSeries operator-(const PSeries& o) const;
    PSeries operator*(const PSeries& o) const;
    PSeries scaled(Coef s) const;
    /// Exact division of every coefficient by d; throws if some coefficient is not divisible.
    PSeries divided(Coef d) const;
    /// Multiplicative inverse; the constant term must be 1 or -1.
    PSeries inverse() const;
    /// f(t) -> f(t^k).
    PSeries subst_power(int k) const;
    /// f(t) -> f(-t).
    PSeries subst_neg() const;
    bool operator==(const PSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Coef> c_;
};

/// The nine generating functions, by id: "5.1", "5.1-1", "5.3", "5.3-2",
/// "5.4", "5.5", "J-inv", "J-inv-1", "J-inv-2".
const std::vector<std::string>& series_ids();
/// Closed product form of a named series.  Throws std::invalid_argument for
/// an unknown id or N > 256.
PSeries series_named(const std::string& id, int N = 64);
/// The same series assembled from its defining factors (geometric sums,
/// theta functions, parity splits of theta) instead of the closed form.
PSeries series_expanded(const std::string& id, int N = 64);

enum class ThetaArg { t, neg_t, t2 };
/// theta(x) = sum_{k >= 1} x^{k(k-1)/2} at x = t, -t or t^2.
PSeries theta_series(ThetaArg arg, int N = 64);
/// prod_{k >= 1} (1 + t^k)(1 - t^{2k}).
PSeries theta_jacobi(int N = 64);

/// Unipotent class counts.  O is the full orthogonal group, SO the special
/// orthogonal group, Spin the spin group (discriminant +), J the classes of
/// O with all multiplicities even.  The sign is the type ty(V).
enum class UnipotentTag { O_plus, O_minus, SO_plus, SO_minus, Spin_plus, Spin_minus, J_plus, J_minus };
/// Principal weight counts.  The sign is disc(V); Spin is discriminant +.
enum class WeightTag { O_plus, O_minus, SO_plus, SO_minus, Spin, J_plus, J_minus };

std::string to_string(UnipotentTag t);
std::string to_string(WeightTag t);

/// Throws std::invalid_argument for w < 1 or a tag that does not exist for
/// this w (Spin of type - needs w = 2 mod 4).
long long count_unipotent(int w, UnipotentTag tag);
long long count_principal_weights(int w, WeightTag tag);
/// Triples (l1, l2, k) with 4(|l1| + |l2|) + |k| = w, k a 2-core.
long long count_spin_triples(int w);

struct IdentityRow {
    int w = 0;
    std::string tag;
    Coef gf_value = 0;
    Coef enum_value = 0;
    bool pass = false;
};

/// Every identity for 1 <= w <= w_max (w_max <= 64).
std::vector<IdentityRow> verify_identities(int w_max);
/// CSV with header `w,tag,gf_value,enum_value,pass`.
std::string identities_csv(const std::vector<IdentityRow>& rows);

}  // namespace radsub
