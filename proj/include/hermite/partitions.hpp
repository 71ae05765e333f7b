#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hermite/errors.hpp"

namespace hermite {

// Weakly decreasing tuple of nonnegative integers. The number of slots is
// significant: trailing zeros are kept, because the wedge-space and staircase
// constructions treat a zero slot as a value like any other. (2,1) and
// (2,1,0) are distinct Partition values with equal weight.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition padded(const Partition& p, int slots);

    int slots() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    // part(i) is 0 beyond the stored slots.
    int part(int i) const { return i < slots() ? parts_[static_cast<std::size_t>(i)] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    Partition trimmed() const;    // drop trailing zeros
    Partition transposed() const; // Young-diagram transpose (trimmed form)

    bool fits_box(int rows, int cols) const;
    // All slot values pairwise distinct, zero slots included.
    bool is_regular() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Deterministic total order for map keys (slot count, then lexicographic).
    bool operator<(const Partition& o) const;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

enum class Dominance { Dominates, DominatedBy, Equal, Incomparable };

// Prefix-sum comparison of two partitions of equal weight.
// Throws WeightMismatchError otherwise.
Dominance dominance(const Partition& a, const Partition& b);

// Canonical linear order of a same-weight set: an explicitly computed linear
// extension of dominance with dominated elements first, ties broken by
// reverse-lexicographic comparison of the slot tuples. Matrix-level
// triangularity statements are made against this order.
std::vector<Partition> canonical_order(std::vector<Partition> items);

// Partitions of k with at most m parts, each at most ell, padded to exactly
// m slots. With regular=true keeps only those whose m slot values are
// pairwise distinct. Generation order is unspecified; see BoxedPartitionSet
// for the canonically sorted container.
std::vector<Partition> enumerate_box(int k, int m, int ell, bool regular = false);

// enumerate_box for every weight without materializing: calls fn for each
// partition in the m x ell box (any weight), trailing zeros explicit.
void for_each_in_box(int m, int ell, const std::function<void(const Partition&)>& fn);

struct BoxedPartitionSet {
    int k = 0;
    int m = 0;
    int ell = 0;
    bool regular = false;
    std::vector<Partition> members; // canonical order
};

BoxedPartitionSet boxed_partitions(int k, int m, int ell, bool regular = false);

// Coefficient list [p_0, ..., p_{ell*m}] of the Gaussian binomial
// [m+ell choose m]_q; p_n counts partitions of n in an ell x m box.
std::vector<std::int64_t> gaussian_binomial(int ell, int m);

// p_k - p_{k-1} from the Gaussian binomial; equals the two-row rectangular
// Kronecker coefficient and the two-row plethysm multiplicity.
std::int64_t b_coefficient(int k, int ell, int m);

// Staircase vector (m-1, m-2, ..., 0).
Partition staircase(int m);

// lambda + d_m, slotwise, on partitions in the m x ell box. The image is a
// regular partition in the m x (ell+m-1) box.
Partition tilde_w(const Partition& lambda, int m, int ell);

// Complement step: the m slot values of lambda form an m-subset S of
// {0,...,ell+m-1}; returns the sorted tuple (ell+m-1 - s) over the
// complement of S, an ell-slot regular partition.
Partition tilde_d(const Partition& lambda, int m, int ell);

// lambda - d_ell, slotwise; entries must land in [0, m].
Partition tilde_w_star(const Partition& lambda, int ell, int m);

} // namespace hermite
