#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "outext/exact.hpp"

namespace outext {

/// An integer partition: weakly decreasing sequence of positive parts.
/// The empty sequence is the unique partition of 0.
///
/// Partitions are ordered by size first, then in the canonical order used
/// everywhere in this project: reverse lexicographic within a fixed size,
/// so for size 4 the order is (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses the comma text form, e.g. "3,1". The empty string is the
    /// empty partition. Exponent shorthand is display-only and rejected here.
    static Partition parse(std::string_view text);

    int size() const { return size_; }                   // |lambda|
    int length() const { return int(parts_.size()); }    // number of parts
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return i < length() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    /// "2,1,1,1" -- the unambiguous serialization used in all file formats.
    std::string to_text() const;
    /// "2,1^3" -- exponent shorthand, used only in human-readable reports.
    std::string to_display() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n, exactly once, in canonical (reverse lexicographic)
/// order. Deterministic across runs.
std::vector<Partition> generate_partitions(int n);

/// Number of standard Young tableaux of shape lambda, via the hook length
/// formula. f^() = 1.
Int hook_dimension(const Partition& lambda);

/// All partitions of |lambda|-1 obtained by deleting one removable corner
/// cell, in canonical order, without duplicates. Errors on the empty
/// partition.
std::vector<Partition> remove_box_partitions(const Partition& lambda);

/// All hooks (a,1^b) with a >= 1 and 2a+b = m+1, smallest first part first.
std::vector<Partition> hook_family(int m);

/// A partition of n read as the cycle lengths of a conjugacy class of S_n.
struct CycleType {
    Partition partition;
    Int centralizer_order;  // z_mu = prod_i i^{m_i} * m_i!
};

/// All cycle types of S_n, in canonical order of the underlying partitions.
std::vector<CycleType> cycle_types(int n);

Int centralizer_order(const Partition& mu);

}  // namespace outext
