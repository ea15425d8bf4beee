#pragma once

#include <cstdint>
#include <vector>

namespace ekr {

/// A k-subset of [n] = {1,...,n}, stored as a bit mask (bit i-1 <=> element i).
/// Ground sets up to n = 62 are supported, which keeps every colex rank
/// representable in a 64-bit integer.
struct Subset {
    std::uint64_t bits = 0;

    int size() const;
    bool contains(int element) const { return (bits >> (element - 1)) & 1u; }

    /// Elements in increasing order, 1-based.
    std::vector<int> elements() const;

    static Subset from_elements(const std::vector<int>& elements, int n);

    friend bool operator==(const Subset&, const Subset&) = default;
};

int intersection_size(const Subset& a, const Subset& b);

constexpr int kMaxGroundSize = 62;

/// Colexicographic rank of a k-subset of [n], in [0, C(n,k)).
std::uint64_t rank_subset(const Subset& f, int n, int k);

/// Inverse of rank_subset.
Subset unrank_subset(std::uint64_t rank, int n, int k);

/// All k-subsets of [n] in colex order; index in the result equals the rank.
std::vector<Subset> all_subsets(int n, int k);

} // namespace ekr
