#pragma once

#include "ekr/subset.hpp"

#include <iosfwd>
#include <vector>

namespace ekr {

/// A duplicate-free list of k-subsets of [n].
struct SetFamily {
    int n = 0;
    int k = 0;
    std::vector<Subset> blocks;

    std::size_t size() const { return blocks.size(); }

    /// Throws std::domain_error on a wrong-cardinality block, an element
    /// outside [n], or a duplicate block.
    void validate() const;
};

/// Reads the plain-text family format: a `n=<int> k=<int>` header line,
/// `#` comment lines, then one block per line as 1-based space-separated
/// elements.  Validates the result.
SetFamily read_family(std::istream& in);

void write_family(std::ostream& out, const SetFamily& family);

} // namespace ekr
