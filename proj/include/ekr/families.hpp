#pragma once

#include "ekr/pseudoadjacency.hpp"
#include "ekr/scheme.hpp"
#include "ekr/set_family.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ekr {

/// The star of [t]: all k-subsets of [n] containing {1,...,t}.  This is the
/// extremal t-intersecting family, of size C(n-t, k-t).
SetFamily star_family(const SchemeParams& params);

/// True iff every pair of distinct blocks shares at least t elements.
bool is_t_intersecting(const SetFamily& family, int t);

inline constexpr std::size_t kDefaultAlphaCap = 40;

/// Exact maximum size of a t-intersecting family in C([n],k), i.e. the
/// independence number of G(n,k,t), with one maximum family as witness.
/// The witness is deterministic: the lexicographically smallest maximum
/// family by block rank sequence.  Exhaustive branch-and-bound; refuses to
/// run when C(n,k) exceeds the cap (use the Hoffman certificate instead).
struct AlphaResult {
    std::size_t alpha;
    SetFamily witness;
};

AlphaResult brute_alpha(const SchemeParams& params, std::size_t cap = kDefaultAlphaCap);

/// A validated t-(n,k,1) design: every t-subset of [n] lies in exactly one
/// block.
struct DesignRecord {
    std::string name;
    int t;
    int n;
    int k;
    int lambda; // always 1 for the registered systems
    SetFamily family;
};

/// Built-in registry: "fano" (the 2-(7,3,1) system) and "sts9" (the
/// 2-(9,3,1) system given by the lines of AG(2,3)).  Validated at load.
const DesignRecord& design_registry(std::string_view name);

std::vector<std::string> design_names();

/// Per-index comparison between Eq-style a-vector entries and the design's
/// measured inner distribution: a_{k-i} vs e_{k-i} for i = 0..t-1.
struct DesignConsistencyReport {
    struct Row {
        int index; // k - i
        Rational a;
        Rational e;
        bool match;
    };
    std::vector<Row> rows;
    bool all_match;
};

DesignConsistencyReport design_consistency_check(const DesignRecord& record);

} // namespace ekr
