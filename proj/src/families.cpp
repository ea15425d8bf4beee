#include "ekr/families.hpp"

#include <algorithm>
#include <bitset>
#include <stdexcept>

namespace ekr {

SetFamily star_family(const SchemeParams& params) {
    const std::uint64_t core = (std::uint64_t{1} << params.t) - 1; // {1,...,t}
    SetFamily family{params.n, params.k, {}};
    for (const Subset& tail : all_subsets(params.n - params.t, params.k - params.t)) {
        family.blocks.push_back(Subset{core | (tail.bits << params.t)});
    }
    return family;
}

bool is_t_intersecting(const SetFamily& family, int t) {
    family.validate();
    for (std::size_t i = 0; i < family.blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < family.blocks.size(); ++j) {
            if (intersection_size(family.blocks[i], family.blocks[j]) < t) return false;
        }
    }
    return true;
}

namespace {

constexpr std::size_t kAlphaBits = 256;
using VertexSet = std::bitset<kAlphaBits>;

// Compatibility graph on colex ranks: u ~ v iff |F_u ∩ F_v| >= t.  Maximum
// cliques here are exactly the maximum t-intersecting families, i.e. the
// maximum independent sets of G(n,k,t).
struct CompatGraph {
    std::size_t n_vertices;
    std::vector<VertexSet> adj;

    CompatGraph(const SchemeParams& params, const std::vector<Subset>& subsets)
        : n_vertices(subsets.size()), adj(subsets.size()) {
        for (std::size_t u = 0; u < n_vertices; ++u) {
            for (std::size_t v = u + 1; v < n_vertices; ++v) {
                if (intersection_size(subsets[u], subsets[v]) >= params.t) {
                    adj[u].set(v);
                    adj[v].set(u);
                }
            }
        }
    }
};

std::size_t first_vertex(const VertexSet& s) {
    return s._Find_first();
}

// Greedy clique-cover style bound: colors candidates with independent color
// classes; a clique picks at most one vertex per class.
std::size_t coloring_bound(const CompatGraph& g, VertexSet candidates) {
    std::size_t colors = 0;
    while (candidates.any()) {
        VertexSet cls_blocked;
        for (std::size_t v = first_vertex(candidates); v < g.n_vertices;
             v = (candidates & ~cls_blocked)._Find_next(v)) {
            candidates.reset(v);
            cls_blocked |= g.adj[v];
        }
        ++colors;
    }
    return colors;
}

void expand_max(const CompatGraph& g, VertexSet candidates, std::size_t size,
                std::size_t& best) {
    if (size > best) best = size;
    while (candidates.any()) {
        if (size + coloring_bound(g, candidates) <= best) return;
        const std::size_t v = first_vertex(candidates);
        candidates.reset(v);
        expand_max(g, candidates & g.adj[v], size + 1, best);
    }
}

// True iff the candidate set contains a clique of the requested size.
bool feasible(const CompatGraph& g, VertexSet candidates, std::size_t need) {
    if (need == 0) return true;
    if (candidates.count() < need) return false;
    if (coloring_bound(g, candidates) < need) return false;
    const std::size_t v = first_vertex(candidates);
    if (feasible(g, candidates & g.adj[v], need - 1)) return true;
    candidates.reset(v);
    return feasible(g, candidates, need);
}

} // namespace

AlphaResult brute_alpha(const SchemeParams& params, std::size_t cap) {
    const Integer count = params.vertex_count();
    if (!count.fits_ulong_p() || count.get_ui() > cap || count.get_ui() > kAlphaBits) {
        throw ResourceLimitError("brute_alpha: C(n,k) = " + count.get_str() +
                                 " exceeds the exhaustive-search cap of " +
                                 std::to_string(std::min<std::size_t>(cap, kAlphaBits)) +
                                 "; use the Hoffman certificate route instead");
    }
    const std::vector<Subset> subsets = all_subsets(params.n, params.k);
    const CompatGraph graph(params, subsets);

    VertexSet all;
    for (std::size_t v = 0; v < graph.n_vertices; ++v) all.set(v);

    std::size_t best = 0;
    expand_max(graph, all, 0, best);

    // Lexicographically smallest maximum family by rank sequence: at each
    // step take the lowest rank that keeps the maximum size reachable.  An
    // infeasible vertex stays infeasible as candidates shrink, so it can be
    // discarded permanently.
    SetFamily witness{params.n, params.k, {}};
    VertexSet candidates = all;
    std::size_t remaining = best;
    while (remaining > 0) {
        const std::size_t v = first_vertex(candidates);
        if (v >= graph.n_vertices) {
            throw std::logic_error("brute_alpha: witness reconstruction failed");
        }
        if (feasible(graph, candidates & graph.adj[v], remaining - 1)) {
            witness.blocks.push_back(subsets[v]);
            candidates &= graph.adj[v];
            --remaining;
        } else {
            candidates.reset(v);
        }
    }
    return AlphaResult{best, std::move(witness)};
}

namespace {

SetFamily make_family(int n, int k, const std::vector<std::vector<int>>& blocks) {
    SetFamily family{n, k, {}};
    for (const auto& block : blocks) {
        family.blocks.push_back(Subset::from_elements(block, n));
    }
    family.validate();
    return family;
}

void validate_design(const DesignRecord& record) {
    // Exactly-one-block covering property for every t-subset of [n].
    for (const Subset& t_set : all_subsets(record.n, record.t)) {
        int covering = 0;
        for (const Subset& block : record.family.blocks) {
            if ((t_set.bits & block.bits) == t_set.bits) ++covering;
        }
        if (covering != 1) {
            throw std::logic_error("design " + record.name + ": a " +
                                   std::to_string(record.t) +
                                   "-subset is covered " + std::to_string(covering) +
                                   " times (expected exactly once)");
        }
    }
}

std::vector<DesignRecord> build_registry() {
    std::vector<DesignRecord> records;
    records.push_back(DesignRecord{
        "fano", 2, 7, 3, 1,
        make_family(7, 3,
                    {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}})});
    // Lines of the affine plane AG(2,3) on the 3x3 grid 1..9.
    records.push_back(DesignRecord{
        "sts9", 2, 9, 3, 1,
        make_family(9, 3,
                    {{1, 2, 3}, {4, 5, 6}, {7, 8, 9},
                     {1, 4, 7}, {2, 5, 8}, {3, 6, 9},
                     {1, 5, 9}, {2, 6, 7}, {3, 4, 8},
                     {1, 6, 8}, {2, 4, 9}, {3, 5, 7}})});
    for (const DesignRecord& record : records) validate_design(record);
    return records;
}

} // namespace

const DesignRecord& design_registry(std::string_view name) {
    static const std::vector<DesignRecord> records = build_registry();
    for (const DesignRecord& record : records) {
        if (record.name == name) return record;
    }
    throw std::domain_error("design_registry: unknown design '" + std::string(name) +
                            "' (available: fano, sts9)");
}

std::vector<std::string> design_names() {
    return {"fano", "sts9"};
}

DesignConsistencyReport design_consistency_check(const DesignRecord& record) {
    const SchemeParams params(record.n, record.k, record.t);
    const AVector a = a_vector(params);
    const InnerDistribution inner = inner_distribution(record.family);
    DesignConsistencyReport report{{}, true};
    for (int i = 0; i < params.t; ++i) {
        const int index = params.k - i;
        const Rational& a_value = a.a(i);
        const Rational& e_value = inner.e[index];
        const bool match = a_value == e_value;
        report.rows.push_back({index, a_value, e_value, match});
        report.all_match = report.all_match && match;
    }
    return report;
}

} // namespace ekr
