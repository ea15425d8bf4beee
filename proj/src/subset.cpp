#include "ekr/subset.hpp"

#include "ekr/binomial.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace ekr {

namespace {

// C(m,r) as uint64; every use here is bounded by C(62,31) < 2^63.
std::uint64_t binom_u64(int m, int r) {
    return binomial(m, r).get_ui();
}

void check_ground(int n, int k) {
    if (n < 1 || n > kMaxGroundSize) {
        throw std::domain_error("subset: ground size n must be in [1, " +
                                std::to_string(kMaxGroundSize) + "]");
    }
    if (k < 0 || k > n) throw std::domain_error("subset: need 0 <= k <= n");
}

} // namespace

int Subset::size() const {
    return std::popcount(bits);
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
        out.push_back(std::countr_zero(rest) + 1);
    }
    return out;
}

Subset Subset::from_elements(const std::vector<int>& elements, int n) {
    check_ground(n, 0);
    Subset s;
    for (int e : elements) {
        if (e < 1 || e > n) {
            throw std::domain_error("subset: element " + std::to_string(e) +
                                    " outside ground set [1, " + std::to_string(n) + "]");
        }
        const std::uint64_t bit = std::uint64_t{1} << (e - 1);
        if (s.bits & bit) {
            throw std::domain_error("subset: duplicate element " + std::to_string(e));
        }
        s.bits |= bit;
    }
    return s;
}

int intersection_size(const Subset& a, const Subset& b) {
    return std::popcount(a.bits & b.bits);
}

std::uint64_t rank_subset(const Subset& f, int n, int k) {
    check_ground(n, k);
    if (f.size() != k || (f.bits >> n) != 0) {
        throw std::domain_error("rank_subset: not a k-subset of [n]");
    }
    std::uint64_t rank = 0;
    int j = 1;
    for (int e : f.elements()) {
        rank += binom_u64(e - 1, j); // 0-based element value choose position
        ++j;
    }
    return rank;
}

Subset unrank_subset(std::uint64_t rank, int n, int k) {
    check_ground(n, k);
    if (rank >= binom_u64(n, k)) {
        throw std::domain_error("unrank_subset: rank out of range");
    }
    Subset s;
    for (int j = k; j >= 1; --j) {
        // Largest 0-based element e with C(e, j) <= remaining rank.
        int e = j - 1;
        while (binom_u64(e + 1, j) <= rank) ++e;
        rank -= binom_u64(e, j);
        s.bits |= std::uint64_t{1} << e;
    }
    return s;
}

std::vector<Subset> all_subsets(int n, int k) {
    check_ground(n, k);
    const std::uint64_t count = binom_u64(n, k);
    std::vector<Subset> out;
    out.reserve(count);
    if (k == 0) {
        out.push_back(Subset{});
        return out;
    }
    // Colex successor walk; cheaper than unranking each position.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        out.push_back(Subset{mask});
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t ripple = mask + low;
        mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
    if (out.size() != count) {
        throw std::logic_error("all_subsets: enumeration count mismatch");
    }
    return out;
}

} // namespace ekr
