#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ekr/binomial.hpp"
#include "ekr/subset.hpp"

#include <set>
#include <stdexcept>

using ekr::all_subsets;
using ekr::binomial;
using ekr::rank_subset;
using ekr::Subset;
using ekr::unrank_subset;

TEST_CASE("colex extremes") {
    const Subset least = Subset::from_elements({1, 2, 3}, 7);
    CHECK(rank_subset(least, 7, 3) == 0);

    const std::uint64_t top = binomial(7, 3).get_ui() - 1;
    CHECK(unrank_subset(top, 7, 3) == Subset::from_elements({5, 6, 7}, 7));
}

TEST_CASE("rank and unrank are mutually inverse on all of C([6],3)") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t r = 0; r < binomial(6, 3).get_ui(); ++r) {
        const Subset f = unrank_subset(r, 6, 3);
        CHECK(f.size() == 3);
        CHECK(rank_subset(f, 6, 3) == r);
        seen.insert(f.bits);
    }
    CHECK(seen.size() == 20); // bijection onto {0,...,C(6,3)-1}
}

TEST_CASE("all_subsets enumerates in colex order") {
    const auto subsets = all_subsets(6, 3);
    REQUIRE(subsets.size() == 20);
    for (std::size_t r = 0; r < subsets.size(); ++r) {
        CHECK(rank_subset(subsets[r], 6, 3) == r);
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(rank_subset(Subset::from_elements({1, 2}, 6), 6, 3), std::domain_error);
    CHECK_THROWS_AS(unrank_subset(20, 6, 3), std::domain_error);
    CHECK_THROWS_AS(Subset::from_elements({1, 1, 2}, 6), std::domain_error);
    CHECK_THROWS_AS(Subset::from_elements({0, 2}, 6), std::domain_error);
    CHECK_THROWS_AS(Subset::from_elements({7}, 6), std::domain_error);
}

TEST_CASE("intersection size via bit masks") {
    const Subset a = Subset::from_elements({1, 2, 5}, 7);
    const Subset b = Subset::from_elements({2, 5, 7}, 7);
    CHECK(ekr::intersection_size(a, b) == 2);
    CHECK(a.elements() == std::vector<int>{1, 2, 5});
}
