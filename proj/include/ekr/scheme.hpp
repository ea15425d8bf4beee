#pragma once

#include "ekr/binomial.hpp"
#include "ekr/errors.hpp"
#include "ekr/matrix.hpp"
#include "ekr/rational.hpp"
#include "ekr/set_family.hpp"
#include "ekr/subset.hpp"

#include <map>
#include <string>

namespace ekr {

/// Validated parameter triple (n,k,t) for the Johnson scheme J(n,k) and the
/// graph G(n,k,t) on k-subsets joining pairs with intersection below t.
///
/// The domain is 0 < t < k < n with n >= 2k; the lower bound on n keeps every
/// binomial inverted in the Wilson coefficients nonzero, and it covers the
/// whole EKR range since (t+1)(k-t+1) >= 2k.
struct SchemeParams {
    int n;
    int k;
    int t;

    SchemeParams(int n, int k, int t);

    Integer vertex_count() const { return binomial(n, k); }
    int ekr_threshold() const { return (t + 1) * (k - t + 1); }
    bool in_ekr_range() const { return n >= ekr_threshold(); }

    std::string str() const;
};

enum class BasisTag { A, D };

/// Coefficient vector over one of the two Bose-Mesner bases of J(n,k):
/// the distance basis {A_i} or the inclusion basis {D_r}.  Absent indices
/// are zero; stored zeros are allowed and compare equal to absence.
struct BasisVector {
    BasisTag tag = BasisTag::A;
    int k = 0;
    std::map<int, Rational> coeff;

    Rational coefficient(int index) const;
    void set(int index, Rational value);

    /// Value-level equality: same tag, same k, same coefficient function.
    friend bool operator==(const BasisVector& a, const BasisVector& b);
};

/// Alternating expansion of A_i over the D basis:
/// A_i = sum_{r=i}^{k} (-1)^{r-i} C(r,i) D_r.
BasisVector a_basis_to_d(int i, int k);

/// Entrywise inverse expansion D_r = sum_{i=r}^{k} C(i,r) A_i.
BasisVector d_basis_to_a(int r, int k);

/// Rewrites a vector over the other basis; converting back is the identity.
BasisVector convert(const BasisVector& vec, BasisTag target);

/// Entry value of the represented matrix at a pair with |F ∩ F'| = s,
/// for every s in [0,k].  Entry values depend only on the intersection size.
std::vector<Rational> value_by_intersection(const BasisVector& vec);

inline constexpr std::size_t kDefaultMaterializeCap = 1000;

/// Distance matrix A_i: entry 1 iff |F ∩ F'| = k-i.
DenseRationalMatrix build_a(const SchemeParams& params, int i,
                            std::size_t cap = kDefaultMaterializeCap);

/// Inclusion matrix D_r: entry C(|F \ F'|, r) = C(k - |F ∩ F'|, r).
DenseRationalMatrix build_d(const SchemeParams& params, int r,
                            std::size_t cap = kDefaultMaterializeCap);

/// Dense matrix represented by the coefficient vector.
DenseRationalMatrix materialize(const SchemeParams& params, const BasisVector& vec,
                                std::size_t cap = kDefaultMaterializeCap);

/// Checks C(n,k) against the cap and returns it as a machine integer.
std::size_t dense_dimension(const SchemeParams& params, std::size_t cap);

/// Inner distribution of a nonempty family with respect to J(n,k):
/// e_i = (# ordered pairs (F,F') in Y^2 with |F ∩ F'| = k-i) / |Y|.
struct InnerDistribution {
    std::vector<Rational> e; // size k+1

    Rational sum() const;
};

InnerDistribution inner_distribution(const SetFamily& family);

} // namespace ekr
