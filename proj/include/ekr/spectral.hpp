#pragma once

#include "ekr/pseudoadjacency.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ekr {

inline constexpr std::size_t kDefaultSpectralCap = 300;

enum class PivotRule {
    largest_diagonal, // default: largest remaining diagonal, ties to lowest index
    first_positive,   // lowest-index positive diagonal; for independent re-runs
};

/// Exact positive-semidefiniteness verdict from a symmetric elimination over
/// the rationals.  On psd: the pivot sequence, all nonnegative, where every
/// zero pivot had a fully zero row at its elimination step.  On not_psd: a
/// sparse vector v with v^T M v < 0, re-evaluable against the input.
struct PsdCertificate {
    enum class Verdict { psd, not_psd };

    Verdict verdict;
    std::vector<std::pair<std::size_t, Rational>> pivots; // (original index, pivot)
    std::vector<std::pair<std::size_t, Rational>> witness;
    Rational witness_value; // v^T M v, strictly negative on not_psd

    bool psd() const { return verdict == Verdict::psd; }
};

PsdCertificate psd_certify(const DenseRationalMatrix& m,
                           PivotRule rule = PivotRule::largest_diagonal,
                           std::size_t cap = kDefaultSpectralCap);

/// v^T M v for a sparse vector; used to re-verify not_psd witnesses.
Rational quadratic_form(const DenseRationalMatrix& m,
                        const std::vector<std::pair<std::size_t, Rational>>& v);

/// Rank over the rationals via exact row reduction.
std::size_t exact_rank(const DenseRationalMatrix& m, std::size_t cap = kDefaultSpectralCap);

/// A basis of the exact kernel; size equals dim - exact_rank.
std::vector<std::vector<Rational>> kernel_basis(const DenseRationalMatrix& m,
                                                std::size_t cap = kDefaultSpectralCap);

/// The common row sum, which is an eigenvalue on the all-ones vector.
/// Throws std::domain_error naming two differing rows otherwise.
Rational row_sum_eigenvalue(const DenseRationalMatrix& m);

DenseRationalMatrix plus_identity(const DenseRationalMatrix& m, const Rational& scale = 1);
DenseRationalMatrix scaled_identity_minus(const Rational& scale, const DenseRationalMatrix& m);

/// Exact spectral facts for a materialized pseudoadjacency matrix M:
///   lambda_min = -1 is certified by M + I psd together with rank(M + I) < N;
///   lambda_max = row sum is certified by (row_sum * I) - M psd;
///   the Hoffman bound (-lambda_min / (lambda_max - lambda_min)) * N is filled
///   only when both extremes certify.
struct SpectralCertificate {
    SchemeParams params;
    std::size_t dimension;
    Rational row_sum_eigenvalue;
    PsdCertificate shifted_psd; // certificate for M + I
    std::size_t shifted_rank;   // exact rank of M + I
    std::optional<Rational> lambda_min;
    std::optional<Rational> lambda_max;
    std::optional<Rational> hoffman;

    bool fully_certified() const { return lambda_min.has_value() && lambda_max.has_value(); }
};

SpectralCertificate certify_extremes(const SchemeParams& params,
                                     const PseudoadjacencyDescriptor& descriptor,
                                     std::size_t cap = kDefaultSpectralCap);

/// (-lambda_n / (lambda_1 - lambda_n)) * vertex_count; requires
/// lambda_n < 0 < lambda_1.
Rational hoffman_bound(const Rational& lambda1, const Rational& lambdan,
                       const Integer& vertex_count);

} // namespace ekr
