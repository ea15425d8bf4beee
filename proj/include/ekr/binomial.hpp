#pragma once

#include "ekr/rational.hpp"

#include <mutex>
#include <vector>

namespace ekr {

/// Memoized binomial coefficients under the zero-outside-range convention:
/// C(m,r) = 0 for r < 0 or r > m.  Negative tops are rejected; no in-scope
/// formula needs the generalized extension.
///
/// The Pascal table grows row by row on demand and is safe for concurrent
/// use (growth is internally synchronized).
class BinomialEvaluator {
public:
    BinomialEvaluator() = default;

    /// C(m,r).  Throws std::domain_error for m < 0.
    Integer operator()(long m, long r) const;

private:
    void grow_to(long m) const;

    mutable std::vector<std::vector<Integer>> rows_;
    mutable std::mutex mutex_;
};

/// C(m,r) from a process-wide shared table.
Integer binomial(long m, long r);

/// C(m,r) as a Rational, for use inside rational formulas.
Rational binomial_q(long m, long r);

} // namespace ekr
