#include "ekr/pseudoadjacency.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekr {

AVector a_vector(const SchemeParams& params) {
    const int n = params.n, k = params.k, t = params.t;
    AVector out{params, {}};
    out.entries.reserve(t);
    const Rational design_size_inv = Rational(1) / binomial_q(n - t, k - t);
    for (int i = 0; i < t; ++i) {
        Rational sum;
        for (int j = 0; j <= k - i; ++j) {
            Rational term = binomial_q(k - i, j) * binomial_q(n - std::min(k - j, t), n - k);
            if ((k - i - j) % 2 != 0) term = -term;
            sum += term;
        }
        out.entries.push_back(design_size_inv * binomial_q(k, k - i) * sum);
    }
    return out;
}

PseudoadjacencyDescriptor schrijver_descriptor(const SchemeParams& params) {
    const AVector a = a_vector(params);
    BasisVector vec{BasisTag::A, params.k, {}};
    for (int i = 0; i < params.t; ++i) {
        const Rational denom = binomial_q(params.k, params.k - i) *
                               binomial_q(params.n - params.k, params.k - i);
        vec.set(params.k - i, a.a(i) / denom);
    }
    return PseudoadjacencyDescriptor{params, MatrixKind::schrijver, std::move(vec)};
}

PseudoadjacencyDescriptor wilson_descriptor(const SchemeParams& params) {
    BasisVector vec{BasisTag::D, params.k, {}};
    for (int i = 0; i < params.t; ++i) {
        const Integer denom = binomial(params.n - params.k - params.t + i, params.k - params.t);
        if (sgn(denom) == 0) {
            // Unreachable under the n >= 2k domain restriction.
            throw std::logic_error("wilson_descriptor: vanishing denominator at " +
                                   params.str());
        }
        Rational c = Rational(binomial(params.k - 1 - i, params.k - params.t), denom);
        if ((params.t - 1 - i) % 2 != 0) c = -c;
        vec.set(params.k - i, std::move(c));
    }
    return PseudoadjacencyDescriptor{params, MatrixKind::wilson, std::move(vec)};
}

CoefficientIdentityReport verify_coefficient_identity(const SchemeParams& params, int i) {
    if (i < 0 || i >= params.t) {
        throw std::domain_error("verify_coefficient_identity: need 0 <= i <= t-1");
    }
    const int n = params.n, k = params.k, t = params.t;
    const AVector a = a_vector(params);

    Rational lhs;
    for (int j = i; j < t; ++j) {
        Rational term = a.a(j) / (binomial_q(k, k - j) * binomial_q(n - k, k - j));
        term *= binomial_q(k - i, k - j);
        if ((j - i) % 2 != 0) term = -term;
        lhs += term;
    }

    Rational rhs = Rational(binomial(k - 1 - i, k - t), binomial(n - k - t + i, k - t));
    if ((t - 1 - i) % 2 != 0) rhs = -rhs;

    return CoefficientIdentityReport{i, lhs, rhs, lhs == rhs};
}

EqualityReport verify_equality(const SchemeParams& params, EqualityMode mode,
                               std::size_t cap) {
    const PseudoadjacencyDescriptor schrijver = schrijver_descriptor(params);
    const PseudoadjacencyDescriptor wilson = wilson_descriptor(params);
    EqualityReport report{mode, true, {}};
    if (mode == EqualityMode::coefficients) {
        const BasisVector converted = convert(schrijver.coefficients, BasisTag::D);
        for (int r = 0; r <= params.k; ++r) {
            const Rational lhs = converted.coefficient(r);
            const Rational rhs = wilson.coefficients.coefficient(r);
            if (lhs != rhs) {
                report.equal = false;
                report.mismatches.push_back({r, lhs, rhs});
            }
        }
    } else {
        const DenseRationalMatrix s = materialize(params, schrijver.coefficients, cap);
        const DenseRationalMatrix w = materialize(params, wilson.coefficients, cap);
        for (const auto& [row, col] : entrywise_diff(s, w)) {
            report.equal = false;
            report.mismatches.push_back({static_cast<int>(row * s.dim() + col),
                                         s.at(row, col), w.at(row, col)});
        }
    }
    return report;
}

PseudoadjacencyCheck support_and_rowsum_check(const SchemeParams& params,
                                              const PseudoadjacencyDescriptor& descriptor,
                                              std::size_t cap) {
    const DenseRationalMatrix m = materialize(params, descriptor.coefficients, cap);
    const std::vector<Subset> subsets = all_subsets(params.n, params.k);

    PseudoadjacencyCheck check{};
    const auto row_sums = m.row_sum_report();
    check.row_sums_constant = row_sums.constant;
    check.row_sum = row_sums.value;

    check.diagonal_zero = true;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (!m.at(i, i).is_zero()) {
            check.diagonal_zero = false;
            break;
        }
    }

    // Support condition: entries must vanish on non-edges of G(n,k,t),
    // i.e. wherever |F ∩ F'| >= t.
    check.support_ok = true;
    for (std::size_t i = 0; i < m.dim() && check.support_ok; ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (intersection_size(subsets[i], subsets[j]) >= params.t &&
                !m.at(i, j).is_zero()) {
                check.support_ok = false;
                break;
            }
        }
    }
    return check;
}

} // namespace ekr
