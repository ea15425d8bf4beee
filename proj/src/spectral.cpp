#include "ekr/spectral.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ekr {

namespace {

void check_square_cap(const DenseRationalMatrix& m, std::size_t cap, const char* what) {
    if (m.dim() > cap) {
        throw ResourceLimitError(std::string(what) + ": dimension " + std::to_string(m.dim()) +
                                 " above the cap of " + std::to_string(cap));
    }
}

// One elimination step: pivot original index plus the multiplier column
// W[i][p] / W[p][p] over the then-active rows.  Zero-pivot steps keep an
// empty column.
struct EliminationStep {
    std::size_t pivot;
    std::vector<std::pair<std::size_t, Rational>> multipliers;
};

// Lifts a witness on the current Schur complement to the original
// coordinates: with M = L diag(D, S) L^T and w^T S w < 0, the vector
// v = L^{-T} [0; w] satisfies v^T M v = w^T S w.
std::vector<std::pair<std::size_t, Rational>> lift_witness(
    std::size_t n, const std::vector<EliminationStep>& steps,
    const std::vector<std::pair<std::size_t, Rational>>& witness) {
    std::vector<Rational> v(n);
    for (const auto& [i, x] : witness) v[i] = x;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        Rational sum;
        for (const auto& [i, mult] : it->multipliers) {
            if (!v[i].is_zero()) sum += mult * v[i];
        }
        v[it->pivot] = -sum;
    }
    std::vector<std::pair<std::size_t, Rational>> sparse;
    for (std::size_t i = 0; i < n; ++i) {
        if (!v[i].is_zero()) sparse.emplace_back(i, v[i]);
    }
    return sparse;
}

} // namespace

Rational quadratic_form(const DenseRationalMatrix& m,
                        const std::vector<std::pair<std::size_t, Rational>>& v) {
    Rational total;
    for (const auto& [i, vi] : v) {
        for (const auto& [j, vj] : v) {
            if (!m.at(i, j).is_zero()) total += vi * vj * m.at(i, j);
        }
    }
    return total;
}

PsdCertificate psd_certify(const DenseRationalMatrix& m, PivotRule rule, std::size_t cap) {
    check_square_cap(m, cap, "psd_certify");
    if (!m.is_symmetric()) {
        throw std::domain_error("psd_certify: matrix is not symmetric");
    }
    const std::size_t n = m.dim();
    DenseRationalMatrix w = m;
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    PsdCertificate cert{PsdCertificate::Verdict::psd, {}, {}, Rational(0)};
    std::vector<EliminationStep> steps;

    auto fail_with = [&](std::vector<std::pair<std::size_t, Rational>> witness) {
        cert.verdict = PsdCertificate::Verdict::not_psd;
        cert.witness = lift_witness(n, steps, witness);
        cert.witness_value = quadratic_form(m, cert.witness);
        if (cert.witness_value.sign() >= 0) {
            throw std::logic_error("psd_certify: witness failed re-evaluation");
        }
        return cert;
    };

    while (!active.empty()) {
        // Pivot selection over the remaining diagonal.
        std::size_t best = active.front();
        for (std::size_t i : active) {
            if (w.at(i, i) > w.at(best, best)) best = i;
        }
        if (w.at(best, best).sign() > 0 && rule == PivotRule::first_positive) {
            for (std::size_t i : active) {
                if (w.at(i, i).sign() > 0) {
                    best = i;
                    break;
                }
            }
        }

        const int pivot_sign = w.at(best, best).sign();
        if (pivot_sign < 0) {
            return fail_with({{best, Rational(1)}});
        }
        if (pivot_sign == 0) {
            // Largest diagonal is zero: every zero-diagonal row must be fully
            // zero; a nonzero entry yields an explicit 2x2 indefinite witness.
            bool trimmed = false;
            for (std::size_t pos = 0; pos < active.size();) {
                const std::size_t i = active[pos];
                if (!w.at(i, i).is_zero()) {
                    ++pos;
                    continue;
                }
                for (std::size_t j : active) {
                    if (j == i || w.at(i, j).is_zero()) continue;
                    if (w.at(j, j).sign() < 0) {
                        return fail_with({{j, Rational(1)}});
                    }
                    // w[j][j] = 0 here since the largest diagonal is zero.
                    const Rational other = w.at(i, j).sign() > 0 ? Rational(-1) : Rational(1);
                    return fail_with({{i, Rational(1)}, {j, other}});
                }
                cert.pivots.emplace_back(i, Rational(0));
                steps.push_back({i, {}});
                active.erase(active.begin() + pos);
                trimmed = true;
            }
            if (!trimmed) {
                // All remaining diagonals are negative.
                return fail_with({{best, Rational(1)}});
            }
            continue;
        }

        // Positive pivot: record, form multipliers, update the Schur
        // complement on the remaining active block.
        const Rational pivot_value = w.at(best, best);
        cert.pivots.emplace_back(best, pivot_value);
        active.erase(std::find(active.begin(), active.end(), best));

        EliminationStep step{best, {}};
        for (std::size_t i : active) {
            if (!w.at(i, best).is_zero()) {
                step.multipliers.emplace_back(i, w.at(i, best) / pivot_value);
            }
        }
        for (std::size_t a = 0; a < step.multipliers.size(); ++a) {
            const auto& [i, mi] = step.multipliers[a];
            for (std::size_t b = a; b < step.multipliers.size(); ++b) {
                const auto& [j, mj] = step.multipliers[b];
                w.at(i, j) -= mi * w.at(best, j);
                if (i != j) w.at(j, i) = w.at(i, j);
            }
        }
        steps.push_back(std::move(step));
    }
    return cert;
}

std::size_t exact_rank(const DenseRationalMatrix& m, std::size_t cap) {
    check_square_cap(m, cap, "exact_rank");
    DenseRationalMatrix w = m;
    const std::size_t n = w.dim();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < n; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
        }
        const Rational inv = Rational(1) / w.at(rank, col);
        for (std::size_t i = rank + 1; i < n; ++i) {
            if (w.at(i, col).is_zero()) continue;
            const Rational factor = w.at(i, col) * inv;
            w.at(i, col) = 0;
            for (std::size_t j = col + 1; j < n; ++j) {
                if (!w.at(rank, j).is_zero()) w.at(i, j) -= factor * w.at(rank, j);
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> kernel_basis(const DenseRationalMatrix& m, std::size_t cap) {
    check_square_cap(m, cap, "kernel_basis");
    DenseRationalMatrix w = m;
    const std::size_t n = w.dim();
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot_col(n, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
        }
        const Rational inv = Rational(1) / w.at(rank, col);
        for (std::size_t j = col; j < n; ++j) w.at(rank, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || w.at(i, col).is_zero()) continue;
            const Rational factor = w.at(i, col);
            for (std::size_t j = col; j < n; ++j) {
                if (!w.at(rank, j).is_zero()) w.at(i, j) -= factor * w.at(rank, j);
            }
        }
        pivot_col_of_row.push_back(col);
        is_pivot_col[col] = true;
        ++rank;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        std::vector<Rational> v(n);
        v[free_col] = 1;
        for (std::size_t row = 0; row < pivot_col_of_row.size(); ++row) {
            v[pivot_col_of_row[row]] = -w.at(row, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational row_sum_eigenvalue(const DenseRationalMatrix& m) {
    const auto report = m.row_sum_report();
    if (!report.constant) {
        throw std::domain_error("row_sum_eigenvalue: rows " + std::to_string(report.row_a) +
                                " and " + std::to_string(report.row_b) +
                                " have different sums");
    }
    return report.value;
}

DenseRationalMatrix plus_identity(const DenseRationalMatrix& m, const Rational& scale) {
    DenseRationalMatrix out = m;
    for (std::size_t i = 0; i < out.dim(); ++i) out.at(i, i) += scale;
    return out;
}

DenseRationalMatrix scaled_identity_minus(const Rational& scale, const DenseRationalMatrix& m) {
    DenseRationalMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out.at(i, j) = -m.at(i, j);
        }
        out.at(i, i) += scale;
    }
    return out;
}

SpectralCertificate certify_extremes(const SchemeParams& params,
                                     const PseudoadjacencyDescriptor& descriptor,
                                     std::size_t cap) {
    const std::size_t dim = dense_dimension(params, cap);
    const DenseRationalMatrix m = materialize(params, descriptor.coefficients, cap);
    const Rational lambda1 = row_sum_eigenvalue(m);

    const DenseRationalMatrix shifted = plus_identity(m);
    PsdCertificate shifted_psd = psd_certify(shifted, PivotRule::largest_diagonal, cap);
    const std::size_t shifted_rank = exact_rank(shifted, cap);

    SpectralCertificate cert{params,       dim,          lambda1,      std::move(shifted_psd),
                             shifted_rank, std::nullopt, std::nullopt, std::nullopt};
    if (cert.shifted_psd.psd() && shifted_rank < dim) {
        cert.lambda_min = Rational(-1);
    }
    const PsdCertificate top = psd_certify(scaled_identity_minus(lambda1, m),
                                           PivotRule::largest_diagonal, cap);
    if (top.psd()) {
        cert.lambda_max = lambda1;
    }
    if (cert.lambda_min && cert.lambda_max && cert.lambda_max->sign() > 0) {
        cert.hoffman = hoffman_bound(*cert.lambda_max, *cert.lambda_min, Integer(dim));
    }
    return cert;
}

Rational hoffman_bound(const Rational& lambda1, const Rational& lambdan,
                       const Integer& vertex_count) {
    if (!(lambdan.sign() < 0 && lambda1.sign() > 0)) {
        throw std::domain_error("hoffman_bound: need lambda_n < 0 < lambda_1");
    }
    if (lambda1 <= lambdan) {
        throw std::domain_error("hoffman_bound: need lambda_n < lambda_1");
    }
    return -lambdan / (lambda1 - lambdan) * Rational(vertex_count);
}

} // namespace ekr
