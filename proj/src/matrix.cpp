#include "ekr/matrix.hpp"

namespace ekr {

DenseRationalMatrix DenseRationalMatrix::identity(std::size_t n) {
    DenseRationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool DenseRationalMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (at(i, j) != at(j, i)) return false;
        }
    }
    return true;
}

Rational DenseRationalMatrix::row_sum(std::size_t row) const {
    Rational sum;
    for (std::size_t j = 0; j < n_; ++j) sum += at(row, j);
    return sum;
}

DenseRationalMatrix::RowSumReport DenseRationalMatrix::row_sum_report() const {
    RowSumReport report{true, n_ > 0 ? row_sum(0) : Rational(0), 0, 0};
    for (std::size_t i = 1; i < n_; ++i) {
        if (row_sum(i) != report.value) {
            return RowSumReport{false, report.value, 0, i};
        }
    }
    return report;
}

std::size_t DenseRationalMatrix::nonzero_count() const {
    std::size_t count = 0;
    for (const Rational& x : a_) {
        if (!x.is_zero()) ++count;
    }
    return count;
}

std::vector<std::pair<std::size_t, std::size_t>> entrywise_diff(const DenseRationalMatrix& a,
                                                                const DenseRationalMatrix& b) {
    std::vector<std::pair<std::size_t, std::size_t>> diffs;
    if (a.dim() != b.dim()) {
        diffs.emplace_back(a.dim(), b.dim());
        return diffs;
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a.at(i, j) != b.at(i, j)) diffs.emplace_back(i, j);
        }
    }
    return diffs;
}

} // namespace ekr
