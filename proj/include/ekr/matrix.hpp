#pragma once

#include "ekr/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ekr {

/// Dense symmetric matrix of exact rationals, indexed by colex subset rank.
class DenseRationalMatrix {
public:
    explicit DenseRationalMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static DenseRationalMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }

    const Rational& at(std::size_t row, std::size_t col) const { return a_[row * n_ + col]; }
    Rational& at(std::size_t row, std::size_t col) { return a_[row * n_ + col]; }

    bool is_symmetric() const;

    Rational row_sum(std::size_t row) const;

    /// Common row sum if all rows agree, otherwise the first differing pair.
    struct RowSumReport {
        bool constant;
        Rational value;          // row 0 sum
        std::size_t row_a = 0;   // differing rows when not constant
        std::size_t row_b = 0;
    };
    RowSumReport row_sum_report() const;

    std::size_t nonzero_count() const;

    friend bool operator==(const DenseRationalMatrix& a, const DenseRationalMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    std::size_t n_;
    std::vector<Rational> a_;
};

/// All entries where the two matrices differ (row, col); empty iff equal.
std::vector<std::pair<std::size_t, std::size_t>> entrywise_diff(const DenseRationalMatrix& a,
                                                                const DenseRationalMatrix& b);

} // namespace ekr
