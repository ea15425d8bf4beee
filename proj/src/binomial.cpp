#include "ekr/binomial.hpp"

#include <stdexcept>

namespace ekr {

Integer BinomialEvaluator::operator()(long m, long r) const {
    if (m < 0) throw std::domain_error("binomial: negative top argument");
    if (r < 0 || r > m) return 0;
    std::lock_guard<std::mutex> lock(mutex_);
    grow_to(m);
    return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)];
}

void BinomialEvaluator::grow_to(long m) const {
    for (long row = static_cast<long>(rows_.size()); row <= m; ++row) {
        std::vector<Integer> entries(static_cast<std::size_t>(row) + 1);
        entries.front() = 1;
        entries.back() = 1;
        for (long j = 1; j < row; ++j) {
            entries[j] = rows_[row - 1][j - 1] + rows_[row - 1][j];
        }
        rows_.push_back(std::move(entries));
    }
}

Integer binomial(long m, long r) {
    static BinomialEvaluator shared;
    return shared(m, r);
}

Rational binomial_q(long m, long r) {
    return Rational(binomial(m, r));
}

} // namespace ekr
