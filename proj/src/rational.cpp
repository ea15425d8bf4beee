#include "ekr/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ekr {

namespace {

[[noreturn]] void throw_zero_division() {
    throw std::domain_error("Rational: division by zero");
}

} // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw_zero_division();
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw_zero_division();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        Integer num(std::string(text.substr(0, slash)));
        Integer den(std::string(text.substr(slash + 1)));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("Rational: cannot parse '" + std::string(text) + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw_zero_division();
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace ekr
