#include "supercat/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "supercat/errors.hpp"

namespace supercat {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero())
        throw std::domain_error("rational with zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = Integer(1);
        return;
    }
    Integer g = gcd(num_, den_);
    if (g != Integer(1)) {
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
}

Integer Rational::to_integer(std::string_view what) const {
    if (!is_integer())
        throw IntegrityError(std::string(what) + " is not an integer: " + to_string());
    return num_;
}

std::string Rational::to_string() const {
    if (is_integer())
        return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero())
        throw std::domain_error("rational division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

} // namespace supercat
