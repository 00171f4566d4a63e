// Exact rational arithmetic over Integer.
//
// Always reduced: gcd(|num|, den) = 1 and den > 0, so zero is 0/1 and an
// integer-valued Rational compares equal to the matching Integer.
#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "supercat/integer.hpp"

namespace supercat {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer value) : num_(std::move(value)), den_(1) {}
    template <std::integral T>
    Rational(T value) : num_(value), den_(1) {}
    /// Throws std::domain_error on a zero denominator.
    Rational(Integer num, Integer den);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == Integer(1); }
    int sign() const { return num_.sign(); }

    /// The integer value; throws IntegrityError when the denominator is not 1.
    Integer to_integer(std::string_view what = "rational") const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational operator-() const { return Rational(-num_, den_, Reduced{}); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    struct Reduced {};
    Rational(Integer num, Integer den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Integer num_;
    Integer den_;
};

} // namespace supercat
