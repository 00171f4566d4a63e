// Arbitrary-precision signed integer.
//
// Thin value type over a GMP mpz. Zero is canonical, equality is value
// equality, and no operation rounds. Division comes in two flavours:
// floor division with remainder (`divmod`, `mod`) and `div_exact`, which
// throws IntegrityError when the divisor does not divide.
#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace supercat {

class Integer {
public:
    Integer() = default;

    template <std::signed_integral T>
    Integer(T v) : z_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    Integer(T v) : z_(static_cast<unsigned long>(v)) {}

    /// Parses an optionally signed decimal string; throws std::invalid_argument.
    static Integer from_string(std::string_view text);

    int sign() const { return mpz_sgn(z_.get_mpz_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_odd() const { return mpz_odd_p(z_.get_mpz_t()) != 0; }
    bool is_even() const { return !is_odd(); }
    bool fits_int64() const;
    std::int64_t to_int64() const;
    std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(z_.get_mpz_t(), 2); }

    std::string to_string() const { return z_.get_str(10); }

    Integer operator-() const { return Integer(mpz_class(-z_)); }

    Integer& operator+=(const Integer& rhs) { z_ += rhs.z_; return *this; }
    Integer& operator-=(const Integer& rhs) { z_ -= rhs.z_; return *this; }
    Integer& operator*=(const Integer& rhs) { z_ *= rhs.z_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { a += b; return a; }
    friend Integer operator-(Integer a, const Integer& b) { a -= b; return a; }
    friend Integer operator*(Integer a, const Integer& b) { a *= b; return a; }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        return cmp(a.z_, b.z_) <=> 0;
    }

    /// Floor division: a = q*b + r with r having the sign of b (0 <= r < b for b > 0).
    friend std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b);
    friend Integer mod(const Integer& a, const Integer& b);
    /// a / b, throwing IntegrityError if b does not divide a. `what` names the quotient.
    friend Integer div_exact(const Integer& a, const Integer& b, std::string_view what);
    friend bool divides(const Integer& divisor, const Integer& value);

    friend Integer abs(const Integer& a) { return Integer(mpz_class(::abs(a.z_))); }
    friend Integer gcd(const Integer& a, const Integer& b);
    friend Integer pow(const Integer& base, unsigned long exponent);

    friend std::ostream& operator<<(std::ostream& os, const Integer& v);

    const mpz_class& raw() const { return z_; }

private:
    explicit Integer(mpz_class z) : z_(std::move(z)) {}

    mpz_class z_;
};

std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b);
Integer mod(const Integer& a, const Integer& b);
Integer div_exact(const Integer& a, const Integer& b, std::string_view what = "quotient");
bool divides(const Integer& divisor, const Integer& value);
Integer gcd(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exponent);

/// (-1)^k as an Integer-friendly sign.
inline int alternating_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace supercat
