#include "supercat/integer.hpp"

#include <ostream>
#include <stdexcept>

#include "supercat/errors.hpp"

namespace supercat {

Integer Integer::from_string(std::string_view text) {
    std::string s(text);
    std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == digits_from)
        throw std::invalid_argument("not an integer: '" + s + "'");
    for (std::size_t i = digits_from; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("not an integer: '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return Integer(mpz_class(s, 10));
}

bool Integer::fits_int64() const {
    static const mpz_class lo(std::to_string(INT64_MIN), 10);
    static const mpz_class hi(std::to_string(INT64_MAX), 10);
    return z_ >= lo && z_ <= hi;
}

std::int64_t Integer::to_int64() const {
    if (!fits_int64())
        throw std::overflow_error("Integer does not fit in int64: " + to_string());
    return std::stoll(to_string());
}

std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) {
    if (b.is_zero())
        throw std::domain_error("division by zero");
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
    return {Integer(std::move(q)), Integer(std::move(r))};
}

Integer mod(const Integer& a, const Integer& b) {
    if (b.is_zero())
        throw std::domain_error("division by zero");
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
    return Integer(std::move(r));
}

Integer div_exact(const Integer& a, const Integer& b, std::string_view what) {
    if (b.is_zero())
        throw IntegrityError(std::string(what) + ": division by zero");
    if (!mpz_divisible_p(a.z_.get_mpz_t(), b.z_.get_mpz_t()))
        throw IntegrityError(std::string(what) + ": " + a.to_string() + " is not divisible by " +
                             b.to_string());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
    return Integer(std::move(q));
}

bool divides(const Integer& divisor, const Integer& value) {
    if (divisor.is_zero())
        return value.is_zero();
    return mpz_divisible_p(value.z_.get_mpz_t(), divisor.z_.get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
    return Integer(std::move(g));
}

Integer pow(const Integer& base, unsigned long exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.z_.get_mpz_t(), exponent);
    return Integer(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

} // namespace supercat
