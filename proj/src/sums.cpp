#include "supercat/sums.hpp"

#include <stdexcept>
#include <string>

#include "supercat/super_catalan.hpp"

namespace supercat {

namespace {

void require_window(Index n, Index t, Index l, const char* what) {
    if (n < 0 || l < 0 || t < 0 || 2 * t > n)
        throw std::invalid_argument(std::string(what) + " requires n, l >= 0 and 0 <= t <= floor(n/2), got (n=" +
                                    std::to_string(n) + ", t=" + std::to_string(t) +
                                    ", l=" + std::to_string(l) + ")");
}

/// (-1)^k binom(n-2t, k-t) S(k,l) S(n-k,l)
Integer window_term(Index n, Index t, Index k, Index l) {
    Integer term = shared_pascal_table().get(n - 2 * t, k - t) * super_catalan(k, l) *
                   super_catalan(n - k, l);
    return alternating_sign(k) < 0 ? -term : term;
}

template <class Weight>
Integer integer_window_sum(Index n, Index t, Index l, Weight&& weight) {
    Integer acc{0};
    for (Index k = t; k <= n - t; ++k)
        acc += Integer(weight(k)) * window_term(n, t, k, l);
    return acc;
}

/// Weights come as (numerator, denominator) pairs.
template <class Weight>
Rational rational_window_sum(Index n, Index t, Index l, Weight&& weight) {
    Rational acc;
    for (Index k = t; k <= n - t; ++k) {
        auto [num, den] = weight(k);
        acc += Rational(Integer(num) * window_term(n, t, k, l), Integer(den));
    }
    return acc;
}

} // namespace

void ConvolutionParams::validate() const {
    if (n < 0 || l < 0)
        throw std::invalid_argument("convolution parameters require n, l >= 0");
    if (m < 1)
        throw std::invalid_argument("convolution parameters require m >= 1");
    if (t && (*t < 0 || 2 * *t > n))
        throw std::invalid_argument("convolution parameters require 0 <= t <= floor(n/2)");
}

Integer psi(Index n, Index m, Index l) {
    ConvolutionParams{n, m, l, std::nullopt}.validate();
    Integer acc{0};
    for (Index k = 0; k <= n; ++k) {
        Integer term = pow(shared_pascal_table().get(n, k), static_cast<unsigned long>(m)) *
                       super_catalan(k, l) * super_catalan(n - k, l);
        if (alternating_sign(k) < 0)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

Integer psi_t(Index n, Index t, Index l) {
    require_window(n, t, l, "psi_t");
    return integer_window_sum(n, t, l, [](Index) { return 1; });
}

Integer p_sum(Index n, Index t, Index l) {
    require_window(n, t, l, "p_sum");
    return integer_window_sum(n, t, l, [&](Index k) { return n - t - k; });
}

Rational r_sum(Index n, Index t, Index l) {
    require_window(n, t, l, "r_sum");
    return rational_window_sum(n, t, l, [&](Index k) {
        return std::pair{Integer(2 * l + 1), Integer(k + l + 1)};
    });
}

Rational r_prime_sum(Index n, Index t, Index l) {
    require_window(n, t, l, "r_prime_sum");
    return rational_window_sum(n, t, l, [&](Index k) {
        return std::pair{Integer(2 * l + 1), Integer(k + l + 1) * Integer(n - k + l + 1)};
    });
}

Rational r_dprime_sum(Index n, Index t, Index l) {
    require_window(n, t, l, "r_dprime_sum");
    return rational_window_sum(n, t, l, [&](Index k) {
        return std::pair{Integer(2 * l + 1) * Integer(n - k),
                         Integer(k + l + 1) * Integer(n - k + l + 1)};
    });
}

Rational t_sum(Index n, Index t, Index l) {
    require_window(n, t, l, "t_sum");
    return rational_window_sum(n, t, l, [&](Index k) {
        return std::pair{Integer(n - t - k) * Integer(2 * l + 1), Integer(k + l + 1)};
    });
}

Rational t_sum_shifted(Index n, Index t, Index l) {
    require_window(n, t, l, "t_sum_shifted");
    if (2 * t >= n)
        throw std::invalid_argument("t_sum_shifted requires 2t < n");
    const Index inner = n - 1;
    Rational acc = rational_window_sum(inner, t, l, [&](Index k) {
        return std::pair{Integer(2 * n - 2 * k - 1), Integer(k + l + 1) * Integer(n - k + l)};
    });
    return acc * Rational(Integer(2 * (n - 2 * t)) * Integer(2 * l + 1));
}

} // namespace supercat
