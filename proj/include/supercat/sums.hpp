// Alternating convolutions of super Catalan numbers and their auxiliary sums.
//
// All windowed sums share the summand
//
//     w(k) (-1)^k binom(n-2t, k-t) S(k,l) S(n-k,l),   t <= k <= n-t,
//
// and differ only in the weight w(k):
//
//   psi_t         1
//   p_sum         n-t-k
//   r_sum         (2l+1)/(k+l+1)
//   r_prime_sum   (2l+1)/((k+l+1)(n-k+l+1))
//   r_dprime_sum  (2l+1)(n-k)/((k+l+1)(n-k+l+1))
//   t_sum         (n-t-k)(2l+1)/(k+l+1)
//
// psi(n,m,l) is the full sum over 0 <= k <= n with binom(n,k)^m in place of
// the window binomial. Every window sum requires 0 <= t <= floor(n/2);
// violations throw std::invalid_argument.
#pragma once

#include <optional>

#include "supercat/combinatorics.hpp"
#include "supercat/integer.hpp"
#include "supercat/rational.hpp"

namespace supercat {

/// Bundle validated as: n, l >= 0; m >= 1; t (if present) <= floor(n/2).
struct ConvolutionParams {
    Index n = 0;
    Index m = 1;
    Index l = 0;
    std::optional<Index> t;

    void validate() const;
};

Integer psi(Index n, Index m, Index l);
Integer psi_t(Index n, Index t, Index l);

Integer p_sum(Index n, Index t, Index l);
Rational r_sum(Index n, Index t, Index l);
Rational r_prime_sum(Index n, Index t, Index l);
Rational r_dprime_sum(Index n, Index t, Index l);
Rational t_sum(Index n, Index t, Index l);

/// Right side of the T_t expansion over the (n-1)-window:
/// 2(n-2t)(2l+1) sum_{k=t}^{n-1-t} (-1)^k (2n-2k-1)/((k+l+1)(n-k+l)) binom(n-1-2t,k-t) S(k,l) S(n-1-k,l).
/// Requires 2t < n.
Rational t_sum_shifted(Index n, Index t, Index l);

} // namespace supercat
