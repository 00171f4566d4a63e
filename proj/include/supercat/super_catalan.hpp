// Super Catalan numbers S(n,l), Catalan numbers and the closed form phi.
//
// S(n,l) = binom(2n,n) binom(2l,l) / binom(n+l,n) = (2n)!(2l)! / (n! l! (n+l)!).
// Every quotient is computed as one exact division that is checked at
// runtime; a remainder raises IntegrityError.
#pragma once

#include "supercat/combinatorics.hpp"
#include "supercat/integer.hpp"

namespace supercat {

/// (n, l) with n, l >= 0.
struct NLIndex {
    Index n;
    Index l;

    /// Throws std::invalid_argument on a negative component.
    NLIndex(Index n_, Index l_);
};

/// (n, l, t) with 0 <= t <= n and l >= 0.
struct PhiParams {
    Index n;
    Index l;
    Index t;

    PhiParams(Index n_, Index l_, Index t_);
};

Integer super_catalan_ratio(NLIndex idx);
Integer super_catalan_factorial(NLIndex idx);
/// Signed sum over k in [-min(n,l), min(n,l)] of binom(2n,n+k) binom(2l,l+k).
Integer super_catalan_von_szily(NLIndex idx);

/// Memoized S(n,l); safe for concurrent callers.
const Integer& super_catalan(Index n, Index l);

/// binom(2n,n)/(n+1).
Integer catalan(Index n);

/**
 * phi(2n,l,t) = (-1)^t binom(2l,l) binom(2t,t) binom(2(n+l-t),n+l-t) binom(2n,n) binom(2n-2t,n-t)
 *             / (binom(n+l,n) binom(2n+l-t,n) binom(n,t)),
 * evaluated as a single division of the two products.
 */
Integer phi(PhiParams p);

} // namespace supercat
