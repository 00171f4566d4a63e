// D sums for power-m binomial sums and the divisibility witness pipeline.
//
// For a summand F(n,k,l) the family
//
//     A(n,m,l)     = sum_k binom(n,k)^m F(n,k,l)
//     D(n,j,t;l)   = sum_{u=0}^{n-2j} binom(n-j,u) binom(n-j,j+u) binom(n,j+u)^t F(n,j+u,l)
//     A_t(n,l)     = sum_{k=t}^{n-t} binom(n-2t,k-t) F(n,k,l)
//
// satisfies A(n,m,l) = D(n,0,m-2;l) for m >= 2, a step recurrence in t and a
// base case at t = 0 expressed through A_t. This header exposes each route
// separately so they can be compared against one another.
//
// The second half is specific to F_psi(n,k,l) = (-1)^k S(k,l) S(n-k,l). It
// produces explicit quotients by S(n,l) (divisibility witnesses) for
// D_psi(2n,j,t;l) and propagates them level by level.
#pragma once

#include <functional>
#include <vector>

#include "supercat/combinatorics.hpp"
#include "supercat/integer.hpp"
#include "supercat/rational.hpp"

namespace supercat {

/// Pure integer-valued map (n, k, l) -> F(n,k,l), 0 <= k <= n.
using SummandFunction = std::function<Integer(Index n, Index k, Index l)>;

/// F(n,k,l) = (-1)^k S(k,l) S(n-k,l).
SummandFunction psi_summand();
/// F(n,k,l) = 1, the plain power sum of binomials.
SummandFunction unit_summand();

/// (n, j, t, l), all non-negative, j <= floor(n/2).
struct DSumParams {
    Index n;
    Index j;
    Index t;
    Index l;

    DSumParams(Index n_, Index j_, Index t_, Index l_);
};

Integer d_sum_direct(const SummandFunction& f, DSumParams p);

/// Level t from level t-1 via the step recurrence; requires t >= 1. The level
/// t-1 values come from the recursive route, never from d_sum_direct.
Integer d_sum_step(const SummandFunction& f, DSumParams p);

/// Any level, built from the A_t base case and repeated steps.
Integer d_sum_recursive(const SummandFunction& f, DSumParams p);

/// Requires 0 <= t <= floor(n/2).
Integer a_t(const SummandFunction& f, Index n, Index t, Index l);

/// D(n,j,0;l) = sum_u binom(n-j,u) binom(n-j-u,j+u) A_{j+u}(n,l).
Integer d_sum_base(const SummandFunction& f, Index n, Index j, Index l);

/// D(n,j,0;l) as the double sum
/// sum_u binom(n-j,j+u) binom(n-2j-u,u) sum_v binom(n-2j-2u,v) F(n,j+u+v,l).
Integer d_sum_base_expanded(const SummandFunction& f, Index n, Index j, Index l);

/// Table of D(n,j,t;l) for every j <= floor(n/2) and t <= t_max, filled from the
/// base case upwards with the step recurrence.
class DSumLevels {
public:
    DSumLevels(const SummandFunction& f, Index n, Index l, Index t_max);

    const Integer& at(Index j, Index t) const;
    Index n() const { return n_; }
    Index t_max() const { return static_cast<Index>(levels_.size()) - 1; }

private:
    Index n_;
    std::vector<std::vector<Integer>> levels_; // [t][j]
};

// ---------------------------------------------------------------------------
// Psi-specific pipeline. Here n is the half length: the sums live at 2n.

/// Q(n,s,l) = sum_{v=0}^{n-s} (-1)^v binom(2(s+v),s+v) binom(2(n+l-s-v),n+l-s-v) binom(n-s,v)
///            / binom(2n+l-s-v, n).   Requires 0 <= s <= n.
Rational q_sum(Index n, Index s, Index l);

/// binom(2n,n) Q(n,s,l) as the integer
/// sum_v (-1)^v binom(2(s+v),s+v) binom(n-s,v) S(n, n+l-s-v).
/// Throws IntegrityError if binom(2n,n) q_sum disagrees or is not integral.
Integer q_scaled(Index n, Index s, Index l);

/// D_psi(2n,j,0;l) factored as S(n,l) * cofactor. The cofactor is rational in
/// general (only the product is guaranteed integral for j > 0).
struct BaseWitness {
    Integer value;
    Integer divisor;
    Rational cofactor;
};

/// Requires 0 <= j <= n. Checked against d_sum_direct; mismatch throws IntegrityError.
BaseWitness d_psi_base_closed(Index n, Index j, Index l);

/// D_psi(2n,j,1;l) = (-1)^j * divisor * cofactor with an integer cofactor.
struct LevelWitness {
    Integer value;
    Integer divisor;
    Integer cofactor;
};

/// Requires 0 <= j <= n. Checked against d_sum_direct; mismatch throws IntegrityError.
LevelWitness d_psi_level1(Index n, Index j, Index l);

/**
 * Quotients D_psi(2n,j,t;l) / S(n,l) for t in [1, t_max] and j in [0, n].
 * Level 1 comes from d_psi_level1; each higher level is obtained from the
 * previous one by the step recurrence applied to quotients only, so no
 * division happens after level 1.
 */
class PsiWitnessTable {
public:
    PsiWitnessTable(Index n, Index l, Index t_max);

    const Integer& divisor() const { return divisor_; }
    const Integer& quotient(Index j, Index t) const;
    /// divisor * quotient
    Integer value(Index j, Index t) const;

private:
    Index n_;
    Integer divisor_;
    std::vector<std::vector<Integer>> quotients_; // [t-1][j]
};

/// sum_{u=0}^{n} (-1)^u binom(2u,u) S(n,n+l-u) binom(n,u), the cofactor of
/// S(n,l) in psi(2n,2,l).
Integer psi2_cofactor(Index n, Index l);

/// Quotient psi(2n,m,l) / S(n,l) built without dividing psi: S(n+l,n) for
/// m = 1, psi2_cofactor for m = 2, the witness table for m >= 3.
Integer psi_witness_quotient(Index n, Index m, Index l);

struct DivisionOutcome {
    bool exact;
    Integer quotient;
    Integer remainder;
};

/// Floor division with the remainder exposed; divisor must be non-zero.
DivisionOutcome divide(const Integer& value, const Integer& divisor);

/// psi(2n,m,l) divided by S(n,l).
DivisionOutcome psi_divisibility_check(Index n, Index m, Index l);

} // namespace supercat
