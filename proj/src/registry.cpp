#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "supercat/dsums.hpp"
#include "supercat/errors.hpp"
#include "supercat/rational.hpp"
#include "supercat/sums.hpp"
#include "supercat/super_catalan.hpp"
#include "supercat/verifier.hpp"

namespace supercat::verify {

namespace {

Integer sgn(Index k, Integer v) { return alternating_sign(k) < 0 ? -v : v; }
Integer I(Index v) { return Integer(v); }

Verdict equal(const Integer& lhs, const Integer& rhs) {
    return {lhs.to_string(), rhs.to_string(), lhs == rhs, {}};
}

Verdict equal(const Rational& lhs, const Rational& rhs) {
    return {lhs.to_string(), rhs.to_string(), lhs == rhs, {}};
}

/// lhs = value mod divisor, rhs = 0.
Verdict divisible(const Integer& value, const Integer& divisor) {
    Integer r = mod(value, divisor);
    return {r.to_string(), "0", r.is_zero(), {}};
}

/// Same rendering as divisible(); holds when the remainder is non-zero.
Verdict not_divisible(const Integer& value, const Integer& divisor) {
    Integer r = mod(value, divisor);
    return {r.to_string(), "0", !r.is_zero(), "expects a non-zero remainder"};
}

/// Runs `per_j` for j = 0..j_max and reports the first failure, or the j = 0
/// verdict when all hold.
template <class PerJ>
Verdict for_every_j(Index j_max, PerJ&& per_j) {
    Verdict first;
    for (Index j = 0; j <= j_max; ++j) {
        Verdict v = per_j(j);
        if (!v.holds) {
            v.note = "j=" + std::to_string(j) + (v.note.empty() ? "" : "; " + v.note);
            return v;
        }
        if (j == 0)
            first = std::move(v);
    }
    return first;
}

struct Builder {
    std::vector<IdentitySpec> specs;

    void add(std::string id, std::string description, unsigned coords, std::string domain_text,
             std::function<bool(const GridPoint&)> in_domain,
             std::function<Verdict(const GridPoint&)> checker) {
        specs.push_back({std::move(id), std::move(description), coords, std::move(domain_text),
                         std::move(in_domain), std::move(checker)});
    }
};

auto any() {
    return [](const GridPoint&) { return true; };
}

Index N(const GridPoint& p) { return *p.n; }
Index L(const GridPoint& p) { return *p.l; }
Index T(const GridPoint& p) { return *p.t; }
Index M(const GridPoint& p) { return *p.m; }

std::vector<IdentitySpec> build_registry() {
    Builder b;

    // --- super Catalan numbers -------------------------------------------

    b.add("anchor0", "S(n,0) = binom(2n,n)", kN, "n >= 0", any(),
          [](const GridPoint& p) { return equal(super_catalan(N(p), 0), central_binomial(N(p))); });

    b.add("anchor1", "S(n,1) = 2 C_n", kN, "n >= 0", any(),
          [](const GridPoint& p) { return equal(super_catalan(N(p), 1), I(2) * catalan(N(p))); });

    b.add("vonszily", "von Szily sum = factorial formula = binomial ratio for S(n,l)", kN | kL, "n, l >= 0",
          any(), [](const GridPoint& p) {
              NLIndex idx(N(p), L(p));
              Integer szily = super_catalan_von_szily(idx);
              Integer fact = super_catalan_factorial(idx);
              Integer ratio = super_catalan_ratio(idx);
              if (ratio != fact)
                  return Verdict{ratio.to_string(), fact.to_string(), false, "ratio form disagrees"};
              return equal(szily, fact);
          });

    b.add("symmetry", "S(n,l) = S(l,n)", kN | kL, "n, l >= 0", any(),
          [](const GridPoint& p) { return equal(super_catalan(N(p), L(p)), super_catalan(L(p), N(p))); });

    b.add("parity", "2 | S(n,l) unless n = l = 0", kN | kL, "(n,l) != (0,0)",
          [](const GridPoint& p) { return N(p) != 0 || L(p) != 0; },
          [](const GridPoint& p) { return divisible(super_catalan(N(p), L(p)), I(2)); });

    b.add("eq33", "l binom(2l,l) = 2(2l-1) binom(2l-2,l-1)", kL, "l >= 1",
          [](const GridPoint& p) { return L(p) >= 1; },
          [](const GridPoint& p) {
              const Index l = L(p);
              return equal(central_binomial(l) * I(l), I(2 * (2 * l - 1)) * central_binomial(l - 1));
          });

    // --- full convolution at even length -----------------------------------

    b.add("thm1", "psi(2n,1,l) = S(n,l) S(n+l,n)", kN | kL, "n, l >= 0", any(), [](const GridPoint& p) {
        const Index n = N(p), l = L(p);
        return equal(psi(2 * n, 1, l), super_catalan(n, l) * super_catalan(n + l, n));
    });

    b.add("eq2", "sum (-1)^k binom(2n,k) binom(2k,k) binom(4n-2k,2n-k) = binom(2n,n)^2", kN, "n >= 0", any(),
          [](const GridPoint& p) {
              const Index n = N(p);
              Integer lhs{0};
              for (Index k = 0; k <= 2 * n; ++k)
                  lhs += sgn(k, binomial(2 * n, k) * central_binomial(k) * central_binomial(2 * n - k));
              return equal(lhs, pow(central_binomial(n), 2));
          });

    b.add("eq3", "sum (-1)^k binom(2n,k) C_k C_{2n-k} = C_n binom(2n,n)", kN, "n >= 0", any(),
          [](const GridPoint& p) {
              const Index n = N(p);
              Integer lhs{0};
              for (Index k = 0; k <= 2 * n; ++k)
                  lhs += sgn(k, binomial(2 * n, k) * catalan(k) * catalan(2 * n - k));
              return equal(lhs, catalan(n) * central_binomial(n));
          });

    b.add("remark1", "psi(2n,1,l) binom(2n+l,l) = binom(2l,l) binom(2(n+l),n+l) binom(2n,n)", kN | kL,
          "n, l >= 0", any(), [](const GridPoint& p) {
              const Index n = N(p), l = L(p);
              return equal(psi(2 * n, 1, l) * binomial(2 * n + l, l),
                           central_binomial(l) * central_binomial(n + l) * central_binomial(n));
          });

    // --- truncated windows --------------------------------------------------

    auto t_le_n = [](const GridPoint& p) { return T(p) <= N(p); };
    auto t_lt_n = [](const GridPoint& p) { return T(p) < N(p); };

    b.add("thm2", "psi_t(2n,l) = phi(2n,l,t)", kN | kL | kT, "t <= n", t_le_n, [](const GridPoint& p) {
        return equal(psi_t(2 * N(p), T(p), L(p)), phi(PhiParams(N(p), L(p), T(p))));
    });

    b.add("eq18", "A_t(2n,l) for F_psi equals phi(2n,l,t)", kN | kL | kT, "t <= n", t_le_n,
          [](const GridPoint& p) {
              return equal(a_t(psi_summand(), 2 * N(p), T(p), L(p)), phi(PhiParams(N(p), L(p), T(p))));
          });

    b.add("eq8",
          "binom(2n-t,t) sum_k (-1)^k binom(2n-2t,k-t) binom(2k,k) binom(4n-2k,2n-k)"
          " = (-1)^t binom(2n,n) binom(2t,t) binom(2n-2t,n-t)",
          kN | kT, "t <= n", t_le_n, [](const GridPoint& p) {
              const Index n = N(p), t = T(p);
              Integer lhs{0};
              for (Index k = t; k <= 2 * n - t; ++k)
                  lhs += sgn(k, binomial(2 * n - 2 * t, k - t) * central_binomial(k) *
                                    central_binomial(2 * n - k));
              return equal(lhs * binomial(2 * n - t, t),
                           sgn(t, central_binomial(n) * central_binomial(t) * central_binomial(n - t)));
          });

    b.add("eq9",
          "binom(2n+1-t,t) sum_k (-1)^k binom(2n-2t,k-t) C_k C_{2n-k}"
          " = (-1)^t C_n binom(2t,t) binom(2n-2t,n-t)",
          kN | kT, "t <= n", t_le_n, [](const GridPoint& p) {
              const Index n = N(p), t = T(p);
              Integer lhs{0};
              for (Index k = t; k <= 2 * n - t; ++k)
                  lhs += sgn(k, binomial(2 * n - 2 * t, k - t) * catalan(k) * catalan(2 * n - k));
              return equal(lhs * binomial(2 * n + 1 - t, t),
                           sgn(t, catalan(n) * central_binomial(t) * central_binomial(n - t)));
          });

    b.add("eq20", "psi_t(n,l) = 0 for odd n (n is the literal length)", kN | kL | kT, "n odd, 2t <= n",
          [](const GridPoint& p) { return N(p) % 2 == 1 && 2 * T(p) <= N(p); },
          [](const GridPoint& p) { return equal(psi_t(N(p), T(p), L(p)), I(0)); });

    b.add("psiodd", "psi(n,m,l) = 0 for odd n (n is the literal length)", kN | kL | kM, "n odd",
          [](const GridPoint& p) { return N(p) % 2 == 1; },
          [](const GridPoint& p) { return equal(psi(N(p), M(p), L(p)), I(0)); });

    b.add("eq22", "psi_n(2n,l) = (-1)^n S(n,l)^2", kN | kL, "n, l >= 0", any(), [](const GridPoint& p) {
        const Index n = N(p), l = L(p);
        return equal(psi_t(2 * n, n, l), sgn(n, pow(super_catalan(n, l), 2)));
    });

    // --- auxiliary sums ---------------------------------------------------

    b.add("eq28", "P_t(2n,l) = (n-t) psi_t(2n,l)", kN | kL | kT, "t <= n", t_le_n, [](const GridPoint& p) {
        const Index n = N(p), l = L(p), t = T(p);
        return equal(p_sum(2 * n, t, l), I(n - t) * psi_t(2 * n, t, l));
    });

    b.add("eq29", "(n+l+1) R'_t(2n,l) = R_t(2n,l)", kN | kL | kT, "t <= n", t_le_n, [](const GridPoint& p) {
        const Index n = N(p), l = L(p), t = T(p);
        return equal(Rational(n + l + 1) * r_prime_sum(2 * n, t, l), r_sum(2 * n, t, l));
    });

    auto two_t_lt_n = [](const GridPoint& p) { return 2 * T(p) < N(p); };
    auto two_t_le_n = [](const GridPoint& p) { return 2 * T(p) <= N(p); };

    b.add("eq47", "P_t(n,l) = 4(n-2t) psi_t(n-1,l) + (-1)^n 2(n-2t) R_t(n-1,l) (literal n)", kN | kL | kT,
          "2t < n", two_t_lt_n, [](const GridPoint& p) {
              const Index n = N(p), l = L(p), t = T(p);
              Rational rhs = Rational(I(4 * (n - 2 * t)) * psi_t(n - 1, t, l)) +
                             Rational(sgn(n, I(2 * (n - 2 * t)))) * r_sum(n - 1, t, l);
              return equal(Rational(p_sum(n, t, l)), rhs);
          });

    b.add("eq51", "T_t(n,l) = (n+l+1-t) R_t(n,l) - (2l+1) psi_t(n,l) (literal n)", kN | kL | kT, "2t <= n",
          two_t_le_n, [](const GridPoint& p) {
              const Index n = N(p), l = L(p), t = T(p);
              return equal(t_sum(n, t, l),
                           Rational(n + l + 1 - t) * r_sum(n, t, l) - Rational(I(2 * l + 1) * psi_t(n, t, l)));
          });

    b.add("eq53",
          "T_t(n,l) = 2(n-2t)(2l+1) sum_k (-1)^k (2n-2k-1)/((k+l+1)(n-k+l)) binom(n-1-2t,k-t) S(k,l) S(n-1-k,l)"
          " (literal n)",
          kN | kL | kT, "2t < n", two_t_lt_n, [](const GridPoint& p) {
              const Index n = N(p), l = L(p), t = T(p);
              return equal(t_sum(n, t, l), t_sum_shifted(n, t, l));
          });

    b.add("eq56", "T_t(n,l) = 4(n-2t) R''_t(n-1,l) + 2(n-2t) R'_t(n-1,l) (literal n)", kN | kL | kT, "2t < n",
          two_t_lt_n, [](const GridPoint& p) {
              const Index n = N(p), l = L(p), t = T(p);
              return equal(t_sum(n, t, l), Rational(4 * (n - 2 * t)) * r_dprime_sum(n - 1, t, l) +
                                               Rational(2 * (n - 2 * t)) * r_prime_sum(n - 1, t, l));
          });

    b.add("eq58", "R''_t(2n,l) = n R'_t(2n,l)", kN | kL | kT, "t <= n", t_le_n, [](const GridPoint& p) {
        const Index n = N(p), l = L(p), t = T(p);
        return equal(r_dprime_sum(2 * n, t, l), Rational(n) * r_prime_sum(2 * n, t, l));
    });

    // --- contiguous relations, cleared of denominators ----------------------

    b.add("lemma1", "2(2n-1-2t)(2n-1) psi_t(2n-2,l+1) = (2n+l-t)(2l+1) psi_t(2n,l)", kN | kL | kT, "t < n",
          t_lt_n, [](const GridPoint& p) {
              const Index n = N(p), l = L(p), t = T(p);
              return equal(I(2 * (2 * n - 1 - 2 * t) * (2 * n - 1)) * psi_t(2 * n - 2, t, l + 1),
                           I((2 * n + l - t) * (2 * l + 1)) * psi_t(2 * n, t, l));
          });

    b.add("lemma2", "4(2l+1) R_t(2n,l) = (n+l+1) psi_t(2n,l+1)", kN | kL | kT, "t <= n", t_le_n,
          [](const GridPoint& p) {
              const Index n = N(p), l = L(p), t = T(p);
              return equal(Rational(4 * (2 * l + 1)) * r_sum(2 * n, t, l),
                           Rational(I(n + l + 1) * psi_t(2 * n, t, l + 1)));
          });

    b.add("lemma3", "psi_t(2n,l) = 4 R_t(2n-1,l)", kN | kL | kT, "t < n", t_lt_n, [](const GridPoint& p) {
        const Index n = N(p), l = L(p), t = T(p);
        return equal(Rational(psi_t(2 * n, t, l)), Rational(4) * r_sum(2 * n - 1, t, l));
    });

    b.add("lemma4", "(2n+l-t)(n+l) R_t(2n-1,l) = 2(2n-1-2t)(2n-1) R_t(2n-2,l)", kN | kL | kT, "t < n", t_lt_n,
          [](const GridPoint& p) {
              const Index n = N(p), l = L(p), t = T(p);
              return equal(Rational((2 * n + l - t) * (n + l)) * r_sum(2 * n - 1, t, l),
                           Rational(2 * (2 * n - 1 - 2 * t) * (2 * n - 1)) * r_sum(2 * n - 2, t, l));
          });

    // --- phi ---------------------------------------------------------------

    b.add("eq64phi", "2(2n+1-2t)(2n+1) phi(2n,l+1,t) = (2n+2+l-t)(2l+1) phi(2n+2,l,t)", kN | kL | kT, "t < n",
          t_lt_n, [](const GridPoint& p) {
              const Index n = N(p), l = L(p), t = T(p);
              return equal(I(2 * (2 * n + 1 - 2 * t) * (2 * n + 1)) * phi(PhiParams(n, l + 1, t)),
                           I((2 * n + 2 + l - t) * (2 * l + 1)) * phi(PhiParams(n + 1, l, t)));
          });

    b.add("eq67", "binom(2n-t,t) phi(2n,0,t) = (-1)^t binom(2t,t) binom(2n,n) binom(2n-2t,n-t)", kN | kT,
          "t <= n", t_le_n, [](const GridPoint& p) {
              const Index n = N(p), t = T(p);
              return equal(binomial(2 * n - t, t) * phi(PhiParams(n, 0, t)),
                           sgn(t, central_binomial(t) * central_binomial(n) * central_binomial(n - t)));
          });

    b.add("eq68", "phi(2n,l,n) = (-1)^n S(n,l)^2", kN | kL, "n, l >= 0", any(), [](const GridPoint& p) {
        const Index n = N(p), l = L(p);
        return equal(phi(PhiParams(n, l, n)), sgn(n, pow(super_catalan(n, l), 2)));
    });

    // --- D-sum engine (literal n) -------------------------------------------

    auto m_ge_2 = [](const GridPoint& p) { return M(p) >= 2; };
    auto t_ge_1 = [](const GridPoint& p) { return T(p) >= 1; };

    b.add("eq12", "psi(n,m,l) = D_psi(n,0,m-2;l) (literal n)", kN | kL | kM, "m >= 2", m_ge_2,
          [](const GridPoint& p) {
              return equal(psi(N(p), M(p), L(p)),
                           d_sum_direct(psi_summand(), DSumParams(N(p), 0, M(p) - 2, L(p))));
          });

    b.add("eq12_unit", "sum_k binom(n,k)^m = D_1(n,0,m-2) for F = 1 (literal n)", kN | kM, "m >= 2", m_ge_2,
          [](const GridPoint& p) {
              const Index n = N(p), m = M(p);
              Integer lhs{0};
              for (Index k = 0; k <= n; ++k)
                  lhs += pow(binomial(n, k), static_cast<unsigned long>(m));
              return equal(lhs, d_sum_direct(unit_summand(), DSumParams(n, 0, m - 2, 0)));
          });

    auto eq13_check = [](SummandFunction f, Index n, Index l, Index t) {
        return for_every_j(n / 2, [&](Index j) {
            return equal(d_sum_step(f, DSumParams(n, j, t, l)), d_sum_direct(f, DSumParams(n, j, t, l)));
        });
    };

    b.add("eq13", "step recurrence D(n,j,t;l) from level t-1 = direct D(n,j,t;l), all j <= n/2 (literal n)",
          kN | kL | kT, "t >= 1", t_ge_1,
          [eq13_check](const GridPoint& p) { return eq13_check(psi_summand(), N(p), L(p), T(p)); });

    b.add("eq13_unit", "eq13 for F = 1", kN | kT, "t >= 1", t_ge_1,
          [eq13_check](const GridPoint& p) { return eq13_check(unit_summand(), N(p), 0, T(p)); });

    auto eq17_check = [](SummandFunction f, Index n, Index l) {
        return for_every_j(n / 2, [&](Index j) {
            Integer via_bridge = d_sum_base(f, n, j, l);
            Integer expanded = d_sum_base_expanded(f, n, j, l);
            if (via_bridge != expanded)
                return Verdict{via_bridge.to_string(), expanded.to_string(), false, "double-sum form disagrees"};
            return equal(via_bridge, d_sum_direct(f, DSumParams(n, j, 0, l)));
        });
    };

    b.add("eq17", "D(n,j,0;l) via A_t = double-sum form = direct, all j <= n/2 (literal n)", kN | kL, "n, l >= 0",
          any(), [eq17_check](const GridPoint& p) { return eq17_check(psi_summand(), N(p), L(p)); });

    b.add("eq17_unit", "eq17 for F = 1", kN, "n >= 0", any(),
          [eq17_check](const GridPoint& p) { return eq17_check(unit_summand(), N(p), 0); });

    // --- divisibility pipeline ------------------------------------------------

    b.add("eq94",
          "binom(2n-t,t) psi_t(2n,l) binom(n+l,n) binom(2n+l-t,n)"
          " = (-1)^t binom(2l,l) binom(2t,t) binom(2(n+l-t),n+l-t) binom(2n,n) binom(2n-t,n)",
          kN | kL | kT, "t <= n", t_le_n, [](const GridPoint& p) {
              const Index n = N(p), l = L(p), t = T(p);
              Integer lhs = binomial(2 * n - t, t) * psi_t(2 * n, t, l) * binomial(n + l, n) *
                            binomial(2 * n + l - t, n);
              Integer rhs = sgn(t, central_binomial(l) * central_binomial(t) * central_binomial(n + l - t) *
                                       central_binomial(n) * binomial(2 * n - t, n));
              return equal(lhs, rhs);
          });

    b.add("eq104", "psi(2n,2,l) = S(n,l) sum_u (-1)^u binom(2u,u) S(n,n+l-u) binom(n,u)", kN | kL, "n, l >= 0",
          any(), [](const GridPoint& p) {
              const Index n = N(p), l = L(p);
              return equal(psi(2 * n, 2, l), super_catalan(n, l) * psi2_cofactor(n, l));
          });

    b.add("eq113", "binom(2n,n) Q(n,s,l) = sum_v (-1)^v binom(2(s+v),s+v) binom(n-s,v) S(n,n+l-s-v), all s <= n",
          kN | kL, "n, l >= 0", any(), [](const GridPoint& p) {
              const Index n = N(p), l = L(p);
              return for_every_j(n, [&](Index s) {
                  Integer scaled{0};
                  for (Index v = 0; v <= n - s; ++v)
                      scaled += sgn(v, central_binomial(s + v) * binomial(n - s, v) *
                                           super_catalan(n, n + l - s - v));
                  return equal(Rational(central_binomial(n)) * q_sum(n, s, l), Rational(scaled));
              });
          });

    b.add("dlevel1", "D_psi(2n,j,1;l) = (-1)^j S(n,l) * integer cofactor, all j <= n", kN | kL, "n, l >= 0",
          any(), [](const GridPoint& p) {
              const Index n = N(p), l = L(p);
              return for_every_j(n, [&](Index j) {
                  Integer direct = d_sum_direct(psi_summand(), DSumParams(2 * n, j, 1, l));
                  LevelWitness w = d_psi_level1(n, j, l);
                  if (!divides(w.divisor, direct))
                      return divisible(direct, w.divisor);
                  return equal(w.value, direct);
              });
          });

    b.add("dwitness", "S(n,l) * propagated quotient = D_psi(2n,j,t;l), all j <= n", kN | kL | kT, "t >= 1",
          t_ge_1, [](const GridPoint& p) {
              const Index n = N(p), l = L(p), t = T(p);
              PsiWitnessTable table(n, l, t);
              return for_every_j(n, [&](Index j) {
                  return equal(table.value(j, t), d_sum_direct(psi_summand(), DSumParams(2 * n, j, t, l)));
              });
          });

    b.add("thm3", "witness quotient = psi(2n,m,l) / S(n,l), division exact", kN | kL | kM, "n, l >= 0, m >= 1",
          any(), [](const GridPoint& p) {
              const Index n = N(p), l = L(p), m = M(p);
              DivisionOutcome direct = psi_divisibility_check(n, m, l);
              Integer witness = psi_witness_quotient(n, m, l);
              if (!direct.exact)
                  return Verdict{direct.remainder.to_string(), "0", false, "psi(2n,m,l) mod S(n,l) is non-zero"};
              return equal(witness, direct.quotient);
          });

    b.add("remark2", "2 S(n,l) | psi(2n,2,l) for l >= 1", kN | kL, "l >= 1",
          [](const GridPoint& p) { return L(p) >= 1; },
          [](const GridPoint& p) {
              return divisible(psi(2 * N(p), 2, L(p)), I(2) * super_catalan(N(p), L(p)));
          });

    b.add("remark3", "2 S(n,l) | psi(2n,m,l) for l >= 1", kN | kL | kM, "l >= 1",
          [](const GridPoint& p) { return L(p) >= 1; },
          [](const GridPoint& p) {
              return divisible(psi(2 * N(p), M(p), L(p)), I(2) * super_catalan(N(p), L(p)));
          });

    b.add("remark4", "binom(2n,n) does not divide psi(2n,m,l) at n=4, l=2, m=1", kN | kL | kM,
          "n = 4, l = 2, m = 1", [](const GridPoint& p) { return N(p) == 4 && L(p) == 2 && M(p) == 1; },
          [](const GridPoint& p) {
              return not_divisible(psi(2 * N(p), M(p), L(p)), central_binomial(N(p)));
          });

    return std::move(b.specs);
}

} // namespace

const std::vector<IdentitySpec>& registry() {
    static const std::vector<IdentitySpec> specs = [] {
        auto built = build_registry();
        std::unordered_set<std::string> seen;
        for (const auto& s : built)
            if (!seen.insert(s.id).second)
                throw std::logic_error("duplicate identity id: " + s.id);
        return built;
    }();
    return specs;
}

const IdentitySpec* find_identity(const std::string& id) {
    const auto& specs = registry();
    auto it = std::find_if(specs.begin(), specs.end(), [&](const IdentitySpec& s) { return s.id == id; });
    return it == specs.end() ? nullptr : &*it;
}

std::vector<std::string> all_identity_ids() {
    std::vector<std::string> ids;
    for (const auto& s : registry())
        ids.push_back(s.id);
    return ids;
}

} // namespace supercat::verify
