#include "supercat/dsums.hpp"

#include <stdexcept>
#include <string>

#include "supercat/errors.hpp"
#include "supercat/super_catalan.hpp"
#include "supercat/sums.hpp"

namespace supercat {

namespace {

const Integer& pascal(Index n, Index k) { return shared_pascal_table().get(n, k); }

void require_half_window(Index n, Index j, Index l, const char* what) {
    if (n < 0 || l < 0 || j < 0 || j > n)
        throw std::invalid_argument(std::string(what) + " requires 0 <= j <= n and l >= 0, got (n=" +
                                    std::to_string(n) + ", j=" + std::to_string(j) +
                                    ", l=" + std::to_string(l) + ")");
}

Integer signed_by(Index k, Integer value) { return alternating_sign(k) < 0 ? -value : value; }

} // namespace

SummandFunction psi_summand() {
    return [](Index n, Index k, Index l) {
        return signed_by(k, super_catalan(k, l) * super_catalan(n - k, l));
    };
}

SummandFunction unit_summand() {
    return [](Index, Index, Index) { return Integer{1}; };
}

DSumParams::DSumParams(Index n_, Index j_, Index t_, Index l_) : n(n_), j(j_), t(t_), l(l_) {
    if (n < 0 || j < 0 || t < 0 || l < 0)
        throw std::invalid_argument("D sum parameters must be non-negative");
    if (2 * j > n)
        throw std::invalid_argument("D sum requires j <= floor(n/2), got n=" + std::to_string(n) +
                                    ", j=" + std::to_string(j));
}

Integer d_sum_direct(const SummandFunction& f, DSumParams p) {
    const auto [n, j, t, l] = p;
    Integer acc{0};
    for (Index u = 0; u <= n - 2 * j; ++u) {
        acc += binomial(n - j, u) * binomial(n - j, j + u) *
               pow(binomial(n, j + u), static_cast<unsigned long>(t)) * f(n, j + u, l);
    }
    return acc;
}

Integer a_t(const SummandFunction& f, Index n, Index t, Index l) {
    if (n < 0 || t < 0 || l < 0 || 2 * t > n)
        throw std::invalid_argument("A_t requires 0 <= t <= floor(n/2)");
    Integer acc{0};
    for (Index k = t; k <= n - t; ++k)
        acc += pascal(n - 2 * t, k - t) * f(n, k, l);
    return acc;
}

Integer d_sum_base(const SummandFunction& f, Index n, Index j, Index l) {
    static_cast<void>(DSumParams(n, j, 0, l));
    Integer acc{0};
    for (Index u = 0; u <= (n - 2 * j) / 2; ++u)
        acc += pascal(n - j, u) * pascal(n - j - u, j + u) * a_t(f, n, j + u, l);
    return acc;
}

Integer d_sum_base_expanded(const SummandFunction& f, Index n, Index j, Index l) {
    static_cast<void>(DSumParams(n, j, 0, l));
    Integer acc{0};
    for (Index u = 0; u <= (n - 2 * j) / 2; ++u) {
        Integer inner{0};
        for (Index v = 0; v <= n - 2 * j - 2 * u; ++v)
            inner += pascal(n - 2 * j - 2 * u, v) * f(n, j + u + v, l);
        acc += pascal(n - j, j + u) * pascal(n - 2 * j - u, u) * inner;
    }
    return acc;
}

DSumLevels::DSumLevels(const SummandFunction& f, Index n, Index l, Index t_max) : n_(n) {
    if (t_max < 0)
        throw std::invalid_argument("DSumLevels requires t_max >= 0");
    static_cast<void>(DSumParams(n, 0, t_max, l));
    const Index half = n / 2;
    levels_.reserve(static_cast<std::size_t>(t_max) + 1);

    std::vector<Integer> base;
    base.reserve(static_cast<std::size_t>(half) + 1);
    for (Index j = 0; j <= half; ++j)
        base.push_back(d_sum_base(f, n, j, l));
    levels_.push_back(std::move(base));

    for (Index t = 1; t <= t_max; ++t) {
        const auto& prev = levels_.back();
        std::vector<Integer> next;
        next.reserve(prev.size());
        for (Index j = 0; j <= half; ++j) {
            Integer acc{0};
            for (Index u = 0; u <= (n - 2 * j) / 2; ++u)
                acc += pascal(n, j + u) * pascal(n - j, u) * prev[static_cast<std::size_t>(j + u)];
            next.push_back(std::move(acc));
        }
        levels_.push_back(std::move(next));
    }
}

const Integer& DSumLevels::at(Index j, Index t) const {
    if (t < 0 || t > t_max() || j < 0 || 2 * j > n_)
        throw std::out_of_range("DSumLevels index out of range");
    return levels_[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
}

Integer d_sum_step(const SummandFunction& f, DSumParams p) {
    if (p.t < 1)
        throw std::invalid_argument("d_sum_step computes level t from level t-1 and requires t >= 1");
    DSumLevels below(f, p.n, p.l, p.t - 1);
    Integer acc{0};
    for (Index u = 0; u <= (p.n - 2 * p.j) / 2; ++u)
        acc += pascal(p.n, p.j + u) * pascal(p.n - p.j, u) * below.at(p.j + u, p.t - 1);
    return acc;
}

Integer d_sum_recursive(const SummandFunction& f, DSumParams p) {
    return DSumLevels(f, p.n, p.l, p.t).at(p.j, p.t);
}

Rational q_sum(Index n, Index s, Index l) {
    require_half_window(n, s, l, "q_sum");
    Rational acc;
    for (Index v = 0; v <= n - s; ++v) {
        Integer num = central_binomial(s + v) * central_binomial(n + l - s - v) * binomial(n - s, v);
        acc += Rational(signed_by(v, std::move(num)), binomial(2 * n + l - s - v, n));
    }
    return acc;
}

Integer q_scaled(Index n, Index s, Index l) {
    require_half_window(n, s, l, "q_scaled");
    Integer acc{0};
    for (Index v = 0; v <= n - s; ++v)
        acc += signed_by(v, central_binomial(s + v) * binomial(n - s, v) *
                                super_catalan(n, n + l - s - v));
    const Integer via_rational =
        (Rational(central_binomial(n)) * q_sum(n, s, l)).to_integer("binom(2n,n) Q(n,s,l)");
    if (via_rational != acc)
        throw IntegrityError("binom(2n,n) Q(n,s,l) mismatch at (n=" + std::to_string(n) +
                             ", s=" + std::to_string(s) + ", l=" + std::to_string(l) +
                             "): " + via_rational.to_string() + " vs " + acc.to_string());
    return acc;
}

BaseWitness d_psi_base_closed(Index n, Index j, Index l) {
    require_half_window(n, j, l, "d_psi_base_closed");
    Rational cofactor;
    const Integer upper = binomial(2 * n - j, n);
    for (Index u = 0; u <= n - j; ++u) {
        Integer num = central_binomial(j + u) * central_binomial(n + l - j - u) * upper *
                      binomial(n - j, u);
        cofactor += Rational(signed_by(j + u, std::move(num)), binomial(2 * n + l - j - u, n));
    }
    const Integer& divisor = super_catalan(n, l);
    Integer value = (Rational(divisor) * cofactor).to_integer("S(n,l) * base cofactor");
    const Integer direct = d_sum_direct(psi_summand(), DSumParams(2 * n, j, 0, l));
    if (value != direct)
        throw IntegrityError("D_psi(2n,j,0;l) closed form " + value.to_string() +
                             " disagrees with direct evaluation " + direct.to_string());
    return {std::move(value), divisor, std::move(cofactor)};
}

LevelWitness d_psi_level1(Index n, Index j, Index l) {
    require_half_window(n, j, l, "d_psi_level1");
    Integer cofactor{0};
    for (Index u = 0; u <= n - j; ++u)
        cofactor += signed_by(u, binomial(2 * n - j, u) * binomial(n, j + u) * q_scaled(n, j + u, l));
    const Integer& divisor = super_catalan(n, l);
    Integer value = signed_by(j, divisor * cofactor);
    const Integer direct = d_sum_direct(psi_summand(), DSumParams(2 * n, j, 1, l));
    if (value != direct)
        throw IntegrityError("D_psi(2n,j,1;l) witness " + value.to_string() +
                             " disagrees with direct evaluation " + direct.to_string());
    return {std::move(value), divisor, std::move(cofactor)};
}

PsiWitnessTable::PsiWitnessTable(Index n, Index l, Index t_max) : n_(n), divisor_(super_catalan(n, l)) {
    if (t_max < 1)
        throw std::invalid_argument("PsiWitnessTable starts at level 1 and requires t_max >= 1");
    std::vector<Integer> level;
    level.reserve(static_cast<std::size_t>(n) + 1);
    for (Index j = 0; j <= n; ++j)
        level.push_back(signed_by(j, d_psi_level1(n, j, l).cofactor));
    quotients_.push_back(std::move(level));

    for (Index t = 2; t <= t_max; ++t) {
        const auto& prev = quotients_.back();
        std::vector<Integer> next;
        next.reserve(prev.size());
        for (Index j = 0; j <= n; ++j) {
            Integer acc{0};
            for (Index u = 0; u <= n - j; ++u)
                acc += pascal(2 * n, j + u) * pascal(2 * n - j, u) * prev[static_cast<std::size_t>(j + u)];
            next.push_back(std::move(acc));
        }
        quotients_.push_back(std::move(next));
    }
}

const Integer& PsiWitnessTable::quotient(Index j, Index t) const {
    if (t < 1 || t > static_cast<Index>(quotients_.size()) || j < 0 || j > n_)
        throw std::out_of_range("PsiWitnessTable index out of range");
    return quotients_[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(j)];
}

Integer PsiWitnessTable::value(Index j, Index t) const { return divisor_ * quotient(j, t); }

Integer psi2_cofactor(Index n, Index l) {
    if (n < 0 || l < 0)
        throw std::invalid_argument("psi2_cofactor requires n, l >= 0");
    Integer acc{0};
    for (Index u = 0; u <= n; ++u)
        acc += signed_by(u, central_binomial(u) * super_catalan(n, n + l - u) * binomial(n, u));
    return acc;
}

Integer psi_witness_quotient(Index n, Index m, Index l) {
    if (n < 0 || l < 0 || m < 1)
        throw std::invalid_argument("psi_witness_quotient requires n, l >= 0 and m >= 1");
    if (m == 1)
        return super_catalan(n + l, n);
    if (m == 2)
        return psi2_cofactor(n, l);
    return PsiWitnessTable(n, l, m - 2).quotient(0, m - 2);
}

DivisionOutcome divide(const Integer& value, const Integer& divisor) {
    auto [q, r] = divmod(value, divisor);
    const bool exact = r.is_zero();
    return {exact, std::move(q), std::move(r)};
}

DivisionOutcome psi_divisibility_check(Index n, Index m, Index l) {
    if (n < 0 || l < 0 || m < 1)
        throw std::invalid_argument("psi_divisibility_check requires n, l >= 0 and m >= 1");
    return divide(psi(2 * n, m, l), super_catalan(n, l));
}

} // namespace supercat
