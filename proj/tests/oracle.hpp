#pragma once

// Reference implementations on raw GMP types. Nothing here calls into the
// library, so a test that compares the two exercises independent code paths.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using I = long;

inline mpz_class fact(I n) {
    mpz_class r = 1;
    for (I i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// Pascal triangle built by additions only.
inline mpz_class binom(I n, I k) {
    static std::vector<std::vector<mpz_class>> rows{{1}};
    if (n < 0 || k < 0 || k > n)
        return 0;
    while (static_cast<I>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<mpz_class> next(prev.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t i = 1; i < prev.size(); ++i)
            next[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(next));
    }
    return rows[n][k];
}

inline mpz_class S(I n, I l) { return fact(2 * n) * fact(2 * l) / (fact(n) * fact(l) * fact(n + l)); }

inline mpz_class catalan(I n) { return fact(2 * n) / (fact(n) * fact(n + 1)); }

inline int sgn(I k) { return (k % 2 == 0) ? 1 : -1; }

inline mpz_class psi(I n, I m, I l) {
    mpz_class s = 0;
    for (I k = 0; k <= n; ++k) {
        mpz_class b;
        mpz_pow_ui(b.get_mpz_t(), binom(n, k).get_mpz_t(), static_cast<unsigned long>(m));
        s += sgn(k) * b * S(k, l) * S(n - k, l);
    }
    return s;
}

/// sum_{k=t}^{n-t} w(k) (-1)^k binom(n-2t,k-t) S(k,l) S(n-k,l)
inline mpq_class window(I n, I t, I l, const std::function<mpq_class(I)>& w) {
    mpq_class s = 0;
    for (I k = t; k <= n - t; ++k)
        s += w(k) * mpq_class(sgn(k) * binom(n - 2 * t, k - t) * S(k, l) * S(n - k, l));
    s.canonicalize();
    return s;
}

inline mpq_class q(I a, I b) {
    mpq_class r(a, b);
    r.canonicalize();
    return r;
}

inline mpz_class psi_t(I n, I t, I l) { return window(n, t, l, [](I) { return mpq_class(1); }).get_num(); }

inline mpz_class p_sum(I n, I t, I l) {
    return window(n, t, l, [&](I k) { return mpq_class(n - t - k); }).get_num();
}

inline mpq_class r_sum(I n, I t, I l) {
    return window(n, t, l, [&](I k) { return q(2 * l + 1, k + l + 1); });
}

inline mpq_class r_prime(I n, I t, I l) {
    return window(n, t, l, [&](I k) { return q(2 * l + 1, (k + l + 1) * (n - k + l + 1)); });
}

inline mpq_class r_dprime(I n, I t, I l) {
    return window(n, t, l, [&](I k) { return q((2 * l + 1) * (n - k), (k + l + 1) * (n - k + l + 1)); });
}

inline mpq_class t_sum(I n, I t, I l) {
    return window(n, t, l, [&](I k) { return q((n - t - k) * (2 * l + 1), k + l + 1); });
}

inline mpz_class phi(I n, I l, I t) {
    mpz_class num = binom(2 * l, l) * binom(2 * t, t) * binom(2 * (n + l - t), n + l - t) * binom(2 * n, n) *
                    binom(2 * n - 2 * t, n - t);
    mpz_class den = binom(n + l, n) * binom(2 * n + l - t, n) * binom(n, t);
    return sgn(t) * num / den;
}

using Summand = std::function<mpz_class(I n, I k, I l)>;

inline Summand psi_summand() {
    return [](I n, I k, I l) -> mpz_class { return sgn(k) * S(k, l) * S(n - k, l); };
}

inline Summand unit_summand() {
    return [](I, I, I) { return mpz_class(1); };
}

/// sum_{u=0}^{n-2j} binom(n-j,u) binom(n-j,j+u) binom(n,j+u)^t F(n,j+u,l)
inline mpz_class d_sum(const Summand& f, I n, I j, I t, I l) {
    mpz_class s = 0;
    for (I u = 0; u <= n - 2 * j; ++u) {
        mpz_class b;
        mpz_pow_ui(b.get_mpz_t(), binom(n, j + u).get_mpz_t(), static_cast<unsigned long>(t));
        s += binom(n - j, u) * binom(n - j, j + u) * b * f(n, j + u, l);
    }
    return s;
}

inline mpq_class q_sum(I n, I s, I l) {
    mpq_class r = 0;
    for (I v = 0; v <= n - s; ++v) {
        mpq_class term(sgn(v) * binom(2 * (s + v), s + v) * binom(2 * (n + l - s - v), n + l - s - v) *
                           binom(n - s, v),
                       binom(2 * n + l - s - v, n));
        term.canonicalize();
        r += term;
    }
    return r;
}

inline std::string str(const mpz_class& z) { return z.get_str(); }

inline std::string str(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace oracle
