#include "supercat/super_catalan.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace supercat {

NLIndex::NLIndex(Index n_, Index l_) : n(n_), l(l_) {
    if (n < 0 || l < 0)
        throw std::invalid_argument("super Catalan index requires n, l >= 0, got (" +
                                    std::to_string(n) + ", " + std::to_string(l) + ")");
}

PhiParams::PhiParams(Index n_, Index l_, Index t_) : n(n_), l(l_), t(t_) {
    if (n < 0 || l < 0 || t < 0 || t > n)
        throw std::invalid_argument("phi requires 0 <= t <= n and l >= 0, got (n=" +
                                    std::to_string(n) + ", l=" + std::to_string(l) +
                                    ", t=" + std::to_string(t) + ")");
}

Integer super_catalan_ratio(NLIndex idx) {
    return div_exact(central_binomial(idx.n) * central_binomial(idx.l),
                     binomial(idx.n + idx.l, idx.n), "S(n,l) ratio");
}

Integer super_catalan_factorial(NLIndex idx) {
    return div_exact(factorial(2 * idx.n) * factorial(2 * idx.l),
                     factorial(idx.n) * factorial(idx.l) * factorial(idx.n + idx.l),
                     "S(n,l) factorial");
}

Integer super_catalan_von_szily(NLIndex idx) {
    const Index bound = std::min(idx.n, idx.l);
    Integer acc{0};
    for (Index k = -bound; k <= bound; ++k) {
        Integer term = binomial(2 * idx.n, idx.n + k) * binomial(2 * idx.l, idx.l + k);
        if (alternating_sign(k) < 0)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

namespace {

class SuperCatalanCache {
public:
    const Integer& get(Index n, Index l) {
        const Key key = pack(n, l);
        {
            std::shared_lock lock(mutex_);
            if (auto it = cells_.find(key); it != cells_.end())
                return it->second;
        }
        // Computed outside the lock; the first writer wins, later ones discard.
        Integer value = super_catalan_ratio(NLIndex(n, l));
        std::unique_lock lock(mutex_);
        return cells_.try_emplace(key, std::move(value)).first->second;
    }

private:
    using Key = std::uint64_t;
    static Key pack(Index n, Index l) {
        return (static_cast<Key>(n) << 32) | static_cast<Key>(static_cast<std::uint32_t>(l));
    }

    std::shared_mutex mutex_;
    std::unordered_map<Key, Integer> cells_;
};

} // namespace

const Integer& super_catalan(Index n, Index l) {
    static SuperCatalanCache cache;
    NLIndex idx(n, l);
    if (idx.n > UINT32_MAX || idx.l > UINT32_MAX)
        throw std::invalid_argument("super Catalan index too large for the cache");
    return cache.get(idx.n, idx.l);
}

Integer catalan(Index n) {
    if (n < 0)
        throw std::invalid_argument("catalan requires n >= 0");
    return div_exact(central_binomial(n), Integer(n + 1), "Catalan number");
}

Integer phi(PhiParams p) {
    const Index n = p.n, l = p.l, t = p.t;
    Integer numerator = central_binomial(l) * central_binomial(t) * central_binomial(n + l - t) *
                        central_binomial(n) * central_binomial(n - t);
    Integer denominator = binomial(n + l, n) * binomial(2 * n + l - t, n) * binomial(n, t);
    Integer value = div_exact(numerator, denominator, "phi(2n,l,t)");
    return alternating_sign(t) < 0 ? -value : value;
}

} // namespace supercat
