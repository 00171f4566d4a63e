// Factorials and binomial coefficients over Integer.
//
// binomial(n, k) is zero outside 0 <= k <= n, so sums written over all k
// need no boundary handling. A negative upper index is a caller error.
#pragma once

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <vector>

#include "supercat/integer.hpp"

namespace supercat {

using Index = std::int64_t;

/// n! ; throws std::invalid_argument for n < 0.
Integer factorial(Index n);

/// Multiplicative formula with a running exact division.
Integer binomial(Index n, Index k);

/// binom(2n, n).
Integer central_binomial(Index n);

/**
 * Memoized Pascal triangle. Rows are appended under an exclusive lock and
 * never modified afterwards, so a reference returned by `get` stays valid
 * for the table's lifetime and concurrent readers never observe a partial
 * cell.
 */
class PascalTable {
public:
    explicit PascalTable(Index initial_rows = 0);

    /// Same convention as binomial().
    const Integer& get(Index n, Index k);
    Index rows() const;

private:
    void grow_to(Index n);

    mutable std::shared_mutex mutex_;
    std::deque<std::vector<Integer>> rows_;
};

/// Process-wide table used by sweep workloads.
PascalTable& shared_pascal_table();

} // namespace supercat
