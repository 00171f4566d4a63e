#include "supercat/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace supercat {

namespace {

void require_non_negative(Index n, const char* what) {
    if (n < 0)
        throw std::invalid_argument(std::string(what) + " requires a non-negative argument, got " +
                                    std::to_string(n));
}

const Integer kZero{0};

} // namespace

Integer factorial(Index n) {
    require_non_negative(n, "factorial");
    Integer acc{1};
    for (Index i = 2; i <= n; ++i)
        acc *= Integer(i);
    return acc;
}

Integer binomial(Index n, Index k) {
    require_non_negative(n, "binomial upper index");
    if (k < 0 || k > n)
        return Integer{0};
    if (k > n - k)
        k = n - k;
    // After step i the accumulator is binom(n-k+i, i), so each division is exact.
    Integer acc{1};
    for (Index i = 1; i <= k; ++i) {
        acc *= Integer(n - k + i);
        acc = div_exact(acc, Integer(i), "binomial");
    }
    return acc;
}

Integer central_binomial(Index n) {
    require_non_negative(n, "central_binomial");
    return binomial(2 * n, n);
}

PascalTable::PascalTable(Index initial_rows) {
    if (initial_rows > 0)
        grow_to(initial_rows - 1);
}

Index PascalTable::rows() const {
    std::shared_lock lock(mutex_);
    return static_cast<Index>(rows_.size());
}

void PascalTable::grow_to(Index n) {
    std::unique_lock lock(mutex_);
    while (static_cast<Index>(rows_.size()) <= n) {
        std::vector<Integer> row(rows_.size() + 1, Integer{1});
        if (!rows_.empty()) {
            const auto& prev = rows_.back();
            for (std::size_t k = 1; k + 1 < row.size(); ++k)
                row[k] = prev[k - 1] + prev[k];
        }
        rows_.push_back(std::move(row));
    }
}

const Integer& PascalTable::get(Index n, Index k) {
    require_non_negative(n, "binomial upper index");
    if (k < 0 || k > n)
        return kZero;
    {
        std::shared_lock lock(mutex_);
        if (n < static_cast<Index>(rows_.size()))
            return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    grow_to(n);
    std::shared_lock lock(mutex_);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

PascalTable& shared_pascal_table() {
    static PascalTable table;
    return table;
}

} // namespace supercat
