// Named identity checks, exhaustive grid sweeps and reports.
//
// Every identity ranges over a subset of the coordinates (n, l, t, m). A
// sweep enumerates n in [0, n_max], l in [0, l_max], t in [0, t_max] and
// m in [1, m_max] for the coordinates the identity uses, keeps the points
// inside the identity's domain, and evaluates them (optionally on several
// worker threads). Results are sorted by (identity, n, l, t, m) so the
// report does not depend on the worker count.
//
// The meaning of n differs per identity and is stated in its description:
// for most closed forms it is the half length (the sum runs to 2n), for
// parity/odd-length statements and for the generic D-sum engine it is the
// literal sum length.
#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "supercat/combinatorics.hpp"

namespace supercat::verify {

enum class Status { pass, fail, skipped };

const char* to_string(Status s);

/// Grid coordinates; a coordinate the identity does not use is empty.
struct GridPoint {
    std::optional<Index> n;
    std::optional<Index> l;
    std::optional<Index> t;
    std::optional<Index> m;

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Lexicographic on (n, l, t, m) with an empty coordinate before any value.
bool point_less(const GridPoint& a, const GridPoint& b);

enum Coordinate : unsigned { kN = 1u, kL = 2u, kT = 4u, kM = 8u };

/// What a checker reports: both sides as exact decimal strings and whether the
/// relation holds. `note` is carried into CheckResult::reason (used to name
/// the failing window index for checks that range over j).
struct Verdict {
    std::string lhs;
    std::string rhs;
    bool holds = false;
    std::string note;
};

struct IdentitySpec {
    std::string id;
    std::string description;
    unsigned coordinates = 0;
    /// Human readable side condition, reported when a point is skipped.
    std::string domain_text;
    std::function<bool(const GridPoint&)> in_domain;
    std::function<Verdict(const GridPoint&)> checker;
};

struct CheckResult {
    std::string identity;
    GridPoint point;
    std::string lhs;
    std::string rhs;
    Status status = Status::skipped;
    std::string reason;
};

struct Grid {
    Index n_max = 10;
    Index l_max = 6;
    Index t_max = 10;
    Index m_max = 5;

    /// n <= 10, l <= 6, t <= n, m <= 5.
    static Grid defaults() { return {}; }
    void validate() const;
};

struct Summary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

struct Report {
    std::vector<std::string> identities;
    Grid grid;
    std::vector<CheckResult> results;
    Summary summary;
    std::chrono::milliseconds runtime{0};
};

/// All registered identities in a fixed order; ids are unique.
const std::vector<IdentitySpec>& registry();

/// nullptr when unknown.
const IdentitySpec* find_identity(const std::string& id);

std::vector<std::string> all_identity_ids();

/// Throws std::out_of_range for an unknown id. A point outside the domain, or
/// lacking a coordinate the identity needs, comes back as skipped with a reason.
CheckResult run_check(const std::string& id, const GridPoint& point);

/// Domain points of `spec` inside `grid`, in sweep order.
std::vector<GridPoint> enumerate_points(const IdentitySpec& spec, const Grid& grid);

/// Throws std::out_of_range for an unknown id; jobs < 1 throws std::invalid_argument.
Report sweep(const std::vector<std::string>& ids, const Grid& grid, unsigned jobs = 1);

Summary summarize(const std::vector<CheckResult>& results);

// Serialization -------------------------------------------------------------

struct SerializeOptions {
    /// When false, wall-clock fields (timestamp, runtime) are omitted.
    bool include_timing = true;
    std::string timestamp;
};

/// Header record, one line per CheckResult, summary record.
std::string to_json_lines(const Report& report, const SerializeOptions& options = {});
/// Header row plus one row per CheckResult.
std::string to_csv(const Report& report);
std::string to_human(const Report& report, const SerializeOptions& options = {});

} // namespace supercat::verify
