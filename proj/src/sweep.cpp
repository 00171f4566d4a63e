#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "supercat/verifier.hpp"

namespace supercat::verify {

const char* to_string(Status s) {
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skipped:
        return "skipped";
    }
    return "unknown";
}

bool point_less(const GridPoint& a, const GridPoint& b) {
    auto key = [](const GridPoint& p) {
        return std::tuple{p.n.value_or(-1), p.l.value_or(-1), p.t.value_or(-1), p.m.value_or(-1)};
    };
    return key(a) < key(b);
}

void Grid::validate() const {
    if (n_max < 0 || l_max < 0 || t_max < 0 || m_max < 0)
        throw std::invalid_argument("grid bounds must be non-negative");
}

namespace {

GridPoint restrict_to(const GridPoint& p, unsigned coords) {
    GridPoint out;
    if (coords & kN)
        out.n = p.n;
    if (coords & kL)
        out.l = p.l;
    if (coords & kT)
        out.t = p.t;
    if (coords & kM)
        out.m = p.m;
    return out;
}

std::string missing_coordinates(const GridPoint& p, unsigned coords) {
    std::string missing;
    auto note = [&](bool absent, const char* name) {
        if (absent)
            missing += missing.empty() ? name : std::string(",") + name;
    };
    note((coords & kN) && !p.n, "n");
    note((coords & kL) && !p.l, "l");
    note((coords & kT) && !p.t, "t");
    note((coords & kM) && !p.m, "m");
    return missing;
}

bool has_invalid_coordinate(const GridPoint& p) {
    return (p.n && *p.n < 0) || (p.l && *p.l < 0) || (p.t && *p.t < 0) || (p.m && *p.m < 1);
}

CheckResult evaluate(const IdentitySpec& spec, const GridPoint& requested) {
    CheckResult result;
    result.identity = spec.id;
    result.point = restrict_to(requested, spec.coordinates);

    if (auto missing = missing_coordinates(result.point, spec.coordinates); !missing.empty()) {
        result.status = Status::skipped;
        result.reason = "missing coordinate: " + missing;
        return result;
    }
    if (has_invalid_coordinate(result.point)) {
        result.status = Status::skipped;
        result.reason = "invalid coordinate: n, l, t must be >= 0 and m >= 1";
        return result;
    }
    if (!spec.in_domain(result.point)) {
        result.status = Status::skipped;
        result.reason = "outside domain: " + spec.domain_text;
        return result;
    }
    try {
        Verdict v = spec.checker(result.point);
        result.lhs = std::move(v.lhs);
        result.rhs = std::move(v.rhs);
        result.status = v.holds ? Status::pass : Status::fail;
        if (!v.holds)
            result.reason = std::move(v.note);
    } catch (const std::exception& e) {
        result.status = Status::fail;
        result.reason = std::string("error: ") + e.what();
    }
    return result;
}

const IdentitySpec& require_identity(const std::string& id) {
    const IdentitySpec* spec = find_identity(id);
    if (spec == nullptr)
        throw std::out_of_range("unknown identity id: " + id);
    return *spec;
}

} // namespace

CheckResult run_check(const std::string& id, const GridPoint& point) {
    return evaluate(require_identity(id), point);
}

std::vector<GridPoint> enumerate_points(const IdentitySpec& spec, const Grid& grid) {
    grid.validate();
    auto range = [](bool used, Index lo, Index hi) {
        std::vector<std::optional<Index>> values;
        if (!used) {
            values.emplace_back(std::nullopt);
            return values;
        }
        for (Index v = lo; v <= hi; ++v)
            values.emplace_back(v);
        return values;
    };
    const auto ns = range(spec.coordinates & kN, 0, grid.n_max);
    const auto ls = range(spec.coordinates & kL, 0, grid.l_max);
    const auto ts = range(spec.coordinates & kT, 0, grid.t_max);
    const auto ms = range(spec.coordinates & kM, 1, grid.m_max);

    std::vector<GridPoint> points;
    for (const auto& n : ns)
        for (const auto& l : ls)
            for (const auto& t : ts)
                for (const auto& m : ms) {
                    GridPoint p{n, l, t, m};
                    if (spec.in_domain(p))
                        points.push_back(p);
                }
    return points;
}

Summary summarize(const std::vector<CheckResult>& results) {
    Summary s;
    s.total = results.size();
    for (const auto& r : results) {
        switch (r.status) {
        case Status::pass:
            ++s.passed;
            break;
        case Status::fail:
            ++s.failed;
            break;
        case Status::skipped:
            ++s.skipped;
            break;
        }
    }
    return s;
}

Report sweep(const std::vector<std::string>& ids, const Grid& grid, unsigned jobs) {
    if (jobs < 1)
        throw std::invalid_argument("sweep requires at least one worker");
    grid.validate();
    const auto started = std::chrono::steady_clock::now();

    struct Task {
        const IdentitySpec* spec;
        GridPoint point;
    };
    std::vector<std::string> unique_ids = ids;
    std::sort(unique_ids.begin(), unique_ids.end());
    unique_ids.erase(std::unique(unique_ids.begin(), unique_ids.end()), unique_ids.end());

    std::vector<Task> tasks;
    for (const auto& id : unique_ids) {
        const IdentitySpec& spec = require_identity(id);
        for (auto& p : enumerate_points(spec, grid))
            tasks.push_back({&spec, std::move(p)});
    }

    std::vector<CheckResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
            results[i] = evaluate(*tasks[i].spec, tasks[i].point);
    };
    const unsigned threads = std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }

    std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.identity != b.identity)
            return a.identity < b.identity;
        return point_less(a.point, b.point);
    });

    Report report;
    report.identities = std::move(unique_ids);
    report.grid = grid;
    report.results = std::move(results);
    report.summary = summarize(report.results);
    report.runtime = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    return report;
}

} // namespace supercat::verify
