#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "supercat/verifier.hpp"

namespace supercat::verify {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json coordinate(const std::optional<Index>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json grid_json(const Grid& g) {
    ordered_json j;
    j["n_max"] = g.n_max;
    j["l_max"] = g.l_max;
    j["t_max"] = g.t_max;
    j["m_max"] = g.m_max;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_coordinate(const std::optional<Index>& v) { return v ? std::to_string(*v) : std::string(); }

std::string point_text(const GridPoint& p) {
    std::string out;
    auto add = [&](const char* name, const std::optional<Index>& v) {
        if (!v)
            return;
        if (!out.empty())
            out += ' ';
        out += name;
        out += '=';
        out += std::to_string(*v);
    };
    add("n", p.n);
    add("l", p.l);
    add("t", p.t);
    add("m", p.m);
    return out.empty() ? "-" : out;
}

} // namespace

std::string to_json_lines(const Report& report, const SerializeOptions& options) {
    std::ostringstream out;

    ordered_json header;
    header["record"] = "header";
    header["identities"] = report.identities;
    header["grid"] = grid_json(report.grid);
    if (options.include_timing)
        header["generated_at"] = options.timestamp;
    out << header.dump() << '\n';

    for (const auto& r : report.results) {
        ordered_json j;
        j["identity"] = r.identity;
        j["n"] = coordinate(r.point.n);
        j["l"] = coordinate(r.point.l);
        j["t"] = coordinate(r.point.t);
        j["m"] = coordinate(r.point.m);
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["status"] = to_string(r.status);
        j["reason"] = r.reason;
        out << j.dump() << '\n';
    }

    ordered_json summary;
    summary["record"] = "summary";
    summary["total"] = report.summary.total;
    summary["pass"] = report.summary.passed;
    summary["fail"] = report.summary.failed;
    summary["skipped"] = report.summary.skipped;
    if (options.include_timing)
        summary["runtime_ms"] = report.runtime.count();
    out << summary.dump() << '\n';
    return out.str();
}

std::string to_csv(const Report& report) {
    std::ostringstream out;
    out << "identity,n,l,t,m,lhs,rhs,status,reason\n";
    for (const auto& r : report.results) {
        out << csv_field(r.identity) << ',' << csv_coordinate(r.point.n) << ',' << csv_coordinate(r.point.l) << ','
            << csv_coordinate(r.point.t) << ',' << csv_coordinate(r.point.m) << ',' << csv_field(r.lhs) << ','
            << csv_field(r.rhs) << ',' << to_string(r.status) << ',' << csv_field(r.reason) << '\n';
    }
    return out.str();
}

std::string to_human(const Report& report, const SerializeOptions& options) {
    std::ostringstream out;
    out << "grid: n<=" << report.grid.n_max << " l<=" << report.grid.l_max << " t<=" << report.grid.t_max
        << " m<=" << report.grid.m_max << '\n';

    // One line per identity, plus every failing or skipped point spelled out.
    std::size_t i = 0;
    const auto& rs = report.results;
    while (i < rs.size()) {
        std::size_t j = i;
        Summary s;
        while (j < rs.size() && rs[j].identity == rs[i].identity)
            ++j;
        s = summarize({rs.begin() + static_cast<std::ptrdiff_t>(i), rs.begin() + static_cast<std::ptrdiff_t>(j)});
        out << (s.failed == 0 ? "  ok   " : "  FAIL ") << std::left << std::setw(10) << rs[i].identity << ' '
            << s.passed << '/' << s.total << " passed";
        if (s.skipped)
            out << ", " << s.skipped << " skipped";
        out << '\n';
        for (std::size_t k = i; k < j; ++k) {
            if (rs[k].status == Status::pass)
                continue;
            out << "         " << to_string(rs[k].status) << " at " << point_text(rs[k].point) << ": lhs=" << rs[k].lhs
                << " rhs=" << rs[k].rhs;
            if (!rs[k].reason.empty())
                out << " (" << rs[k].reason << ')';
            out << '\n';
        }
        i = j;
    }
    for (const auto& id : report.identities) {
        bool any = std::any_of(rs.begin(), rs.end(), [&](const CheckResult& r) { return r.identity == id; });
        if (!any)
            out << "  --   " << std::left << std::setw(10) << id << " no points in grid\n";
    }

    out << "total " << report.summary.total << ": " << report.summary.passed << " pass, " << report.summary.failed
        << " fail, " << report.summary.skipped << " skipped";
    if (options.include_timing)
        out << " in " << report.runtime.count() << " ms";
    out << '\n';
    return out.str();
}

} // namespace supercat::verify
