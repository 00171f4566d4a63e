// One line per acceptance criterion; exit status is the number of failures.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracle.hpp"
#include "supercat/cli.hpp"
#include "supercat/dsums.hpp"
#include "supercat/sums.hpp"
#include "supercat/super_catalan.hpp"
#include "supercat/verifier.hpp"

using namespace supercat;

namespace {

struct Tally {
    long checked = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && first_failure.empty())
            first_failure = what;
    }
};

std::string at(std::initializer_list<std::pair<const char*, long>> coords) {
    std::string s;
    for (const auto& [name, v] : coords)
        s += std::string(s.empty() ? "" : " ") + name + "=" + std::to_string(v);
    return s;
}

verify::Grid grid(Index n, Index l, Index t, Index m) {
    verify::Grid g;
    g.n_max = n;
    g.l_max = l;
    g.t_max = t;
    g.m_max = m;
    return g;
}

void expect_sweep(Tally& tally, const std::vector<std::string>& ids, const verify::Grid& g) {
    auto report = verify::sweep(ids, g, 1);
    for (const auto& r : report.results)
        tally.expect(r.status == verify::Status::pass, r.identity + " " + r.reason);
    tally.expect(report.summary.total > 0, "empty sweep");
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str()};
}

Tally criterion1() {
    Tally t;
    for (long n = 0; n <= 25; ++n)
        for (long l = 0; l <= 15; ++l)
            t.expect(psi(2 * n, 1, l) == super_catalan(n, l) * super_catalan(n + l, n), at({{"n", n}, {"l", l}}));
    t.expect(psi(8, 1, 2).to_string() == oracle::psi(8, 1, 2).get_str(), "brute force psi(8,1,2)");
    t.expect(oracle::psi(8, 1, 2) == 8624 && oracle::S(4, 2) == 28 && oracle::S(6, 4) == 308, "anchor 8624 = 28*308");
    t.expect(psi(8, 1, 2) == Integer(8624), "psi(8,1,2)");
    return t;
}

Tally criterion2() {
    Tally t;
    for (long n = 0; n <= 15; ++n)
        for (long tt = 0; tt <= n; ++tt)
            for (long l = 0; l <= 10; ++l)
                t.expect(psi_t(2 * n, tt, l) == phi({n, l, tt}), at({{"n", n}, {"t", tt}, {"l", l}}));
    expect_sweep(t, {"thm2", "eq18"}, grid(15, 10, 15, 1));
    return t;
}

Tally criterion3() {
    Tally t;
    t.expect(psi(4, 1, 0) == Integer(36) && oracle::binom(4, 2) * oracle::binom(4, 2) == 36, "central square anchor n=2");
    for (long n = 0; n <= 20; ++n) {
        Integer sum = 0;
        for (long k = 0; k <= 2 * n; ++k)
            sum += Integer(alternating_sign(k)) * binomial(2 * n, k) * catalan(k) * catalan(2 * n - k);
        t.expect(sum == catalan(n) * central_binomial(n), at({{"Catalan convolution n", n}}));
        t.expect(psi(2 * n, 1, 0) == central_binomial(n) * central_binomial(n), at({{"central square n", n}}));
    }
    expect_sweep(t, {"eq2", "eq3"}, grid(20, 0, 0, 1));
    expect_sweep(t, {"eq8", "eq9"}, grid(15, 0, 15, 1));
    return t;
}

Tally criterion4() {
    Tally t;
    const verify::Grid g = grid(12, 8, 12, 1);
    auto report = verify::sweep({"lemma1", "lemma2", "lemma3", "lemma4"}, g, 1);
    std::size_t in_range = 0;
    for (const auto& r : report.results) {
        if (*r.point.t < *r.point.n)
            ++in_range;
        t.expect(r.status == verify::Status::pass, r.identity + " " + r.reason);
    }
    // t < n <= 12, l <= 8 for each of the four relations
    t.expect(in_range == 4u * 78u * 9u, "grid coverage " + std::to_string(in_range));
    return t;
}

Tally criterion5() {
    Tally t;
    const SummandFunction fpsi = psi_summand(), fone = unit_summand();
    for (const auto* f : {&fpsi, &fone}) {
        const bool is_psi = f == &fpsi;
        for (long n = 0; n <= 12; ++n)
            for (long l = 0; l <= 4; ++l) {
                for (long m = 2; m <= 6; ++m) {
                    Integer a = 0;
                    for (long k = 0; k <= n; ++k)
                        a += pow(binomial(n, k), static_cast<unsigned long>(m)) * (*f)(n, k, l);
                    t.expect(a == d_sum_direct(*f, {n, 0, m - 2, l}), at({{"power sum n", n}, {"m", m}, {"l", l}}));
                    if (is_psi)
                        t.expect(a == psi(n, m, l), at({{"psi n", n}, {"m", m}, {"l", l}}));
                }
                for (long j = 0; 2 * j <= n; ++j) {
                    const Integer base = d_sum_direct(*f, {n, j, 0, l});
                    t.expect(d_sum_base(*f, n, j, l) == base, at({{"base n", n}, {"j", j}, {"l", l}}));
                    t.expect(d_sum_base_expanded(*f, n, j, l) == base, at({{"expanded base n", n}, {"j", j}, {"l", l}}));
                    for (long s = 1; s <= 3; ++s)
                        t.expect(d_sum_step(*f, {n, j, s, l}) == d_sum_direct(*f, {n, j, s, l}),
                                 at({{"step n", n}, {"j", j}, {"t", s}, {"l", l}}));
                }
            }
    }
    return t;
}

Tally criterion6() {
    Tally t;
    for (long n = 0; n <= 10; ++n)
        for (long l = 0; l <= 6; ++l)
            for (long m = 1; m <= 5; ++m) {
                const auto where = at({{"n", n}, {"l", l}, {"m", m}});
                const Integer value = psi(2 * n, m, l);
                t.expect(divides(super_catalan(n, l), value), where);
                const Integer w = psi_witness_quotient(n, m, l);
                t.expect(w * super_catalan(n, l) == value, where);
                auto d = psi_divisibility_check(n, m, l);
                t.expect(d.exact && d.quotient == w, where);
            }
    expect_sweep(t, {"thm3"}, grid(10, 6, 0, 5));
    return t;
}

Tally criterion7() {
    Tally t;
    for (long n = 0; n <= 10; ++n)
        for (long l = 1; l <= 6; ++l)
            for (long m = 1; m <= 5; ++m)
                t.expect(divides(Integer(2) * super_catalan(n, l), psi(2 * n, m, l)), at({{"n", n}, {"l", l}, {"m", m}}));
    expect_sweep(t, {"remark2", "remark3", "remark4"}, grid(10, 6, 0, 5));
    const Integer v = psi(8, 1, 2);
    t.expect(!mod(v, binomial(8, 4)).is_zero(), "psi(8,1,2) mod binom(8,4)");
    t.expect(mod(v, binomial(8, 4)) == Integer(oracle::psi(8, 1, 2).get_si() % oracle::binom(8, 4).get_si()),
             "remainder against oracle");
    t.expect(div_exact(v, super_catalan(4, 2)) == Integer(308), "psi(8,1,2)/S(4,2)");
    return t;
}

Tally criterion8() {
    Tally t;
    for (long n = 0; n <= 30; ++n)
        for (long l = 0; l <= 30; ++l) {
            const auto where = at({{"n", n}, {"l", l}});
            const Integer r = super_catalan_ratio({n, l});
            t.expect(r == super_catalan_factorial({n, l}), where);
            t.expect(r == super_catalan_von_szily({n, l}), where);
            t.expect(r.to_string() == oracle::S(n, l).get_str(), where);
            t.expect(r == super_catalan_ratio({l, n}), where);
            t.expect((n == 0 && l == 0) ? r == Integer(1) : r.is_even(), where);
        }
    expect_sweep(t, {"vonszily", "symmetry", "parity"}, grid(30, 30, 0, 1));
    return t;
}

Tally criterion9() {
    Tally t;
    expect_sweep(t, {"eq94", "eq104"}, grid(10, 6, 0, 1));
    for (long n = 0; n <= 8; ++n)
        for (long j = 0; j <= n; ++j)
            for (long l = 0; l <= 4; ++l) {
                const Integer d = d_sum_direct(psi_summand(), {2 * n, j, 1, l});
                t.expect(divides(super_catalan(n, l), d), at({{"n", n}, {"j", j}, {"l", l}}));
                t.expect(d_psi_level1(n, j, l).value == d, at({{"n", n}, {"j", j}, {"l", l}}));
            }
    expect_sweep(t, {"dlevel1"}, grid(8, 4, 0, 1));
    return t;
}

Tally criterion10(const std::string& golden_path) {
    Tally t;
    t.expect(cli({"verify", "--all", "--default-grid"}).code == 0, "verify --all --default-grid");

    std::vector<std::string> base{"sweep", "--all", "--n-max", "6", "--l-max", "4", "--m-max", "3", "--no-timestamp"};
    std::string reference;
    for (const char* jobs : {"1", "2", "3", "8"}) {
        auto args = base;
        args.insert(args.end(), {"--jobs", jobs});
        auto r = cli(args);
        t.expect(r.code == 0, std::string("sweep --jobs ") + jobs);
        if (reference.empty())
            reference = r.out;
        t.expect(r.out == reference, std::string("bytes differ at --jobs ") + jobs);
    }

    std::ifstream in(golden_path, std::ios::binary);
    std::stringstream golden;
    golden << in.rdbuf();
    t.expect(in.good() || in.eof(), "golden file readable");
    for (const char* jobs : {"1", "4"}) {
        auto r = cli({"sweep", "--id", "thm1", "--id", "eq20", "--id", "remark4", "--n-max", "4", "--l-max", "2",
                      "--m-max", "1", "--no-timestamp", "--jobs", jobs});
        t.expect(r.out == golden.str(), std::string("golden mismatch at --jobs ") + jobs);
    }
    return t;
}

} // namespace

int main(int argc, char** argv) {
    const std::string golden = argc > 1 ? argv[1] : "tests/golden/small_sweep.jsonl";
    const std::vector<std::pair<const char*, std::function<Tally()>>> criteria{
        {"product form of psi(2n,1,l), n<=25 l<=15", criterion1},
        {"truncated sums equal phi, t<=n<=15 l<=10", criterion2},
        {"central binomial and Catalan special cases", criterion3},
        {"contiguous relations in cleared form, t<n<=12 l<=8", criterion4},
        {"D-sum engine coherence, both summands", criterion5},
        {"S(n,l) divides psi(2n,m,l), witness quotients", criterion6},
        {"2S(n,l) divisibility and the binom(8,4) counterexample", criterion7},
        {"three S routes, symmetry, parity, n,l<=30", criterion8},
        {"factorization, scaled closed form, level-1 divisibility", criterion9},
        {"CLI exit code and byte-stable reports", [&] { return criterion10(golden); }},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Tally t;
        try {
            t = run();
        } catch (const std::exception& e) {
            t.expect(false, std::string("exception: ") + e.what());
        }
        const bool ok = t.first_failure.empty();
        failures += !ok;
        std::cout << "criterion " << index << ": " << (ok ? "PASS" : "FAIL") << "  " << name << " (" << t.checked
                  << " checks)";
        if (!ok)
            std::cout << "  first failure: " << t.first_failure;
        std::cout << '\n';
    }
    return failures;
}
