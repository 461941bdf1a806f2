// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tc/bounds.hpp"
#include "tc/selftest.hpp"

using namespace tc;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string cell(int m, int n)
{
    return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

Outcome grid_pinches()
{
    Outcome o;
    std::vector<std::pair<int, int>> cells;
    for (int m = 2; m <= 7; ++m)
        for (int n = 2; n <= 3; ++n)
            cells.emplace_back(m, n);
    for (int m = 2; m <= 5; ++m)
        cells.emplace_back(m, 4);
    for (auto [m, n] : cells) {
        const BoundsReport rep = assemble_report(m, n, Rationals{});
        const int cf = closed_form_tc(m, n);
        o.require(rep.status == ReportStatus::Pinched && rep.lower == cf && rep.upper == cf,
            cell(m, n) + " lower=" + std::to_string(rep.lower.value_or(-1)) + " upper="
                + std::to_string(rep.upper.value_or(-1)) + " closed=" + std::to_string(cf));
    }
    o.detail = o.ok ? std::to_string(cells.size()) + " cells pinched at the closed form" : o.detail;
    return o;
}

std::shared_ptr<const ArnoldAlgebra> algebra(int n, int m)
{
    return std::make_shared<const ArnoldAlgebra>(build_presentation(n, m));
}

Outcome bar_span_parity()
{
    Outcome o;
    for (int m : {2, 4, 6}) {
        const BarSpanResult r = bar_span_length(TensorSquare<Rationals>(algebra(3, m), Rationals{}));
        // dims has an entry per nonzero V_k, so V_4 = 0 iff length stops at 3.
        o.require(r.length == 3 && r.dims.size() == 3, cell(m, 3) + " bar span " + std::to_string(r.length));
    }
    for (int m : {3, 5}) {
        const BarSpanResult r = bar_span_length(TensorSquare<Rationals>(algebra(3, m), Rationals{}));
        o.require(r.length >= 4, cell(m, 3) + " bar span " + std::to_string(r.length));
    }
    if (o.ok)
        o.detail = "n=3: length 3 with V_4=0 for m in {2,4,6}; >= 4 for m in {3,5}";
    return o;
}

Outcome spheres()
{
    Outcome o;
    for (int m = 2; m <= 9; ++m) {
        const int zcl = zero_divisor_cuplength(TensorSquare<Rationals>(algebra(2, m), Rationals{})).length;
        o.require(zcl == (m % 2 == 1 ? 2 : 1), cell(m, 2) + " zcl " + std::to_string(zcl));
        const BoundsReport rep = assemble_report(m, 2, Rationals{});
        o.require(rep.status == ReportStatus::Pinched, cell(m, 2) + " not pinched");
    }
    if (o.ok)
        o.detail = "n=2, m=2..9: zcl 2 for odd m, 1 for even m";
    return o;
}

Outcome suites(const std::vector<std::function<SuiteResult(const SelftestOptions&)>>& fns, const SelftestOptions& opts)
{
    Outcome o;
    long checks = 0;
    for (const auto& f : fns) {
        const SuiteResult r = f(opts);
        checks += r.passed + r.failed;
        o.require(r.ok(), r.name + ": " + (r.failures.empty() ? "failed" : r.failures.front()));
    }
    if (o.ok)
        o.detail = std::to_string(checks) + " checks";
    return o;
}

Outcome ring_oracles()
{
    SelftestOptions opts;
    opts.max_n = 4;
    opts.triples = 1000;
    opts.pairs = 1000;
    opts.shuffles = 100;
    opts.max_rank_n = 5;
    return suites({suite_ranks, suite_associativity, suite_commutativity, suite_confluence, suite_diagonal_homomorphism,
                      suite_koszul_involution, suite_kernels},
        opts);
}

Outcome stability()
{
    Outcome o;
    for (int n = 1; n <= 4; ++n)
        for (int m : {4, 6})
            o.require(stability_check(n, m), cell(m, n) + " differs from m=2");
    if (o.ok)
        o.detail = "n<=4, m in {4,6} match m=2 after regrading";
    return o;
}

Outcome characteristic_two()
{
    Outcome o;
    const BoundsReport rep = assemble_report(3, 2, PrimeField(2));
    o.require(rep.lower == 2, "lower " + std::to_string(rep.lower.value_or(-1)));
    o.require(!rep.pinched && rep.status == ReportStatus::Unpinched, "unexpectedly pinched");
    o.require(!rep.warnings.empty(), "no warning recorded");
    if (o.ok)
        o.detail = "m=3 n=2 over Z_2: lower 2, upper " + std::to_string(rep.upper.value_or(-1)) + ", warning recorded";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"grid pinches at the closed form", grid_pinches},
        {"bar span parity dichotomy at n=3", bar_span_parity},
        {"sphere zero-divisor cup-lengths", spheres},
        {"ring oracle suites", ring_oracles},
        {"stability under even regrading", stability},
        {"characteristic 2 does not pinch", characteristic_two},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %d %s: %s\n", o.ok ? "PASS" : "FAIL", index++, name.c_str(), o.detail.c_str());
        failures += o.ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
