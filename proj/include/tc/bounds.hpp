#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tc/arnold_algebra.hpp"
#include "tc/coefficients.hpp"
#include "tc/span_kernels.hpp"
#include "tc/zero_divisors.hpp"

namespace tc {

// TC values use the unreduced convention: TC(point) = 1, TC(S^1) = 2.

// Known value of TC(F(R^m, n)).
int closed_form_tc(int m, int n);

// Upper bound 2 dim + 1 for a complex of dimension dim.
int dimension_upper(int dim);

// Upper bound for an (s-1)-connected complex of dimension dim: the largest
// integer strictly below (2 dim + 1)/s + 1 (equal to 2 dim/s + 1 when s
// divides 2 dim). Requires s >= 2 and dim >= 1.
int connectivity_upper(int dim, int s);

// With r = 2 dim / s: r + 1 when some r-fold product of bar classes of
// degree-s integral classes is nonzero (bar_len >= r), else r.
int sharpness_upper(int dim, int s, int bar_len);

// m = 2 only: F(C, n) ~ X x S^1 with dim X <= n - 2, so
// TC <= TC(X) + TC(S^1) - 1 <= (2(n - 2) + 1) + 2 - 1.
int product_upper_m2(int n);

int lower_from_zcl(int zcl);

// Homotopy dimension taken as input: (m-1)(n-1) for m >= 3, n-1 for m = 2.
int homotopy_dimension(int m, int n);

enum class ReportStatus { Pinched, Unpinched, Contradiction, CapExceeded };

std::string to_string(ReportStatus s);
ReportStatus report_status_from_string(const std::string& s);

struct Diagnostic {
    std::string tag;
    std::int64_t value = 0;
    std::string note;

    bool operator==(const Diagnostic&) const = default;
};

struct BoundsReport {
    int m = 0;
    int n = 0;
    std::optional<int> lower;
    std::string lower_source;
    std::optional<int> upper;
    std::string upper_source;
    int closed_form = 0;
    bool pinched = false;
    std::string field;
    ReportStatus status = ReportStatus::Unpinched;
    std::vector<Diagnostic> diagnostics;
    std::vector<std::string> warnings;

    bool operator==(const BoundsReport&) const = default;
};

struct ReportOptions {
    ResourceCaps caps{};
    Execution execution = Execution::Parallel;
    // Use the subspace iterations instead of the bar product search.
    bool span_kernels = false;
    // Structure constants loaded from a cache; used when its (n, m) match.
    std::shared_ptr<const ArnoldAlgebra> algebra;
};

BoundsReport assemble_report(int m, int n, const FieldSpec& field, const ReportOptions& opts = {});

} // namespace tc
