#include "tc/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

#include "tc/tensor_square.hpp"

namespace tc {

int closed_form_tc(int m, int n)
{
    if (m < 2)
        throw std::invalid_argument("m must be >= 2, got " + std::to_string(m));
    if (n < 1)
        throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
    if (n == 1)
        return 1;
    return m % 2 == 1 ? 2 * n - 1 : 2 * n - 2;
}

int dimension_upper(int dim)
{
    if (dim < 0)
        throw std::invalid_argument("dimension must be >= 0");
    return 2 * dim + 1;
}

int connectivity_upper(int dim, int s)
{
    if (s <= 1)
        throw std::invalid_argument("connectivity bound needs s >= 2, got " + std::to_string(s));
    if (dim < 1)
        throw std::invalid_argument("connectivity bound needs dim >= 1");
    if ((2 * dim) % s == 0)
        return 2 * dim / s + 1;
    // (2 dim + 1)/s + 1 = (2 dim + 1 + s)/s; strict inequality.
    const int num = 2 * dim + 1 + s;
    const int ceiling = (num + s - 1) / s;
    return ceiling - 1;
}

int sharpness_upper(int dim, int s, int bar_len)
{
    if (s <= 1)
        throw std::invalid_argument("sharpness bound needs s >= 2, got " + std::to_string(s));
    if (dim < 1 || (2 * dim) % s != 0)
        throw std::invalid_argument("sharpness bound needs s to divide 2*dim (dim=" + std::to_string(dim)
            + ", s=" + std::to_string(s) + ")");
    const int r = 2 * dim / s;
    return bar_len >= r ? r + 1 : r;
}

int product_upper_m2(int n)
{
    if (n < 2)
        throw std::invalid_argument("product bound needs n >= 2");
    const int tc_circle = 2;
    return dimension_upper(n - 2) + tc_circle - 1;
}

int lower_from_zcl(int zcl)
{
    if (zcl < 0)
        throw std::invalid_argument("cup-length must be >= 0");
    return zcl + 1;
}

int homotopy_dimension(int m, int n)
{
    if (m < 2 || n < 1)
        throw std::invalid_argument("homotopy dimension needs m >= 2, n >= 1");
    return m >= 3 ? (m - 1) * (n - 1) : n - 1;
}

std::string to_string(ReportStatus s)
{
    switch (s) {
    case ReportStatus::Pinched:
        return "pinched";
    case ReportStatus::Unpinched:
        return "unpinched";
    case ReportStatus::Contradiction:
        return "contradiction";
    case ReportStatus::CapExceeded:
        return "cap-exceeded";
    }
    return "unknown";
}

ReportStatus report_status_from_string(const std::string& s)
{
    for (auto st : {ReportStatus::Pinched, ReportStatus::Unpinched, ReportStatus::Contradiction, ReportStatus::CapExceeded})
        if (to_string(st) == s)
            return st;
    throw std::invalid_argument("unknown report status '" + s + "'");
}

namespace {

// Length of nonzero generator bar products, over Z when the field is Q.
int bar_length_over(const std::shared_ptr<const ArnoldAlgebra>& alg, const FieldSpec& field, const ReportOptions& opts)
{
    if (std::holds_alternative<Rationals>(field)) {
        if (opts.span_kernels)
            return bar_span_length(TensorSquare<Rationals>(alg, Rationals{}), opts.execution, opts.caps).length;
        return bar_product_length(TensorSquare<Integers>(alg, Integers{}), opts.execution, opts.caps).length;
    }
    const auto& fp = std::get<PrimeField>(field);
    TensorSquare<PrimeField> sq(alg, fp);
    if (opts.span_kernels)
        return zero_divisor_cuplength(sq, {opts.execution, PowerMethod::GeneratorBars, opts.caps}).length;
    return bar_product_length(sq, opts.execution, opts.caps).length;
}

struct UpperCandidate {
    int value;
    std::string source;
};

} // namespace

BoundsReport assemble_report(int m, int n, const FieldSpec& field, const ReportOptions& opts)
{
    BoundsReport rep;
    rep.m = m;
    rep.n = n;
    rep.closed_form = closed_form_tc(m, n);
    rep.field = field_name(field);

    const Presentation pres = build_presentation(n, m);
    try {
        check_caps(pres, opts.caps);
    } catch (const CapExceeded& e) {
        rep.status = ReportStatus::CapExceeded;
        rep.warnings.push_back(std::string("not computed: ") + e.what());
        return rep;
    }

    if (field_characteristic(field) == 2 && m % 2 == 1)
        rep.warnings.push_back("characteristic 2 kills bar(v)^2 = -2 v(x)v for even-degree v; "
                               "the zero-divisor lower bound may be weaker than over Q");

    std::shared_ptr<const ArnoldAlgebra> alg = opts.algebra;
    if (!alg || !(alg->presentation() == pres))
        alg = std::make_shared<ArnoldAlgebra>(pres);

    // The zero-divisor ideal is generated by the generator bar classes, so
    // its cup-length is the length of the longest nonzero bar product.
    const int zcl = bar_length_over(alg, field, opts);
    rep.diagnostics.push_back({"zero_divisor_cuplength", zcl, "over " + rep.field});
    rep.lower = lower_from_zcl(zcl);
    rep.lower_source = "zero-divisor cup-length over " + rep.field;

    const int dim = homotopy_dimension(m, n);
    rep.diagnostics.push_back({"homotopy_dimension", dim, "trusted input"});
    std::vector<UpperCandidate> uppers;
    uppers.push_back({dimension_upper(dim), "dimension bound 2*dim+1"});
    if (m >= 3 && dim >= 1) {
        const int s = m - 1;
        rep.diagnostics.push_back({"connectivity_s", s, "space is (s-1)-connected"});
        uppers.push_back({connectivity_upper(dim, s), "connectivity bound"});
        // Integral nonvanishing of bar products is detected over Q because the
        // cohomology is free, so this bound is always computed rationally.
        const int bar_len = std::holds_alternative<Rationals>(field) ? zcl : bar_length_over(alg, Rationals{}, opts);
        rep.diagnostics.push_back({"bar_span_length", bar_len, "over Q"});
        uppers.push_back({sharpness_upper(dim, s, bar_len), "bar-product sharpness bound"});
    }
    if (m == 2 && n >= 2)
        uppers.push_back({product_upper_m2(n), "product inequality with S^1 factor"});

    for (const auto& u : uppers)
        rep.diagnostics.push_back({"upper_candidate", u.value, u.source});
    auto best = std::min_element(uppers.begin(), uppers.end(),
        [](const UpperCandidate& a, const UpperCandidate& b) { return a.value < b.value; });
    rep.upper = best->value;
    rep.upper_source = best->source;

    rep.pinched = *rep.lower == *rep.upper;
    if (*rep.lower > rep.closed_form || *rep.upper < rep.closed_form || *rep.lower > *rep.upper)
        rep.status = ReportStatus::Contradiction;
    else
        rep.status = rep.pinched ? ReportStatus::Pinched : ReportStatus::Unpinched;
    return rep;
}

} // namespace tc
