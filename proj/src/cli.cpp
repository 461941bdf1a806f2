#include "tc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <memory>
#include <optional>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "tc/algebra_element.hpp"
#include "tc/algebra_io.hpp"
#include "tc/element_parser.hpp"
#include "tc/report_io.hpp"
#include "tc/selftest.hpp"
#include "tc/tensor_square.hpp"
#include "tc/zero_divisors.hpp"

namespace tc {

ExitStatus exit_status_for(ReportStatus s)
{
    switch (s) {
    case ReportStatus::Pinched:
        return ExitStatus::Pinched;
    case ReportStatus::Unpinched:
        return ExitStatus::Unpinched;
    case ReportStatus::Contradiction:
        return ExitStatus::Contradiction;
    case ReportStatus::CapExceeded:
        return ExitStatus::CapExceeded;
    }
    return ExitStatus::Contradiction;
}

ExitStatus combine_statuses(const std::vector<ReportStatus>& statuses)
{
    auto has = [&](ReportStatus s) { return std::find(statuses.begin(), statuses.end(), s) != statuses.end(); };
    if (has(ReportStatus::Contradiction))
        return ExitStatus::Contradiction;
    if (has(ReportStatus::CapExceeded))
        return ExitStatus::CapExceeded;
    if (has(ReportStatus::Unpinched))
        return ExitStatus::Unpinched;
    return ExitStatus::Pinched;
}

std::pair<int, int> parse_range(const std::string& text)
{
    auto to_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw std::invalid_argument("malformed range '" + text + "' (expected a..b or an integer)");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(text);
        return {v, v};
    }
    return {to_int(std::string_view(text).substr(0, dots)), to_int(std::string_view(text).substr(dots + 2))};
}

namespace {

struct Config {
    int m = 0;
    int n = 0;
    std::string field = "q";
    std::string output = "text";
    int max_n = ResourceCaps{}.max_n;
    int max_m = ResourceCaps{}.max_m;
    std::string cache_path;
    bool serial = false;

    ResourceCaps caps() const { return {max_n, max_m}; }
    Execution execution() const { return serial ? Execution::Serial : Execution::Parallel; }
    bool json() const { return output == "json"; }
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

int code(ExitStatus s)
{
    return static_cast<int>(s);
}

void add_common(CLI::App* cmd, Config& cfg, bool needs_m = true)
{
    cmd->add_option("--n", cfg.n, "number of points")->required();
    auto* m = cmd->add_option("--m", cfg.m, "ambient dimension (>= 2)");
    if (needs_m)
        m->required();
    cmd->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-n", cfg.max_n, "resource cap on n");
    cmd->add_option("--max-m", cfg.max_m, "resource cap on m");
}

Presentation checked_presentation(const Config& cfg)
{
    try {
        return build_presentation(cfg.n, cfg.m);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

FieldSpec checked_field(const std::string& text)
{
    try {
        return parse_field(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::shared_ptr<const ArnoldAlgebra> load_or_build(const Config& cfg, const Presentation& p)
{
    if (!cfg.cache_path.empty())
        return load_algebra_file(cfg.cache_path, p);
    return std::make_shared<const ArnoldAlgebra>(p);
}

void warn_characteristic(const Config& cfg, const FieldSpec& field, std::ostream& err)
{
    if (field_characteristic(field) == 2 && cfg.m % 2 == 1)
        err << "warning: characteristic 2 weakens zero-divisor lower bounds for odd m (bar(v)^2 = -2 v(x)v vanishes)\n";
}

int cmd_report(const Config& cfg, std::ostream& out, std::ostream& err)
{
    const Presentation p = checked_presentation(cfg);
    const FieldSpec field = checked_field(cfg.field);
    warn_characteristic(cfg, field, err);
    ReportOptions opts;
    opts.caps = cfg.caps();
    opts.execution = cfg.execution();
    if (!cfg.cache_path.empty() && p.n <= cfg.max_n && p.m <= cfg.max_m)
        opts.algebra = load_algebra_file(cfg.cache_path, p);
    const BoundsReport rep = assemble_report(cfg.m, cfg.n, field, opts);
    if (cfg.json())
        out << report_to_json(rep).dump() << '\n';
    else
        out << report_to_text(rep);
    return code(exit_status_for(rep.status));
}

int cmd_grid(const Config& cfg, const std::string& m_range, const std::string& n_range, std::ostream& out, std::ostream& err)
{
    std::pair<int, int> ms, ns;
    try {
        ms = parse_range(m_range);
        ns = parse_range(n_range);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const FieldSpec field = checked_field(cfg.field);
    std::vector<std::pair<int, int>> cells;
    for (int m = ms.first; m <= ms.second; ++m)
        for (int n = ns.first; n <= ns.second; ++n) {
            if (m < 2 || n < 1)
                throw UsageError("grid cell m=" + std::to_string(m) + " n=" + std::to_string(n) + " is out of range");
            cells.emplace_back(m, n);
        }
    if (field_characteristic(field) == 2 && std::any_of(cells.begin(), cells.end(), [](auto c) { return c.first % 2; }))
        err << "warning: characteristic 2 weakens zero-divisor lower bounds for odd m\n";

    std::vector<BoundsReport> reports(cells.size());
    ReportOptions opts;
    opts.caps = cfg.caps();
    opts.execution = Execution::Serial;
    std::vector<std::exception_ptr> failures(cells.size());
    const auto count = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 1) if (!cfg.serial)
    for (std::ptrdiff_t c = 0; c < count; ++c) {
        const auto idx = static_cast<std::size_t>(c);
        try {
            reports[idx] = assemble_report(cells[idx].first, cells[idx].second, field, opts);
        } catch (...) {
            failures[idx] = std::current_exception();
        }
    }
    for (const auto& f : failures)
        if (f)
            std::rethrow_exception(f);

    std::vector<ReportStatus> statuses;
    long pinched = 0;
    for (const auto& r : reports) {
        statuses.push_back(r.status);
        pinched += r.pinched ? 1 : 0;
    }
    if (cfg.json()) {
        nlohmann::ordered_json j;
        j["schema_version"] = report_schema_version;
        j["reports"] = nlohmann::ordered_json::array();
        for (const auto& r : reports)
            j["reports"].push_back(report_to_json(r));
        j["summary"] = {{"pinched", pinched}, {"total", reports.size()}};
        out << j.dump() << '\n';
    } else {
        out << report_table_header() << '\n';
        for (const auto& r : reports)
            out << report_table_row(r) << '\n';
        out << "pinched " << pinched << "/" << reports.size() << '\n';
    }
    return code(combine_statuses(statuses));
}

int cmd_basis(const Config& cfg, std::optional<int> k, std::ostream& out)
{
    const Presentation p = checked_presentation(cfg);
    check_caps(p, cfg.caps());
    const auto ranks = poincare_table(p.n);
    if (cfg.json()) {
        nlohmann::ordered_json j;
        j["n"] = p.n;
        j["m"] = p.m;
        auto ranks_json = nlohmann::ordered_json::array();
        for (const auto& r : ranks)
            ranks_json.push_back(r.get_str());
        j["ranks"] = ranks_json;
        auto list = nlohmann::ordered_json::array();
        for (int kk = k.value_or(0); kk <= (k ? *k : p.top_factor_count()); ++kk)
            for (const auto& mono : basis(p, kk))
                list.push_back({{"factors", mono.size()}, {"degree", static_cast<int>(mono.size()) * p.generator_degree()},
                    {"monomial", mono.to_string()}});
        j["basis"] = list;
        out << j.dump() << '\n';
        return 0;
    }
    out << "ranks:";
    for (const auto& r : ranks)
        out << ' ' << r.get_str();
    out << '\n';
    for (int kk = k.value_or(0); kk <= (k ? *k : p.top_factor_count()); ++kk) {
        const auto list = basis(p, kk);
        out << "degree " << kk * p.generator_degree() << " (" << kk << " factors): " << list.size() << '\n';
        for (const auto& mono : list)
            out << "  " << mono.to_string() << '\n';
    }
    return 0;
}

template <class Ring>
int multiply_over(const Config& cfg, const Ring& ring, const std::string& a_text, const std::string& b_text, std::ostream& out)
{
    const Presentation p = checked_presentation(cfg);
    check_caps(p, cfg.caps());
    auto alg = load_or_build(cfg, p);
    AlgebraElement<Ring> a(alg, ring), b(alg, ring);
    try {
        a = parse_element(alg, ring, a_text);
        b = parse_element(alg, ring, b_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto prod = a * b;
    if (cfg.json()) {
        nlohmann::ordered_json j;
        j["n"] = p.n;
        j["m"] = p.m;
        j["ring"] = ring.name();
        j["a"] = a.to_string();
        j["b"] = b.to_string();
        auto terms = nlohmann::ordered_json::array();
        for (const auto& [idx, c] : prod.terms())
            terms.push_back({{"monomial", alg->monomial(idx).to_string()}, {"coeff", ring.to_string(c)}});
        j["product"] = terms;
        j["normal_form"] = prod.to_string();
        out << j.dump() << '\n';
    } else {
        out << prod.to_string() << '\n';
    }
    return 0;
}

int cmd_multiply(const Config& cfg, const std::string& a, const std::string& b, std::ostream& out)
{
    if (cfg.field == "z" || cfg.field == "Z")
        return multiply_over(cfg, Integers{}, a, b, out);
    const FieldSpec field = checked_field(cfg.field);
    return std::visit([&](const auto& f) { return multiply_over(cfg, f, a, b, out); }, field);
}

int cmd_zcl(const Config& cfg, std::ostream& out, std::ostream& err)
{
    const Presentation p = checked_presentation(cfg);
    const FieldSpec field = checked_field(cfg.field);
    warn_characteristic(cfg, field, err);
    check_caps(p, cfg.caps());
    auto alg = load_or_build(cfg, p);
    return std::visit(
        [&](const auto& f) {
            const TensorSquare sq(alg, f);
            CuplengthOptions opts;
            opts.execution = cfg.execution();
            opts.caps = cfg.caps();
            const CuplengthResult res = zero_divisor_cuplength(sq, opts);
            if (cfg.json()) {
                nlohmann::ordered_json j;
                j["n"] = p.n;
                j["m"] = p.m;
                j["field"] = f.name();
                j["zero_divisor_cuplength"] = res.length;
                j["lower_bound"] = lower_from_zcl(res.length);
                j["power_dimensions"] = res.dims;
                out << j.dump() << '\n';
            } else {
                out << "zero_divisor_cuplength: " << res.length << '\n' << "lower_bound: " << lower_from_zcl(res.length) << '\n';
                for (std::size_t k = 0; k < res.dims.size(); ++k) {
                    out << "Z^" << k + 1 << " dims:";
                    for (auto d : res.dims[k])
                        out << ' ' << d;
                    out << '\n';
                }
            }
            return 0;
        },
        field);
}

int cmd_barspan(const Config& cfg, std::ostream& out)
{
    const Presentation p = checked_presentation(cfg);
    const FieldSpec field = checked_field(cfg.field);
    check_caps(p, cfg.caps());
    auto alg = load_or_build(cfg, p);
    return std::visit(
        [&](const auto& f) {
            const TensorSquare sq(alg, f);
            const BarSpanResult res = bar_span_length(sq, cfg.execution(), cfg.caps());
            if (cfg.json()) {
                nlohmann::ordered_json j;
                j["n"] = p.n;
                j["m"] = p.m;
                j["field"] = f.name();
                j["bar_span_length"] = res.length;
                j["span_dimensions"] = res.dims;
                out << j.dump() << '\n';
            } else {
                out << "bar_span_length: " << res.length << '\n' << "V_k dims:";
                for (auto d : res.dims)
                    out << ' ' << d;
                out << '\n';
            }
            return 0;
        },
        field);
}

int cmd_selftest(const SelftestOptions& opts, std::ostream& out)
{
    bool ok = true;
    for (const SuiteResult& r : run_selftest(opts)) {
        print_suite(out, r);
        ok = ok && r.ok();
    }
    out << (ok ? "selftest: all suites passed" : "selftest: FAILED") << '\n';
    return ok ? 0 : 1;
}

int cmd_export(const Config& cfg, const std::string& path, std::ostream& out)
{
    const Presentation p = checked_presentation(cfg);
    check_caps(p, cfg.caps());
    const std::filesystem::path target = path.empty() ? default_cache_path(p) : std::filesystem::path(path);
    const ArnoldAlgebra alg(p);
    if (target == "-") {
        out << export_algebra_text(alg);
        return 0;
    }
    write_algebra_file(alg, target);
    out << "wrote " << alg.size() << " basis monomials to " << target.string() << '\n';
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certified bounds for the topological complexity of configuration spaces F(R^m, n)"};
    app.require_subcommand(1);
    Config cfg;

    auto* report = app.add_subcommand("report", "bounds report for one (m, n)");
    add_common(report, cfg);
    report->add_option("--field", cfg.field, "q or zp:P");
    report->add_option("--cache", cfg.cache_path, "structure-constant cache to load");
    report->add_flag("--serial", cfg.serial, "use the serial reference kernels");

    std::string m_range, n_range;
    auto* grid = app.add_subcommand("grid", "bounds reports over ranges of m and n");
    grid->add_option("--m", m_range, "range a..b")->required();
    grid->add_option("--n", n_range, "range a..b")->required();
    grid->add_option("--field", cfg.field, "q or zp:P");
    grid->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    grid->add_option("--max-n", cfg.max_n, "resource cap on n");
    grid->add_option("--max-m", cfg.max_m, "resource cap on m");
    grid->add_flag("--serial", cfg.serial, "evaluate cells serially");

    std::optional<int> k;
    auto* basis_cmd = app.add_subcommand("basis", "admissible monomial basis");
    add_common(basis_cmd, cfg, false);
    basis_cmd->add_option("--k", k, "factor count (default: all)");

    std::string a_text, b_text;
    auto* mult = app.add_subcommand("multiply", "normal form of a product");
    add_common(mult, cfg);
    mult->add_option("--a", a_text, "left factor, e.g. \"e12 + e13\"")->required();
    mult->add_option("--b", b_text, "right factor")->required();
    mult->add_option("--field", cfg.field, "z (default), q or zp:P");
    mult->add_option("--cache", cfg.cache_path, "structure-constant cache to load");

    auto* zcl = app.add_subcommand("zcl", "zero-divisor cup-length");
    add_common(zcl, cfg);
    zcl->add_option("--field", cfg.field, "q or zp:P");
    zcl->add_option("--cache", cfg.cache_path, "structure-constant cache to load");
    zcl->add_flag("--serial", cfg.serial, "use the serial reference kernels");

    auto* barspan = app.add_subcommand("barspan", "length of nonzero products of generator bar classes");
    add_common(barspan, cfg);
    barspan->add_option("--field", cfg.field, "q or zp:P");
    barspan->add_option("--cache", cfg.cache_path, "structure-constant cache to load");
    barspan->add_flag("--serial", cfg.serial, "use the serial reference kernels");

    SelftestOptions st;
    std::string st_cache;
    auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
    selftest->add_option("--seed", st.seed, "fuzzing seed");
    selftest->add_option("--max-n", st.max_n, "largest n fuzzed");
    selftest->add_option("--triples", st.triples, "associativity triples per (n, m)");
    selftest->add_option("--shuffles", st.shuffles, "rewrite orders per word");
    selftest->add_option("--cache", st_cache, "cache file to verify in full");
    selftest->add_option("--n", st.cache_n, "n of the cache file");
    selftest->add_option("--m", st.cache_m, "m of the cache file");

    std::string export_path;
    auto* exp = app.add_subcommand("export-algebra", "write the structure-constant document");
    add_common(exp, cfg);
    exp->add_option("--out", export_path, "output path, '-' for stdout (default: $TC_CACHE_DIR)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : code(ExitStatus::UsageError);
    }
    if (cfg.n > 0 && cfg.m == 0 && basis_cmd->parsed())
        cfg.m = 2;

    try {
        if (report->parsed())
            return cmd_report(cfg, out, err);
        if (grid->parsed())
            return cmd_grid(cfg, m_range, n_range, out, err);
        if (basis_cmd->parsed())
            return cmd_basis(cfg, k, out);
        if (mult->parsed()) {
            if (!mult->count("--field"))
                cfg.field = "z";
            return cmd_multiply(cfg, a_text, b_text, out);
        }
        if (zcl->parsed())
            return cmd_zcl(cfg, out, err);
        if (barspan->parsed())
            return cmd_barspan(cfg, out);
        if (selftest->parsed()) {
            if (!st_cache.empty()) {
                if (st.cache_n < 1 || st.cache_m < 2)
                    throw UsageError("selftest --cache needs --n and --m of the cached presentation");
                st.cache_path = st_cache;
            }
            return cmd_selftest(st, out);
        }
        if (exp->parsed())
            return cmd_export(cfg, export_path, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return code(ExitStatus::UsageError);
    } catch (const CapExceeded& e) {
        err << "not computed: " << e.what() << '\n';
        return code(ExitStatus::CapExceeded);
    } catch (const CacheError& e) {
        err << "cache rejected: " << e.what() << '\n';
        return code(ExitStatus::UsageError);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return code(ExitStatus::UsageError);
    }
    return code(ExitStatus::UsageError);
}

} // namespace tc
