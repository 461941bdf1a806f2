#include "tc/report_io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tc {

namespace {

nlohmann::ordered_json optional_int(const std::optional<int>& v)
{
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::optional<int> read_optional_int(const nlohmann::json& j, const char* key)
{
    const auto& v = j.at(key);
    if (v.is_null())
        return std::nullopt;
    return v.get<int>();
}

std::string show(const std::optional<int>& v)
{
    return v ? std::to_string(*v) : "unknown";
}

} // namespace

nlohmann::ordered_json report_to_json(const BoundsReport& rep)
{
    nlohmann::ordered_json j;
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["lower"] = optional_int(rep.lower);
    j["upper"] = optional_int(rep.upper);
    j["closed_form"] = rep.closed_form;
    j["pinched"] = rep.pinched;
    j["status"] = to_string(rep.status);
    j["field"] = rep.field;
    j["lower_source"] = rep.lower_source;
    j["upper_source"] = rep.upper_source;
    auto diags = nlohmann::ordered_json::array();
    for (const Diagnostic& d : rep.diagnostics)
        diags.push_back({{"tag", d.tag}, {"value", d.value}, {"note", d.note}});
    j["diagnostics"] = std::move(diags);
    j["warnings"] = rep.warnings;
    j["schema_version"] = report_schema_version;
    return j;
}

BoundsReport report_from_json(const nlohmann::json& j)
{
    if (j.at("schema_version").get<int>() != report_schema_version)
        throw std::invalid_argument("unsupported report schema version " + j.at("schema_version").dump());
    BoundsReport rep;
    rep.m = j.at("m").get<int>();
    rep.n = j.at("n").get<int>();
    rep.lower = read_optional_int(j, "lower");
    rep.upper = read_optional_int(j, "upper");
    rep.closed_form = j.at("closed_form").get<int>();
    rep.pinched = j.at("pinched").get<bool>();
    rep.status = report_status_from_string(j.at("status").get<std::string>());
    rep.field = j.at("field").get<std::string>();
    rep.lower_source = j.at("lower_source").get<std::string>();
    rep.upper_source = j.at("upper_source").get<std::string>();
    for (const auto& d : j.at("diagnostics"))
        rep.diagnostics.push_back(
            {d.at("tag").get<std::string>(), d.at("value").get<std::int64_t>(), d.at("note").get<std::string>()});
    rep.warnings = j.at("warnings").get<std::vector<std::string>>();
    return rep;
}

std::string report_to_text(const BoundsReport& rep)
{
    std::ostringstream out;
    out << "m: " << rep.m << '\n'
        << "n: " << rep.n << '\n'
        << "field: " << rep.field << '\n'
        << "lower: " << show(rep.lower) << '\n'
        << "lower_source: " << rep.lower_source << '\n'
        << "upper: " << show(rep.upper) << '\n'
        << "upper_source: " << rep.upper_source << '\n'
        << "closed_form: " << rep.closed_form << '\n'
        << "pinched: " << (rep.pinched ? "true" : "false") << '\n'
        << "status: " << to_string(rep.status) << '\n';
    for (const Diagnostic& d : rep.diagnostics)
        out << "diagnostic: " << d.tag << " = " << d.value << (d.note.empty() ? "" : " (" + d.note + ")") << '\n';
    for (const std::string& w : rep.warnings)
        out << "warning: " << w << '\n';
    return out.str();
}

std::string report_table_header()
{
    std::ostringstream out;
    out << std::left << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(8) << "lower" << std::setw(8) << "upper"
        << std::setw(8) << "closed" << "status";
    return out.str();
}

std::string report_table_row(const BoundsReport& rep)
{
    std::ostringstream out;
    out << std::left << std::setw(4) << rep.m << std::setw(4) << rep.n << std::setw(8) << show(rep.lower) << std::setw(8)
        << show(rep.upper) << std::setw(8) << rep.closed_form << to_string(rep.status);
    return out.str();
}

} // namespace tc
