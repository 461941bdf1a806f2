#include "tc/algebra_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace tc {

namespace {

nlohmann::ordered_json monomial_json(const Monomial& mono)
{
    auto out = nlohmann::ordered_json::array();
    for (const Edge& e : mono.factors)
        out.push_back({e.i, e.j});
    return out;
}

Monomial monomial_from_json(const nlohmann::json& j)
{
    Monomial mono;
    for (const auto& edge : j)
        mono.factors.push_back({edge.at(0).get<int>(), edge.at(1).get<int>()});
    return mono;
}

std::string fnv1a(const std::string& data)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

std::string algebra_checksum(const nlohmann::json& doc)
{
    nlohmann::json body = doc;
    body.erase("checksum");
    return fnv1a(body.dump());
}

nlohmann::ordered_json export_algebra(const ArnoldAlgebra& alg)
{
    alg.freeze();
    const Presentation& p = alg.presentation();
    nlohmann::ordered_json doc;
    doc["schema_version"] = algebra_schema_version;
    doc["n"] = p.n;
    doc["m"] = p.m;
    doc["generator_degree"] = p.generator_degree();
    auto basis_json = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < alg.size(); ++a)
        basis_json.push_back(monomial_json(alg.monomial(a)));
    doc["basis"] = std::move(basis_json);
    auto products = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < alg.size(); ++a)
        for (std::size_t b = 0; b < alg.size(); ++b) {
            const SparseIntRow& row = alg.product(a, b);
            if (row.empty())
                continue;
            auto terms = nlohmann::ordered_json::array();
            for (const auto& [k, c] : row)
                terms.push_back({k, c.get_str()});
            products.push_back({a, b, std::move(terms)});
        }
    doc["products"] = std::move(products);
    doc["checksum"] = algebra_checksum(nlohmann::json(doc));
    return doc;
}

std::string export_algebra_text(const ArnoldAlgebra& alg)
{
    return export_algebra(alg).dump(1) + "\n";
}

std::optional<std::string> verify_products(const ArnoldAlgebra& alg, int sample_count, bool verify_all, std::uint64_t seed)
{
    const ArnoldAlgebra fresh(alg.presentation());
    auto check = [&](std::size_t a, std::size_t b) -> std::optional<std::string> {
        if (alg.product(a, b) != fresh.product(a, b))
            return alg.monomial(a).to_string() + " * " + alg.monomial(b).to_string();
        return std::nullopt;
    };
    const std::size_t n = alg.size();
    if (verify_all) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (auto bad = check(a, b))
                    return bad;
        return std::nullopt;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int s = 0; s < sample_count; ++s)
        if (auto bad = check(pick(rng), pick(rng)))
            return bad;
    return std::nullopt;
}

std::shared_ptr<ArnoldAlgebra> load_algebra(const nlohmann::json& doc, const Presentation& expected, const LoadOptions& opts)
{
    try {
        const int version = doc.at("schema_version").get<int>();
        if (version != algebra_schema_version)
            throw CacheError("cache schema version " + std::to_string(version) + " does not match supported version "
                + std::to_string(algebra_schema_version));
        const int n = doc.at("n").get<int>();
        const int m = doc.at("m").get<int>();
        if (n != expected.n || m != expected.m)
            throw CacheError("cache is keyed (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ") but (n="
                + std::to_string(expected.n) + ", m=" + std::to_string(expected.m) + ") was requested");
        if (doc.at("checksum").get<std::string>() != algebra_checksum(doc))
            throw CacheError("cache checksum mismatch");
        if (doc.at("generator_degree").get<int>() != expected.generator_degree())
            throw CacheError("cache generator degree disagrees with m");

        const ArnoldAlgebra reference(expected);
        const auto& basis_json = doc.at("basis");
        if (basis_json.size() != reference.size())
            throw CacheError("cache basis has " + std::to_string(basis_json.size()) + " monomials, expected "
                + std::to_string(reference.size()));
        for (std::size_t a = 0; a < reference.size(); ++a)
            if (!(monomial_from_json(basis_json[a]) == reference.monomial(a)))
                throw CacheError("cache basis differs at index " + std::to_string(a));

        std::vector<SparseIntRow> table(reference.size() * reference.size());
        for (const auto& entry : doc.at("products")) {
            const auto a = entry.at(0).get<std::size_t>();
            const auto b = entry.at(1).get<std::size_t>();
            if (a >= reference.size() || b >= reference.size())
                throw CacheError("cache product index out of range");
            SparseIntRow row;
            for (const auto& term : entry.at(2))
                row.emplace_back(term.at(0).get<std::size_t>(), mpz_class(term.at(1).get<std::string>()));
            table[a * reference.size() + b] = std::move(row);
        }
        auto alg = ArnoldAlgebra::with_table(expected, std::move(table));
        if (auto bad = verify_products(*alg, opts.sample_count, opts.verify_all, opts.seed))
            throw CacheError("structure-constant mismatch for " + *bad);
        return alg;
    } catch (const CacheError&) {
        throw;
    } catch (const std::exception& e) {
        throw CacheError(std::string("malformed cache document: ") + e.what());
    }
}

std::shared_ptr<ArnoldAlgebra> load_algebra_file(const std::filesystem::path& path, const Presentation& expected,
    const LoadOptions& opts)
{
    std::ifstream in(path);
    if (!in)
        throw CacheError("cannot open cache file " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw CacheError("cache file " + path.string() + " is not valid JSON: " + e.what());
    }
    return load_algebra(doc, expected, opts);
}

void write_algebra_file(const ArnoldAlgebra& alg, const std::filesystem::path& path)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out)
        throw CacheError("cannot write cache file " + path.string());
    out << export_algebra_text(alg);
}

std::filesystem::path default_cache_path(const Presentation& p)
{
    const char* dir = std::getenv("TC_CACHE_DIR");
    std::filesystem::path base = dir && *dir ? std::filesystem::path(dir) : std::filesystem::current_path();
    return base / ("arnold_n" + std::to_string(p.n) + "_m" + std::to_string(p.m) + ".json");
}

} // namespace tc
