#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tc/algebra_io.hpp"
#include "tc/report_io.hpp"
#include "tc/selftest.hpp"

using namespace tc;

namespace {

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "tc_test_io";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("report JSON round trip")
{
    for (const auto& rep : {assemble_report(4, 3, Rationals{}), assemble_report(3, 2, PrimeField(2))}) {
        const auto j = report_to_json(rep);
        CHECK(report_from_json(nlohmann::json::parse(j.dump())) == rep);
        CHECK(j.at("schema_version") == report_schema_version);
        CHECK(j.begin().key() == "m");
    }
    ReportOptions capped;
    capped.caps.max_n = 2;
    const BoundsReport rep = assemble_report(3, 3, Rationals{}, capped);
    const auto j = report_to_json(rep);
    CHECK(j.at("lower").is_null());
    CHECK(j.at("status") == "cap-exceeded");
    CHECK(report_from_json(j) == rep);

    auto bad = nlohmann::json::parse(j.dump());
    bad["schema_version"] = 99;
    CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
}

TEST_CASE("report text")
{
    const std::string text = report_to_text(assemble_report(4, 3, Rationals{}));
    CHECK(text.rfind("m: 4\nn: 3\nfield: Q\nlower: 4\n", 0) == 0);
    CHECK(text.find("status: pinched\n") != std::string::npos);
    CHECK(text.find("diagnostic: bar_span_length = 3 (over Q)\n") != std::string::npos);
    CHECK(report_table_row(assemble_report(2, 2, Rationals{})).find("pinched") != std::string::npos);
}

TEST_CASE("algebra export round trip")
{
    const ArnoldAlgebra alg(build_presentation(3, 2));
    const std::string text = export_algebra_text(alg);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc.at("schema_version") == algebra_schema_version);
    CHECK(doc.at("basis").size() == 6);
    CHECK(doc.at("checksum") == algebra_checksum(doc));

    const auto loaded = load_algebra(doc, build_presentation(3, 2), {0, true, 1});
    CHECK(export_algebra_text(*loaded) == text);
    for (std::size_t a = 0; a < alg.size(); ++a)
        for (std::size_t b = 0; b < alg.size(); ++b)
            CHECK(loaded->product(a, b) == alg.product(a, b));

    const auto path = scratch("n3_m2.json");
    write_algebra_file(alg, path);
    CHECK(slurp(path) == text);
    CHECK(export_algebra_text(*load_algebra_file(path, build_presentation(3, 2))) == text);

    CHECK(nlohmann::json::parse(export_algebra_text(ArnoldAlgebra(build_presentation(4, 3)))).at("basis").size() == 24);
}

TEST_CASE("cache documents are validated")
{
    const ArnoldAlgebra alg(build_presentation(3, 2));
    const auto doc = nlohmann::json::parse(export_algebra_text(alg));

    // Wrong presentation key.
    CHECK_THROWS_AS(load_algebra(doc, build_presentation(3, 4)), CacheError);
    CHECK_THROWS_AS(load_algebra(doc, build_presentation(4, 2)), CacheError);

    auto schema = doc;
    schema["schema_version"] = 2;
    CHECK_THROWS_AS(load_algebra(schema, build_presentation(3, 2)), CacheError);

    auto corrupted = doc;
    corrupted["products"][0][2][0][1] = "7";
    CHECK_THROWS_AS(load_algebra(corrupted, build_presentation(3, 2)), CacheError);

    // Tampered coefficient with a matching checksum: only re-verification catches it.
    auto forged = corrupted;
    forged["checksum"] = algebra_checksum(forged);
    CHECK_THROWS_AS(load_algebra(forged, build_presentation(3, 2), {0, true, 1}), CacheError);

    const auto path = scratch("forged.json");
    std::ofstream(path) << forged.dump(1) << '\n';
    SelftestOptions opts;
    opts.cache_path = path;
    opts.cache_n = 3;
    opts.cache_m = 2;
    CHECK_FALSE(suite_cache(opts).ok());

    const auto good = scratch("good.json");
    write_algebra_file(alg, good);
    opts.cache_path = good;
    CHECK(suite_cache(opts).ok());

    CHECK_THROWS_AS(load_algebra_file(scratch("missing.json"), build_presentation(3, 2)), CacheError);
    std::ofstream(scratch("garbage.json")) << "{not json";
    CHECK_THROWS_AS(load_algebra_file(scratch("garbage.json"), build_presentation(3, 2)), CacheError);
}

TEST_CASE("sampled verification")
{
    const ArnoldAlgebra alg(build_presentation(4, 3));
    CHECK_FALSE(verify_products(alg, 50, false, 3).has_value());
    CHECK_FALSE(verify_products(alg, 0, true, 3).has_value());
}

TEST_CASE("default cache path")
{
    const auto p = build_presentation(4, 3);
    CHECK(default_cache_path(p).filename() == "arnold_n4_m3.json");
}
