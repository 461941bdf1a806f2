#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tc/arnold_algebra.hpp"

namespace tc {

constexpr int algebra_schema_version = 1;

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Versioned structure-constant document:
// {schema_version, n, m, generator_degree, basis: [[[i,j],...],...],
//  products: [[i, j, [[k, "coeff"], ...]], ...], checksum}
// Only nonzero products are listed; coefficients are decimal strings.
nlohmann::ordered_json export_algebra(const ArnoldAlgebra& alg);
std::string export_algebra_text(const ArnoldAlgebra& alg);

// FNV-1a over the key-sorted compact dump of the document minus "checksum".
std::string algebra_checksum(const nlohmann::json& doc);

struct LoadOptions {
    // Products re-derived by straightening and compared; ignored when
    // verify_all is set.
    int sample_count = 100;
    bool verify_all = false;
    std::uint64_t seed = 0x5eed;
};

// Parses and validates a document for the expected presentation. Throws
// CacheError on schema, key, checksum, or re-verification failure.
std::shared_ptr<ArnoldAlgebra> load_algebra(const nlohmann::json& doc, const Presentation& expected, const LoadOptions& opts = {});
std::shared_ptr<ArnoldAlgebra> load_algebra_file(const std::filesystem::path& path, const Presentation& expected,
    const LoadOptions& opts = {});

void write_algebra_file(const ArnoldAlgebra& alg, const std::filesystem::path& path);

// First product whose cached structure constants differ from a fresh
// straightening, as "i*j" text; nullopt when everything checked agrees.
std::optional<std::string> verify_products(const ArnoldAlgebra& alg, int sample_count, bool verify_all, std::uint64_t seed);

// $TC_CACHE_DIR/arnold_n<N>_m<M>.json, or the working directory when unset.
std::filesystem::path default_cache_path(const Presentation& p);

} // namespace tc
