#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tc {

struct SelftestOptions {
    std::uint64_t seed = 20061;
    int max_n = 4;
    // Ambient dimensions fuzzed for the ring laws; both parities by default.
    std::vector<int> ms{2, 3, 4, 5};
    int triples = 1000;
    int pairs = 1000;
    int words_per_n = 20;
    int shuffles = 100;
    int max_rank_n = 5;
    // Cached structure constants to verify in full (with its presentation).
    std::optional<std::filesystem::path> cache_path;
    int cache_n = 0;
    int cache_m = 0;
};

struct SuiteResult {
    std::string name;
    long passed = 0;
    long failed = 0;
    // Minimized description of the first failures.
    std::vector<std::string> failures;

    bool ok() const { return failed == 0; }
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts);

// Individual suites, exposed for the test binaries.
SuiteResult suite_ranks(const SelftestOptions& opts);
SuiteResult suite_associativity(const SelftestOptions& opts);
SuiteResult suite_commutativity(const SelftestOptions& opts);
SuiteResult suite_confluence(const SelftestOptions& opts);
SuiteResult suite_diagonal_homomorphism(const SelftestOptions& opts);
SuiteResult suite_koszul_involution(const SelftestOptions& opts);
SuiteResult suite_stability(const SelftestOptions& opts);
SuiteResult suite_kernels(const SelftestOptions& opts);
SuiteResult suite_cache(const SelftestOptions& opts);

void print_suite(std::ostream& out, const SuiteResult& r);

} // namespace tc
