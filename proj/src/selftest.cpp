#include "tc/selftest.hpp"

#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "tc/algebra_element.hpp"
#include "tc/algebra_io.hpp"
#include "tc/span_kernels.hpp"
#include "tc/tensor_square.hpp"
#include "tc/zero_divisors.hpp"

namespace tc {

namespace {

constexpr std::size_t max_recorded_failures = 5;

void record(SuiteResult& r, bool ok, const std::function<std::string()>& describe)
{
    if (ok) {
        ++r.passed;
        return;
    }
    ++r.failed;
    if (r.failures.size() < max_recorded_failures)
        r.failures.push_back(describe());
}

template <class Ring>
AlgebraElement<Ring> random_homogeneous(const std::shared_ptr<const ArnoldAlgebra>& alg, const Ring& ring,
    std::mt19937_64& rng, int k)
{
    AlgebraElement<Ring> out(alg, ring);
    if (alg->rank(k) == 0)
        return out;
    std::uniform_int_distribution<std::size_t> pick(alg->offset(k), alg->offset(k + 1) - 1);
    std::uniform_int_distribution<int> terms(1, 3), coeff(-3, 3);
    for (int t = terms(rng); t > 0; --t)
        out.add_term(pick(rng), ring.from_integer(coeff(rng)));
    return out;
}

template <class Ring>
TensorElement<Ring> random_tensor(const std::shared_ptr<const ArnoldAlgebra>& alg, const Ring& ring, std::mt19937_64& rng,
    int total)
{
    TensorElement<Ring> out(alg, ring);
    const int top = alg->presentation().top_factor_count();
    const int lo = std::max(0, total - top), hi = std::min(total, top);
    if (lo > hi)
        return out;
    std::uniform_int_distribution<int> split(lo, hi), terms(1, 3), coeff(-3, 3);
    for (int t = terms(rng); t > 0; --t) {
        const int ka = split(rng), kb = total - ka;
        std::uniform_int_distribution<std::size_t> pa(alg->offset(ka), alg->offset(ka + 1) - 1);
        std::uniform_int_distribution<std::size_t> pb(alg->offset(kb), alg->offset(kb + 1) - 1);
        out.add_term({pa(rng), pb(rng)}, ring.from_integer(coeff(rng)));
    }
    return out;
}

// Greedily drops terms from the elements while the failure persists.
template <class El>
void shrink(std::vector<El>& els, const std::function<bool(const std::vector<El>&)>& fails)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < els.size(); ++i) {
            const auto terms = els[i].terms();
            for (const auto& [key, c] : terms) {
                std::vector<El> trial = els;
                trial[i].add_term(key, trial[i].ring().neg(c));
                if (fails(trial)) {
                    els = std::move(trial);
                    changed = true;
                    break;
                }
            }
        }
    }
}

template <class El>
std::string describe(const std::string& header, const std::vector<El>& els)
{
    std::ostringstream out;
    out << header;
    for (std::size_t i = 0; i < els.size(); ++i)
        out << (i ? ", " : " ") << "[" << els[i].to_string() << "]";
    return out.str();
}

std::string describe_word(const Word& w, int parity)
{
    std::string out = "word";
    for (const Edge& e : w)
        out += " " + to_string(e);
    return out + " (parity " + std::to_string(parity) + ")";
}

int sign_exponent(const Presentation& p, int ka, int kb)
{
    return koszul_negative(p, ka, kb) ? 1 : 0;
}

} // namespace

SuiteResult suite_ranks(const SelftestOptions& opts)
{
    SuiteResult r;
    r.name = "ranks";
    for (int n = 1; n <= opts.max_rank_n; ++n) {
        bool ok = true;
        std::string why;
        try {
            const auto table = poincare_table(n);
            mpz_class total = 0, factorial = 1;
            for (const auto& c : table)
                total += c;
            for (int i = 2; i <= n; ++i)
                factorial *= i;
            if (total != factorial) {
                ok = false;
                why = "total rank " + total.get_str() + " != n! = " + factorial.get_str();
            }
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        record(r, ok, [&] { return "n=" + std::to_string(n) + ": " + why; });
    }
    return r;
}

SuiteResult suite_associativity(const SelftestOptions& opts)
{
    SuiteResult r;
    r.name = "associativity";
    std::mt19937_64 rng(opts.seed);
    const Integers ring;
    for (int n = 1; n <= opts.max_n; ++n)
        for (int m : opts.ms) {
            auto alg = std::make_shared<const ArnoldAlgebra>(build_presentation(n, m));
            std::uniform_int_distribution<int> k(0, alg->presentation().top_factor_count());
            using El = AlgebraElement<Integers>;
            const std::function<bool(const std::vector<El>&)> fails = [](const std::vector<El>& v) {
                return !((v[0] * v[1]) * v[2] == v[0] * (v[1] * v[2]));
            };
            for (int t = 0; t < opts.triples; ++t) {
                std::vector<El> els{random_homogeneous(alg, ring, rng, k(rng)), random_homogeneous(alg, ring, rng, k(rng)),
                    random_homogeneous(alg, ring, rng, k(rng))};
                const bool bad = fails(els);
                record(r, !bad, [&] {
                    shrink(els, fails);
                    return describe("n=" + std::to_string(n) + " m=" + std::to_string(m) + " (ab)c != a(bc) for", els);
                });
            }
        }
    return r;
}

SuiteResult suite_commutativity(const SelftestOptions& opts)
{
    SuiteResult r;
    r.name = "graded-commutativity";
    std::mt19937_64 rng(opts.seed + 1);
    const Integers ring;
    for (int n = 1; n <= opts.max_n; ++n)
        for (int m : opts.ms) {
            auto alg = std::make_shared<const ArnoldAlgebra>(build_presentation(n, m));
            const Presentation& p = alg->presentation();
            std::uniform_int_distribution<int> k(0, p.top_factor_count());
            using El = AlgebraElement<Integers>;
            for (int t = 0; t < opts.pairs; ++t) {
                const int ka = k(rng), kb = k(rng);
                const std::function<bool(const std::vector<El>&)> fails = [&](const std::vector<El>& v) {
                    El rhs = v[1] * v[0];
                    if (sign_exponent(p, ka, kb))
                        rhs = rhs.scaled(-1);
                    return !(v[0] * v[1] == rhs);
                };
                std::vector<El> els{random_homogeneous(alg, ring, rng, ka), random_homogeneous(alg, ring, rng, kb)};
                const bool bad = fails(els);
                record(r, !bad, [&] {
                    shrink(els, fails);
                    return describe("n=" + std::to_string(n) + " m=" + std::to_string(m) + " ab != (-1)^{|a||b|} ba for", els);
                });
            }
        }
    return r;
}

SuiteResult suite_confluence(const SelftestOptions& opts)
{
    SuiteResult r;
    r.name = "confluence";
    std::mt19937_64 rng(opts.seed + 2);
    for (int n = 2; n <= opts.max_n; ++n) {
        const auto gens = build_presentation(n, 2).generators();
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        std::uniform_int_distribution<int> len(2, n + 1);
        for (int w = 0; w < opts.words_per_n; ++w) {
            Word word;
            for (int l = len(rng); l > 0; --l)
                word.push_back(gens[pick(rng)]);
            for (int parity : {0, 1}) {
                const auto reference = straighten(word, parity);
                for (int s = 0; s < opts.shuffles; ++s) {
                    std::mt19937_64 order(rng());
                    const bool ok = straighten_randomized(word, parity, order) == reference;
                    record(r, ok, [&] {
                        Word small = word;
                        for (std::size_t drop = 0; drop < small.size();) {
                            Word trial = small;
                            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(drop));
                            std::mt19937_64 retry(opts.seed);
                            bool still_bad = false;
                            for (int t = 0; t < opts.shuffles && !still_bad; ++t)
                                still_bad = straighten_randomized(trial, parity, retry) != straighten(trial, parity);
                            if (still_bad)
                                small = std::move(trial);
                            else
                                ++drop;
                        }
                        return "non-confluent " + describe_word(small, parity);
                    });
                }
            }
        }
    }
    return r;
}

SuiteResult suite_diagonal_homomorphism(const SelftestOptions& opts)
{
    SuiteResult r;
    r.name = "diagonal-homomorphism";
    std::mt19937_64 rng(opts.seed + 3);
    const Rationals field;
    for (int n = 1; n <= opts.max_n; ++n)
        for (int m : opts.ms) {
            auto alg = std::make_shared<const ArnoldAlgebra>(build_presentation(n, m));
            const int top = alg->presentation().top_factor_count();
            std::uniform_int_distribution<int> total(0, 2 * top), k(0, top);
            using El = TensorElement<Rationals>;
            const std::function<bool(const std::vector<El>&)> fails = [](const std::vector<El>& v) {
                return !(diagonal_restriction(v[0] * v[1]) == diagonal_restriction(v[0]) * diagonal_restriction(v[1]));
            };
            for (int t = 0; t < opts.pairs / 4; ++t) {
                std::vector<El> els{random_tensor(alg, field, rng, total(rng)), random_tensor(alg, field, rng, total(rng))};
                const bool bad = fails(els);
                record(r, !bad, [&] {
                    shrink(els, fails);
                    return describe("n=" + std::to_string(n) + " m=" + std::to_string(m) + " D(xy) != D(x)D(y) for", els);
                });
                const int kv = k(rng);
                const auto v = random_homogeneous(alg, field, rng, kv);
                const auto w = random_homogeneous(alg, field, rng, kv);
                record(r, diagonal_restriction(bar(v)).is_zero(), [&] { return "D(bar(v)) != 0 for v=" + v.to_string(); });
                record(r, bar(v + w) == bar(v) + bar(w),
                    [&] { return "bar not additive for v=" + v.to_string() + ", w=" + w.to_string(); });
            }
        }
    return r;
}

SuiteResult suite_koszul_involution(const SelftestOptions& opts)
{
    SuiteResult r;
    r.name = "koszul-involution";
    std::mt19937_64 rng(opts.seed + 4);
    const Rationals field;
    for (int n = 1; n <= opts.max_n; ++n)
        for (int m : opts.ms) {
            auto alg = std::make_shared<const ArnoldAlgebra>(build_presentation(n, m));
            const Presentation& p = alg->presentation();
            std::uniform_int_distribution<int> total(0, 2 * p.top_factor_count());
            using El = TensorElement<Rationals>;
            for (int t = 0; t < opts.pairs / 4; ++t) {
                const int tx = total(rng), ty = total(rng);
                const std::function<bool(const std::vector<El>&)> fails = [&](const std::vector<El>& v) {
                    const El lhs = koszul_swap(v[0] * v[1]);
                    El reversed = koszul_swap(v[1]) * koszul_swap(v[0]);
                    if (sign_exponent(p, tx, ty))
                        reversed = reversed.scaled(-1);
                    return !(lhs == koszul_swap(v[0]) * koszul_swap(v[1])) || !(lhs == reversed);
                };
                std::vector<El> els{random_tensor(alg, field, rng, tx), random_tensor(alg, field, rng, ty)};
                const bool bad = fails(els);
                record(r, !bad, [&] {
                    shrink(els, fails);
                    return describe("n=" + std::to_string(n) + " m=" + std::to_string(m) + " swap is not multiplicative for", els);
                });
            }
        }
    return r;
}

SuiteResult suite_stability(const SelftestOptions& opts)
{
    SuiteResult r;
    r.name = "stability";
    for (int n = 1; n <= opts.max_n; ++n)
        for (int m : {4, 6})
            record(r, stability_check(n, m), [&] {
                return "structure constants of (n=" + std::to_string(n) + ", m=" + std::to_string(m)
                    + ") differ from (n, 2) after degree scaling";
            });
    return r;
}

namespace {

template <class Field>
void compare_kernels(SuiteResult& r, const std::shared_ptr<const ArnoldAlgebra>& alg, const Field& field)
{
    const TensorSquare<Field> sq(alg, field);
    const std::string where = "n=" + std::to_string(alg->presentation().n) + " m=" + std::to_string(alg->presentation().m)
        + " over " + field.name();
    CuplengthOptions reference{Execution::Serial, PowerMethod::FullProducts, {}};
    const CuplengthResult base = zero_divisor_cuplength(sq, reference);
    for (auto exec : {Execution::Serial, Execution::Parallel})
        for (auto method : {PowerMethod::FullProducts, PowerMethod::GeneratorBars}) {
            const CuplengthResult other = zero_divisor_cuplength(sq, CuplengthOptions{exec, method, {}});
            record(r, other.length == base.length && other.dims == base.dims,
                [&] { return "cup-length variants disagree " + where; });
        }
    const auto serial = bar_span_length(sq, Execution::Serial);
    const auto parallel = bar_span_length(sq, Execution::Parallel);
    record(r, serial.length == parallel.length && serial.dims == parallel.dims,
        [&] { return "bar span serial/parallel disagree " + where; });
}

} // namespace

SuiteResult suite_kernels(const SelftestOptions& opts)
{
    SuiteResult r;
    r.name = "kernels";
    for (int n = 1; n <= std::min(opts.max_n, 3); ++n)
        for (int m : {2, 3}) {
            auto alg = std::make_shared<const ArnoldAlgebra>(build_presentation(n, m));
            compare_kernels(r, alg, Rationals{});
            compare_kernels(r, alg, PrimeField(3));
        }
    // Serial and OpenMP product spans must produce the same reduced basis.
    if (opts.max_n >= 4) {
        std::mt19937_64 rng(opts.seed + 5);
        for (int m : {2, 3}) {
            auto alg = std::make_shared<const ArnoldAlgebra>(build_presentation(4, m));
            const TensorSquare<Rationals> sq(alg, Rationals{});
            const auto z2 = dense_rows(zero_divisor_subspace(sq, 2));
            const auto z1 = dense_rows(zero_divisor_subspace(sq, 1));
            record(r, product_span_serial(sq, 2, z2, 1, z1) == product_span_parallel(sq, 2, z2, 1, z1),
                [&] { return "serial/parallel product spans differ at n=4 m=" + std::to_string(m); });
        }
    }
    return r;
}

SuiteResult suite_cache(const SelftestOptions& opts)
{
    SuiteResult r;
    r.name = "cache";
    if (!opts.cache_path)
        return r;
    std::string why;
    bool ok = true;
    try {
        LoadOptions lo;
        lo.verify_all = true;
        (void)load_algebra_file(*opts.cache_path, build_presentation(opts.cache_n, opts.cache_m), lo);
    } catch (const std::exception& e) {
        ok = false;
        why = e.what();
    }
    record(r, ok, [&] { return opts.cache_path->string() + ": " + why; });
    return r;
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts)
{
    return {suite_ranks(opts), suite_associativity(opts), suite_commutativity(opts), suite_confluence(opts),
        suite_diagonal_homomorphism(opts), suite_koszul_involution(opts), suite_stability(opts), suite_kernels(opts),
        suite_cache(opts)};
}

void print_suite(std::ostream& out, const SuiteResult& r)
{
    out << "suite " << r.name << ": " << r.passed << "/" << (r.passed + r.failed) << " passed"
        << (r.ok() ? "" : "  FAILED") << '\n';
    for (const auto& f : r.failures)
        out << "  failing case: " << f << '\n';
}

} // namespace tc
