#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tc {

// Generator e_{ij} of H^{m-1}(F(R^m, n)), 1 <= i < j <= n.
struct Edge {
    int i = 0;
    int j = 0;

    auto operator<=>(const Edge&) const = default;
};

// Canonical factor order: by upper index, then lower index.
inline bool canonical_less(const Edge& a, const Edge& b)
{
    return a.j != b.j ? a.j < b.j : a.i < b.i;
}

std::string to_string(const Edge& e);

using Word = std::vector<Edge>;

// Ordered product of generators. Admissible iff the upper indices strictly
// increase along the list.
struct Monomial {
    Word factors;

    std::size_t size() const { return factors.size(); }
    bool is_admissible() const;
    std::string to_string() const;

    bool operator==(const Monomial&) const = default;
    // Basis order: by factor count, then lexicographically on (j, i) pairs.
    bool operator<(const Monomial& other) const;
};

struct Presentation {
    int n = 1;
    int m = 2;

    int generator_degree() const { return m - 1; }
    // 1 when generators anticommute.
    int parity() const { return (m - 1) % 2; }
    // Highest factor count with nonzero cohomology.
    int top_factor_count() const { return n - 1; }
    std::vector<Edge> generators() const;

    bool operator==(const Presentation&) const = default;
};

Presentation build_presentation(int n, int m);

using IntegralCombination = std::map<Monomial, mpz_class>;

// Normal form of a generator word over Z: a combination of admissible
// monomials. Rejects edges with i >= j or i < 1.
IntegralCombination straighten(const Word& word, int parity);

// Same normal form, reached by applying the rewrite rules (repeat => 0,
// adjacent swap with sign, shared-upper-index rewrite) at randomly chosen
// redexes. Used to exercise confluence.
IntegralCombination straighten_randomized(const Word& word, int parity, std::mt19937_64& rng);

// Admissible monomials with k factors, in basis order.
std::vector<Monomial> basis(const Presentation& p, int k);

// Coefficients of prod_{i=1}^{n-1} (1 + i t).
std::vector<mpz_class> poincare_polynomial(int n);

// Ranks per factor count by counting basis(); throws std::logic_error if
// the count disagrees with poincare_polynomial().
std::vector<mpz_class> poincare_table(int n);

// Sparse structure-constant row: basis index -> integer coefficient.
using SparseIntRow = std::vector<std::pair<std::size_t, mpz_class>>;

// Integral cohomology algebra of F(R^m, n) in the admissible basis. Products
// of basis elements are computed on first use and cached; the cache is safe to
// read concurrently, and freeze() fills it eagerly.
class ArnoldAlgebra {
public:
    explicit ArnoldAlgebra(Presentation p);

    // Builds an algebra whose product table is supplied externally (cache
    // load). The table is indexed [i * size() + j].
    static std::shared_ptr<ArnoldAlgebra> with_table(Presentation p, std::vector<SparseIntRow> table);

    const Presentation& presentation() const { return pres_; }
    std::size_t size() const { return monomials_.size(); }
    std::size_t rank(int k) const;
    // First global index of factor count k; offset(top + 1) == size().
    std::size_t offset(int k) const { return offsets_.at(static_cast<std::size_t>(k)); }
    int factor_count(std::size_t index) const { return factor_counts_.at(index); }
    int degree(std::size_t index) const { return factor_count(index) * pres_.generator_degree(); }
    const Monomial& monomial(std::size_t index) const { return monomials_.at(index); }
    std::optional<std::size_t> index_of(const Monomial& mono) const;
    std::optional<std::size_t> generator_index(Edge e) const;

    // Structure constants of basis(i) * basis(j).
    const SparseIntRow& product(std::size_t i, std::size_t j) const;

    // Straighten a word and express it in global basis indices.
    SparseIntRow reduce_word(const Word& word) const;

    void freeze() const;

private:
    SparseIntRow compute_product(std::size_t i, std::size_t j) const;

    Presentation pres_;
    std::vector<Monomial> monomials_;
    std::vector<int> factor_counts_;
    std::vector<std::size_t> offsets_;
    std::map<Monomial, std::size_t> index_;

    mutable std::vector<SparseIntRow> table_;
    mutable std::unique_ptr<std::once_flag[]> computed_;
};

// True iff the (n, m_even) structure constants agree with the (n, 2) ones
// under degree scaling k -> (m_even - 1) k. Throws for odd m_even.
bool stability_check(int n, int m_even);

} // namespace tc
