#include "tc/arnold_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace tc {

std::string to_string(const Edge& e)
{
    if (e.i < 10 && e.j < 10)
        return "e" + std::to_string(e.i) + std::to_string(e.j);
    return "e" + std::to_string(e.i) + "_" + std::to_string(e.j);
}

bool Monomial::is_admissible() const
{
    for (std::size_t a = 0; a < factors.size(); ++a) {
        if (factors[a].i < 1 || factors[a].i >= factors[a].j)
            return false;
        if (a > 0 && factors[a - 1].j >= factors[a].j)
            return false;
    }
    return true;
}

std::string Monomial::to_string() const
{
    if (factors.empty())
        return "1";
    std::string out;
    for (std::size_t a = 0; a < factors.size(); ++a) {
        if (a)
            out += '*';
        out += tc::to_string(factors[a]);
    }
    return out;
}

bool Monomial::operator<(const Monomial& other) const
{
    if (factors.size() != other.factors.size())
        return factors.size() < other.factors.size();
    return std::lexicographical_compare(factors.begin(), factors.end(),
        other.factors.begin(), other.factors.end(), canonical_less);
}

std::vector<Edge> Presentation::generators() const
{
    std::vector<Edge> gens;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            gens.push_back({i, j});
    return gens;
}

Presentation build_presentation(int n, int m)
{
    if (n < 1)
        throw std::invalid_argument("point count n must be >= 1, got " + std::to_string(n));
    if (m < 2)
        throw std::invalid_argument("ambient dimension m must be >= 2, got " + std::to_string(m));
    return Presentation{n, m};
}

namespace {

void validate_word(const Word& word)
{
    for (const Edge& e : word)
        if (e.i < 1 || e.i >= e.j)
            throw std::invalid_argument("malformed edge " + std::to_string(e.i) + "," + std::to_string(e.j)
                + ": need 1 <= i < j");
}

void accumulate(IntegralCombination& out, const Monomial& mono, const mpz_class& c)
{
    auto [it, inserted] = out.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            out.erase(it);
    }
}

void straighten_into(Word w, mpz_class c, int parity, IntegralCombination& out)
{
    for (;;) {
        // Insertion sort into canonical order; each adjacent swap of distinct
        // generators contributes (-1)^parity.
        bool negate = false;
        for (std::size_t a = 1; a < w.size(); ++a) {
            for (std::size_t b = a; b > 0 && canonical_less(w[b], w[b - 1]); --b) {
                std::swap(w[b], w[b - 1]);
                negate ^= (parity == 1);
            }
        }
        if (negate)
            c = -c;
        std::size_t shared = w.size();
        for (std::size_t b = 0; b + 1 < w.size(); ++b) {
            if (w[b] == w[b + 1])
                return;
            if (shared == w.size() && w[b].j == w[b + 1].j)
                shared = b;
        }
        if (shared == w.size()) {
            accumulate(out, Monomial{std::move(w)}, c);
            return;
        }
        // e_{ij} e_{kj} = e_{ik} e_{kj} - e_{ik} e_{ij}, i < k < j
        const int i = w[shared].i, k = w[shared + 1].i, j = w[shared].j;
        Word second = w;
        second[shared] = {i, k};
        second[shared + 1] = {i, j};
        straighten_into(std::move(second), -c, parity, out);
        w[shared] = {i, k};
        w[shared + 1] = {k, j};
    }
}

} // namespace

IntegralCombination straighten(const Word& word, int parity)
{
    validate_word(word);
    IntegralCombination out;
    straighten_into(word, 1, parity, out);
    return out;
}

IntegralCombination straighten_randomized(const Word& word, int parity, std::mt19937_64& rng)
{
    validate_word(word);
    enum class Rule { Kill, Swap, Shared };
    struct Redex {
        Rule rule;
        std::size_t pos;
    };

    std::vector<std::pair<Word, mpz_class>> pending{{word, 1}};
    IntegralCombination out;
    std::vector<Redex> redexes;
    while (!pending.empty()) {
        std::uniform_int_distribution<std::size_t> pick_term(0, pending.size() - 1);
        std::size_t t = pick_term(rng);
        auto [w, c] = std::move(pending[t]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(t));

        redexes.clear();
        for (std::size_t a = 0; a < w.size(); ++a)
            for (std::size_t b = a + 1; b < w.size(); ++b)
                if (w[a] == w[b])
                    redexes.push_back({Rule::Kill, a});
        for (std::size_t b = 0; b + 1 < w.size(); ++b) {
            if (canonical_less(w[b + 1], w[b]))
                redexes.push_back({Rule::Swap, b});
            else if (w[b].j == w[b + 1].j && w[b].i < w[b + 1].i)
                redexes.push_back({Rule::Shared, b});
        }
        if (redexes.empty()) {
            accumulate(out, Monomial{std::move(w)}, c);
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick_redex(0, redexes.size() - 1);
        const Redex r = redexes[pick_redex(rng)];
        switch (r.rule) {
        case Rule::Kill:
            break;
        case Rule::Swap:
            std::swap(w[r.pos], w[r.pos + 1]);
            if (parity == 1)
                c = -c;
            pending.emplace_back(std::move(w), std::move(c));
            break;
        case Rule::Shared: {
            const int i = w[r.pos].i, k = w[r.pos + 1].i, j = w[r.pos].j;
            Word second = w;
            second[r.pos] = {i, k};
            second[r.pos + 1] = {i, j};
            pending.emplace_back(std::move(second), -c);
            w[r.pos] = {i, k};
            w[r.pos + 1] = {k, j};
            pending.emplace_back(std::move(w), std::move(c));
            break;
        }
        }
    }
    return out;
}

namespace {

void enumerate_basis(int n, int k, int min_upper, Word& prefix, std::vector<Monomial>& out)
{
    if (k == 0) {
        out.push_back(Monomial{prefix});
        return;
    }
    for (int j = min_upper; j <= n - k + 1; ++j) {
        for (int i = 1; i < j; ++i) {
            prefix.push_back({i, j});
            enumerate_basis(n, k - 1, j + 1, prefix, out);
            prefix.pop_back();
        }
    }
}

} // namespace

std::vector<Monomial> basis(const Presentation& p, int k)
{
    if (k < 0)
        throw std::invalid_argument("factor count must be >= 0");
    std::vector<Monomial> out;
    Word prefix;
    enumerate_basis(p.n, k, 2, prefix, out);
    return out;
}

std::vector<mpz_class> poincare_polynomial(int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    std::vector<mpz_class> coeffs{1};
    for (int i = 1; i <= n - 1; ++i) {
        coeffs.push_back(0);
        for (std::size_t a = coeffs.size() - 1; a > 0; --a)
            coeffs[a] += i * coeffs[a - 1];
    }
    return coeffs;
}

std::vector<mpz_class> poincare_table(int n)
{
    const Presentation p = build_presentation(n, 2);
    std::vector<mpz_class> expanded = poincare_polynomial(n);
    std::vector<mpz_class> counted;
    for (int k = 0; k <= p.top_factor_count(); ++k)
        counted.emplace_back(static_cast<unsigned long>(basis(p, k).size()));
    if (counted != expanded)
        throw std::logic_error("basis enumeration disagrees with the Poincare polynomial for n=" + std::to_string(n));
    return counted;
}

ArnoldAlgebra::ArnoldAlgebra(Presentation p) : pres_(build_presentation(p.n, p.m))
{
    for (int k = 0; k <= pres_.top_factor_count(); ++k) {
        offsets_.push_back(monomials_.size());
        for (Monomial& mono : basis(pres_, k)) {
            index_.emplace(mono, monomials_.size());
            monomials_.push_back(std::move(mono));
            factor_counts_.push_back(k);
        }
    }
    offsets_.push_back(monomials_.size());
    table_.resize(size() * size());
    computed_ = std::make_unique<std::once_flag[]>(size() * size());
}

std::shared_ptr<ArnoldAlgebra> ArnoldAlgebra::with_table(Presentation p, std::vector<SparseIntRow> table)
{
    auto alg = std::make_shared<ArnoldAlgebra>(p);
    if (table.size() != alg->size() * alg->size())
        throw std::invalid_argument("structure table has wrong size");
    for (const SparseIntRow& row : table)
        for (const auto& [idx, coeff] : row)
            if (idx >= alg->size() || sgn(coeff) == 0)
                throw std::invalid_argument("structure table entry out of range or zero");
    alg->table_ = std::move(table);
    for (std::size_t a = 0; a < alg->table_.size(); ++a)
        std::call_once(alg->computed_[a], [] {});
    return alg;
}

std::size_t ArnoldAlgebra::rank(int k) const
{
    if (k < 0 || k > pres_.top_factor_count())
        return 0;
    return offset(k + 1) - offset(k);
}

std::optional<std::size_t> ArnoldAlgebra::index_of(const Monomial& mono) const
{
    auto it = index_.find(mono);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> ArnoldAlgebra::generator_index(Edge e) const
{
    return index_of(Monomial{{e}});
}

SparseIntRow ArnoldAlgebra::reduce_word(const Word& word) const
{
    SparseIntRow row;
    for (const auto& [mono, coeff] : straighten(word, pres_.parity())) {
        auto idx = index_of(mono);
        if (!idx)
            throw std::logic_error("straightening produced a monomial outside the basis: " + mono.to_string());
        row.emplace_back(*idx, coeff);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

SparseIntRow ArnoldAlgebra::compute_product(std::size_t i, std::size_t j) const
{
    if (factor_count(i) + factor_count(j) > pres_.top_factor_count())
        return {};
    Word w = monomials_[i].factors;
    w.insert(w.end(), monomials_[j].factors.begin(), monomials_[j].factors.end());
    return reduce_word(w);
}

const SparseIntRow& ArnoldAlgebra::product(std::size_t i, std::size_t j) const
{
    const std::size_t slot = i * size() + j;
    if (i >= size() || j >= size())
        throw std::out_of_range("basis index out of range");
    std::call_once(computed_[slot], [&] { table_[slot] = compute_product(i, j); });
    return table_[slot];
}

void ArnoldAlgebra::freeze() const
{
    const auto total = static_cast<std::ptrdiff_t>(size() * size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t slot = 0; slot < total; ++slot)
        (void)product(static_cast<std::size_t>(slot) / size(), static_cast<std::size_t>(slot) % size());
}

bool stability_check(int n, int m_even)
{
    if (m_even < 2 || m_even % 2 != 0)
        throw std::invalid_argument("stability check needs an even m >= 2, got " + std::to_string(m_even));
    const ArnoldAlgebra planar(build_presentation(n, 2));
    const ArnoldAlgebra spatial(build_presentation(n, m_even));
    if (planar.size() != spatial.size())
        return false;
    for (std::size_t a = 0; a < planar.size(); ++a) {
        if (!(planar.monomial(a) == spatial.monomial(a)))
            return false;
        if (spatial.degree(a) != (m_even - 1) * planar.degree(a))
            return false;
    }
    for (std::size_t a = 0; a < planar.size(); ++a)
        for (std::size_t b = 0; b < planar.size(); ++b)
            if (planar.product(a, b) != spatial.product(a, b))
                return false;
    return true;
}

} // namespace tc
