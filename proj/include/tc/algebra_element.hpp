#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "tc/arnold_algebra.hpp"
#include "tc/coefficients.hpp"

namespace tc {

// Sparse combination of admissible basis monomials with coefficients in Ring.
template <class Ring>
class AlgebraElement {
public:
    using Elem = typename Ring::Elem;
    using Terms = std::map<std::size_t, Elem>;

    AlgebraElement(std::shared_ptr<const ArnoldAlgebra> alg, Ring ring) : alg_(std::move(alg)), ring_(std::move(ring))
    {
        if (!alg_)
            throw std::invalid_argument("algebra element needs an algebra");
    }

    static AlgebraElement unit(std::shared_ptr<const ArnoldAlgebra> alg, Ring ring)
    {
        AlgebraElement e(std::move(alg), std::move(ring));
        e.add_term(0, e.ring_.one());
        return e;
    }

    static AlgebraElement basis_element(std::shared_ptr<const ArnoldAlgebra> alg, Ring ring, std::size_t index)
    {
        AlgebraElement e(std::move(alg), std::move(ring));
        e.add_term(index, e.ring_.one());
        return e;
    }

    static AlgebraElement generator(std::shared_ptr<const ArnoldAlgebra> alg, Ring ring, Edge edge)
    {
        auto idx = alg->generator_index(edge);
        if (!idx)
            throw std::invalid_argument("no generator " + tc::to_string(edge) + " for n=" + std::to_string(alg->presentation().n));
        return basis_element(std::move(alg), std::move(ring), *idx);
    }

    // Straightened image of an arbitrary generator word.
    static AlgebraElement from_word(std::shared_ptr<const ArnoldAlgebra> alg, Ring ring, const Word& word)
    {
        for (const Edge& e : word)
            if (e.j > alg->presentation().n)
                throw std::invalid_argument("edge " + tc::to_string(e) + " exceeds n=" + std::to_string(alg->presentation().n));
        AlgebraElement out(alg, ring);
        for (const auto& [idx, coeff] : alg->reduce_word(word))
            out.add_term(idx, out.ring_.from_integer(coeff));
        return out;
    }

    const ArnoldAlgebra& algebra() const { return *alg_; }
    const std::shared_ptr<const ArnoldAlgebra>& algebra_ptr() const { return alg_; }
    const Ring& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Factor count when homogeneous and nonzero; nullopt for zero or mixed.
    std::optional<int> factor_count() const
    {
        std::optional<int> k;
        for (const auto& [idx, c] : terms_) {
            int f = alg_->factor_count(idx);
            if (k && *k != f)
                return std::nullopt;
            k = f;
        }
        return k;
    }
    bool is_homogeneous() const { return is_zero() || factor_count().has_value(); }

    void add_term(std::size_t index, const Elem& c)
    {
        if (index >= alg_->size())
            throw std::out_of_range("basis index out of range");
        if (ring_.is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(index, c);
        if (!inserted) {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second))
                terms_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& other)
    {
        check_compatible(other);
        for (const auto& [idx, c] : other.terms_)
            add_term(idx, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& other)
    {
        check_compatible(other);
        for (const auto& [idx, c] : other.terms_)
            add_term(idx, ring_.neg(c));
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    AlgebraElement scaled(const Elem& s) const
    {
        AlgebraElement out(alg_, ring_);
        for (const auto& [idx, c] : terms_)
            out.add_term(idx, ring_.mul(s, c));
        return out;
    }

    bool operator==(const AlgebraElement& other) const
    {
        return alg_->presentation() == other.alg_->presentation() && terms_ == other.terms_;
    }

    void check_compatible(const AlgebraElement& other) const
    {
        if (!(alg_->presentation() == other.alg_->presentation()))
            throw std::invalid_argument("elements belong to different presentations");
        if (!(ring_ == other.ring_))
            throw std::invalid_argument("elements have different coefficient rings");
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [idx, c] : terms_) {
            std::string coeff = ring_.to_string(c);
            bool negative = !coeff.empty() && coeff[0] == '-';
            if (negative)
                coeff.erase(0, 1);
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const std::string mono = alg_->monomial(idx).to_string();
            if (coeff == "1")
                out += mono;
            else if (mono == "1")
                out += coeff;
            else
                out += coeff + "*" + mono;
        }
        return out;
    }

private:
    std::shared_ptr<const ArnoldAlgebra> alg_;
    Ring ring_;
    Terms terms_;
};

// Bilinear extension of concatenate-then-straighten.
template <class Ring>
AlgebraElement<Ring> multiply(const AlgebraElement<Ring>& a, const AlgebraElement<Ring>& b)
{
    a.check_compatible(b);
    const Ring& ring = a.ring();
    AlgebraElement<Ring> out(a.algebra_ptr(), ring);
    for (const auto& [i, ci] : a.terms())
        for (const auto& [j, cj] : b.terms()) {
            const auto cij = ring.mul(ci, cj);
            for (const auto& [k, s] : a.algebra().product(i, j))
                out.add_term(k, ring.mul(cij, ring.from_integer(s)));
        }
    return out;
}

template <class Ring>
AlgebraElement<Ring> operator*(const AlgebraElement<Ring>& a, const AlgebraElement<Ring>& b)
{
    return multiply(a, b);
}

} // namespace tc
