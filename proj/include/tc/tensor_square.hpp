#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tc/algebra_element.hpp"
#include "tc/arnold_algebra.hpp"

namespace tc {

// (-1)^{|b||c|} for basis monomials with the given factor counts.
inline bool koszul_negative(const Presentation& p, int factors_b, int factors_c)
{
    return p.parity() == 1 && (factors_b * factors_c) % 2 == 1;
}

// Element of H*(X) (x) H*(X), keyed by pairs of basis indices.
template <class Ring>
class TensorElement {
public:
    using Elem = typename Ring::Elem;
    using Key = std::pair<std::size_t, std::size_t>;
    using Terms = std::map<Key, Elem>;

    TensorElement(std::shared_ptr<const ArnoldAlgebra> alg, Ring ring) : alg_(std::move(alg)), ring_(std::move(ring)) {}

    // Cross product a x b = a (x) b.
    static TensorElement cross(const AlgebraElement<Ring>& a, const AlgebraElement<Ring>& b)
    {
        a.check_compatible(b);
        TensorElement out(a.algebra_ptr(), a.ring());
        for (const auto& [i, ci] : a.terms())
            for (const auto& [j, cj] : b.terms())
                out.add_term({i, j}, out.ring_.mul(ci, cj));
        return out;
    }

    const ArnoldAlgebra& algebra() const { return *alg_; }
    const std::shared_ptr<const ArnoldAlgebra>& algebra_ptr() const { return alg_; }
    const Ring& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Total factor count when homogeneous and nonzero.
    std::optional<int> total_factor_count() const
    {
        std::optional<int> t;
        for (const auto& [key, c] : terms_) {
            int f = alg_->factor_count(key.first) + alg_->factor_count(key.second);
            if (t && *t != f)
                return std::nullopt;
            t = f;
        }
        return t;
    }

    void add_term(Key key, const Elem& c)
    {
        if (key.first >= alg_->size() || key.second >= alg_->size())
            throw std::out_of_range("tensor basis index out of range");
        if (ring_.is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second))
                terms_.erase(it);
        }
    }

    void check_compatible(const TensorElement& other) const
    {
        if (!(alg_->presentation() == other.alg_->presentation()))
            throw std::invalid_argument("tensor elements belong to different presentations");
        if (!(ring_ == other.ring_))
            throw std::invalid_argument("tensor elements have different coefficient rings");
    }

    TensorElement& operator+=(const TensorElement& other)
    {
        check_compatible(other);
        for (const auto& [key, c] : other.terms_)
            add_term(key, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& other)
    {
        check_compatible(other);
        for (const auto& [key, c] : other.terms_)
            add_term(key, ring_.neg(c));
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

    TensorElement scaled(const Elem& s) const
    {
        TensorElement out(alg_, ring_);
        for (const auto& [key, c] : terms_)
            out.add_term(key, ring_.mul(s, c));
        return out;
    }

    bool operator==(const TensorElement& other) const
    {
        return alg_->presentation() == other.alg_->presentation() && terms_ == other.terms_;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [key, c] : terms_) {
            if (!out.empty())
                out += " + ";
            out += "(" + ring_.to_string(c) + ")*" + alg_->monomial(key.first).to_string() + "(x)"
                + alg_->monomial(key.second).to_string();
        }
        return out;
    }

private:
    std::shared_ptr<const ArnoldAlgebra> alg_;
    Ring ring_;
    Terms terms_;
};

// (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd, extended bilinearly.
template <class Ring>
TensorElement<Ring> tensor_multiply(const TensorElement<Ring>& x, const TensorElement<Ring>& y)
{
    x.check_compatible(y);
    const ArnoldAlgebra& alg = x.algebra();
    const Ring& ring = x.ring();
    TensorElement<Ring> out(x.algebra_ptr(), ring);
    for (const auto& [ab, cx] : x.terms()) {
        for (const auto& [cd, cy] : y.terms()) {
            const auto& left = alg.product(ab.first, cd.first);
            if (left.empty())
                continue;
            const auto& right = alg.product(ab.second, cd.second);
            if (right.empty())
                continue;
            auto coeff = ring.mul(cx, cy);
            if (koszul_negative(alg.presentation(), alg.factor_count(ab.second), alg.factor_count(cd.first)))
                coeff = ring.neg(coeff);
            for (const auto& [l, sl] : left)
                for (const auto& [r, sr] : right)
                    out.add_term({l, r}, ring.mul(coeff, ring.from_integer(sl * sr)));
        }
    }
    return out;
}

template <class Ring>
TensorElement<Ring> operator*(const TensorElement<Ring>& x, const TensorElement<Ring>& y)
{
    return tensor_multiply(x, y);
}

// Restriction to the diagonal: a (x) b -> ab.
template <class Ring>
AlgebraElement<Ring> diagonal_restriction(const TensorElement<Ring>& x)
{
    const Ring& ring = x.ring();
    AlgebraElement<Ring> out(x.algebra_ptr(), ring);
    for (const auto& [key, c] : x.terms())
        for (const auto& [k, s] : x.algebra().product(key.first, key.second))
            out.add_term(k, ring.mul(c, ring.from_integer(s)));
    return out;
}

// v x 1 - 1 x v for homogeneous v.
template <class Ring>
TensorElement<Ring> bar(const AlgebraElement<Ring>& v)
{
    if (!v.is_homogeneous())
        throw std::invalid_argument("bar class needs a homogeneous element");
    const auto one = AlgebraElement<Ring>::unit(v.algebra_ptr(), v.ring());
    return TensorElement<Ring>::cross(v, one) - TensorElement<Ring>::cross(one, v);
}

// a (x) b -> (-1)^{|a||b|} b (x) a.
template <class Ring>
TensorElement<Ring> koszul_swap(const TensorElement<Ring>& x)
{
    const ArnoldAlgebra& alg = x.algebra();
    TensorElement<Ring> out(x.algebra_ptr(), x.ring());
    for (const auto& [key, c] : x.terms()) {
        bool negative = koszul_negative(alg.presentation(), alg.factor_count(key.first), alg.factor_count(key.second));
        out.add_term({key.second, key.first}, negative ? x.ring().neg(c) : c);
    }
    return out;
}

// Graded coordinate model of the tensor square over a field: piece t holds the
// pairs (a, b) with factor_count(a) + factor_count(b) == t, ordered by (a, b).
// Structure constants are converted into the field once at construction.
template <class Field>
class TensorSquare {
public:
    using Elem = typename Field::Elem;
    using Vector = std::vector<Elem>;
    using Key = std::pair<std::size_t, std::size_t>;

    TensorSquare(std::shared_ptr<const ArnoldAlgebra> alg, Field field) : alg_(std::move(alg)), field_(std::move(field))
    {
        alg_->freeze();
        const std::size_t n = alg_->size();
        const int top = alg_->presentation().top_factor_count();
        pieces_.resize(static_cast<std::size_t>(2 * top + 1));
        coord_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                auto t = static_cast<std::size_t>(alg_->factor_count(a) + alg_->factor_count(b));
                coord_[a * n + b] = pieces_[t].size();
                pieces_[t].push_back({a, b});
            }
        table_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (const auto& [k, s] : alg_->product(a, b)) {
                    Elem e = field_.from_integer(s);
                    if (!field_.is_zero(e))
                        table_[a * n + b].emplace_back(k, e);
                }
    }

    const ArnoldAlgebra& algebra() const { return *alg_; }
    const std::shared_ptr<const ArnoldAlgebra>& algebra_ptr() const { return alg_; }
    const Field& field() const { return field_; }
    int max_total() const { return static_cast<int>(pieces_.size()) - 1; }
    std::size_t piece_dim(int t) const
    {
        return t < 0 || t > max_total() ? 0 : pieces_[static_cast<std::size_t>(t)].size();
    }
    const Key& pair_at(int t, std::size_t pos) const { return pieces_.at(static_cast<std::size_t>(t)).at(pos); }
    std::size_t coord(std::size_t a, std::size_t b) const { return coord_.at(a * alg_->size() + b); }

    Vector zero_vector(int t) const { return Vector(piece_dim(t), field_.zero()); }

    using SparseVector = std::vector<std::pair<std::size_t, Elem>>;

    SparseVector sparse(const Vector& y) const
    {
        SparseVector out;
        for (std::size_t i = 0; i < y.size(); ++i)
            if (!field_.is_zero(y[i]))
                out.emplace_back(i, y[i]);
        return out;
    }

    // Product of coordinate vectors from pieces t1 and t2; empty when the
    // target degree is out of range (the product is zero).
    Vector multiply(int t1, const Vector& x, int t2, const Vector& y) const { return multiply(t1, x, t2, sparse(y)); }

    Vector multiply(int t1, const Vector& x, int t2, const SparseVector& y) const
    {
        const int t = t1 + t2;
        if (t > max_total())
            return {};
        const std::size_t n = alg_->size();
        const Presentation& pres = alg_->presentation();
        Vector out = zero_vector(t);
        Elem coeff, partial;
        for (std::size_t px = 0; px < x.size(); ++px) {
            if (field_.is_zero(x[px]))
                continue;
            const auto& [a, b] = pair_at(t1, px);
            for (const auto& [py, ye] : y) {
                const auto& [c, d] = pair_at(t2, py);
                const auto& left = table_[a * n + c];
                if (left.empty())
                    continue;
                const auto& right = table_[b * n + d];
                if (right.empty())
                    continue;
                coeff = field_.mul(x[px], ye);
                if (koszul_negative(pres, alg_->factor_count(b), alg_->factor_count(c)))
                    coeff = field_.neg(coeff);
                for (const auto& [l, sl] : left) {
                    partial = field_.mul(coeff, sl);
                    for (const auto& [r, sr] : right) {
                        Elem& slot = out[coord(l, r)];
                        slot = field_.add(slot, field_.mul(partial, sr));
                    }
                }
            }
        }
        return out;
    }

    // Matrix of the diagonal restriction on piece t: rows indexed by the basis
    // of H with factor count t, columns by piece coordinates.
    std::vector<Vector> restriction_matrix(int t) const
    {
        const std::size_t rows = alg_->rank(t);
        std::vector<Vector> m(rows, zero_vector(t));
        if (rows == 0)
            return m;
        const std::size_t base = alg_->offset(t);
        for (std::size_t pos = 0; pos < piece_dim(t); ++pos) {
            const auto& [a, b] = pair_at(t, pos);
            for (const auto& [k, s] : table_[a * alg_->size() + b])
                m[k - base][pos] = field_.add(m[k - base][pos], s);
        }
        return m;
    }

    Vector to_vector(const TensorElement<Field>& x, int t) const
    {
        Vector v = zero_vector(t);
        for (const auto& [key, c] : x.terms()) {
            if (alg_->factor_count(key.first) + alg_->factor_count(key.second) != t)
                throw std::invalid_argument("tensor element is not homogeneous of total factor count " + std::to_string(t));
            v[coord(key.first, key.second)] = c;
        }
        return v;
    }

    TensorElement<Field> from_vector(int t, const Vector& v) const
    {
        TensorElement<Field> x(alg_, field_);
        for (std::size_t pos = 0; pos < v.size(); ++pos)
            x.add_term(pair_at(t, pos), v[pos]);
        return x;
    }

private:
    std::shared_ptr<const ArnoldAlgebra> alg_;
    Field field_;
    std::vector<std::vector<Key>> pieces_;
    std::vector<std::size_t> coord_;
    std::vector<std::vector<std::pair<std::size_t, Elem>>> table_;
};

} // namespace tc
