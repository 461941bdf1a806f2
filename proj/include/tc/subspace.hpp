#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "tc/coefficients.hpp"

namespace tc {

// Finite-dimensional subspace of Field^ambient.
//
// The working basis is a forward-only echelon form: every row has a distinct
// pivot and is zero at the pivots of the rows inserted before it, so
// reduction in insertion order is exact. Over Q the rows are primitive
// integer vectors (fraction-free elimination); over Z_p they have pivot 1.
// The fully reduced echelon form is canonical and is built on demand for
// comparisons and kernels.
template <class Field>
class Subspace {
public:
    using Elem = typename Field::Elem;
    using Vector = std::vector<Elem>;
    using SparseRow = std::vector<std::pair<std::size_t, Elem>>;

    Subspace(Field field, std::size_t ambient_dim) : field_(std::move(field)), ambient_(ambient_dim) {}

    const Field& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return rows_.size() == ambient_; }

    // Row r of the working basis (not canonical).
    Vector basis_row(std::size_t r) const
    {
        Vector v(ambient_, field_.zero());
        for (const auto& [col, c] : rows_.at(r))
            v[col] = to_elem(c);
        return v;
    }

    // Pivot columns, ascending.
    std::vector<std::size_t> pivots() const
    {
        std::vector<std::size_t> out = pivots_;
        std::sort(out.begin(), out.end());
        return out;
    }

    // Fully reduced echelon rows sorted by pivot, each pivot entry 1.
    std::vector<SparseRow> reduced_rows() const
    {
        std::vector<std::size_t> order(rows_.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
        std::vector<SparseRow> out;
        std::vector<std::size_t> piv;
        for (std::size_t idx : order) {
            SparseRow row;
            for (const auto& [col, c] : rows_[idx])
                row.emplace_back(col, to_elem(c));
            const Elem scale = field_.inv(row.front().second);
            for (auto& entry : row)
                entry.second = field_.mul(scale, entry.second);
            out.push_back(std::move(row));
            piv.push_back(pivots_[idx]);
        }
        // Back-substitution, last pivot first.
        for (std::size_t i = out.size(); i-- > 0;)
            for (std::size_t j = 0; j < i; ++j)
                eliminate(out[j], out[i], piv[i]);
        return out;
    }

    Vector dense(const SparseRow& row) const
    {
        Vector v(ambient_, field_.zero());
        for (const auto& [col, c] : row)
            v[col] = c;
        return v;
    }

    bool contains(const Vector& v) const
    {
        Work w = to_work(v);
        return !reduce(w);
    }

    // Adds v to the span; returns true if the dimension grew.
    bool insert(const Vector& v)
    {
        Work w = to_work(v);
        if (!reduce(w))
            return false;
        std::size_t pivot = 0;
        while (work_is_zero(w[pivot]))
            ++pivot;
        Row row;
        for (std::size_t col = pivot; col < ambient_; ++col)
            if (!work_is_zero(w[col]))
                row.emplace_back(col, std::move(w[col]));
        normalize(row);
        rows_.push_back(std::move(row));
        pivots_.push_back(pivot);
        return true;
    }

    void merge(const Subspace& other)
    {
        if (other.ambient_ != ambient_)
            throw std::invalid_argument("subspace ambient dimensions differ");
        for (std::size_t r = 0; r < other.dim() && !is_full(); ++r)
            insert(other.basis_row(r));
    }

    bool operator==(const Subspace& other) const
    {
        return ambient_ == other.ambient_ && dim() == other.dim() && pivots() == other.pivots()
            && reduced_rows() == other.reduced_rows();
    }

private:
    static constexpr bool fraction_free = std::is_same_v<Field, Rationals>;
    using Scalar = std::conditional_t<fraction_free, mpz_class, Elem>;
    using Row = std::vector<std::pair<std::size_t, Scalar>>;
    using Work = std::vector<Scalar>;

    Elem to_elem(const Scalar& s) const
    {
        if constexpr (fraction_free)
            return Elem(s);
        else
            return s;
    }

    bool work_is_zero(const Scalar& s) const
    {
        if constexpr (fraction_free)
            return sgn(s) == 0;
        else
            return field_.is_zero(s);
    }

    Work to_work(const Vector& v) const
    {
        if (v.size() != ambient_)
            throw std::invalid_argument("vector length does not match subspace ambient dimension");
        if constexpr (fraction_free) {
            mpz_class denom = 1;
            for (const auto& x : v)
                if (x.get_den() != 1)
                    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
            Work w(ambient_);
            for (std::size_t i = 0; i < ambient_; ++i)
                if (sgn(v[i]) != 0)
                    w[i] = denom == 1 ? v[i].get_num() : mpz_class(v[i].get_num() * (denom / v[i].get_den()));
            return w;
        } else {
            return v;
        }
    }

    // Eliminates every stored pivot from w; true when w stays nonzero.
    bool reduce(Work& w) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& f = w[pivots_[r]];
            if (work_is_zero(f))
                continue;
            const Row& row = rows_[r];
            if constexpr (fraction_free) {
                // w <- a w - b row with a = lead / g, b = f / g.
                const mpz_class& lead = row.front().second;
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), f.get_mpz_t());
                const mpz_class a = lead / g;
                const mpz_class b = f / g;
                if (a != 1)
                    for (auto& x : w)
                        if (sgn(x) != 0)
                            x *= a;
                for (const auto& [col, c] : row)
                    mpz_submul(w[col].get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
            } else {
                const Elem factor = f;
                for (const auto& [col, c] : row)
                    w[col] = field_.sub(w[col], field_.mul(factor, c));
            }
        }
        return std::any_of(w.begin(), w.end(), [&](const Scalar& e) { return !work_is_zero(e); });
    }

    // Primitive with positive pivot over Q; pivot 1 over Z_p.
    void normalize(Row& row) const
    {
        if constexpr (fraction_free) {
            mpz_class g = 0;
            for (const auto& entry : row)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), entry.second.get_mpz_t());
            if (sgn(row.front().second) < 0)
                g = -g;
            for (auto& entry : row)
                mpz_divexact(entry.second.get_mpz_t(), entry.second.get_mpz_t(), g.get_mpz_t());
        } else {
            const Elem scale = field_.inv(row.front().second);
            for (auto& entry : row)
                entry.second = field_.mul(scale, entry.second);
        }
    }

    // target -= target[pivot] * row, for rows sorted by column with row[pivot] = 1.
    void eliminate(SparseRow& target, const SparseRow& row, std::size_t pivot) const
    {
        auto hit = std::lower_bound(target.begin(), target.end(), pivot,
            [](const auto& entry, std::size_t col) { return entry.first < col; });
        if (hit == target.end() || hit->first != pivot)
            return;
        const Elem factor = hit->second;
        SparseRow merged;
        merged.reserve(target.size() + row.size());
        auto a = target.begin();
        auto b = row.begin();
        while (a != target.end() || b != row.end()) {
            if (b == row.end() || (a != target.end() && a->first < b->first)) {
                merged.push_back(std::move(*a++));
            } else if (a == target.end() || b->first < a->first) {
                merged.emplace_back(b->first, field_.neg(field_.mul(factor, b->second)));
                ++b;
            } else {
                Elem e = field_.sub(a->second, field_.mul(factor, b->second));
                if (!field_.is_zero(e))
                    merged.emplace_back(a->first, std::move(e));
                ++a;
                ++b;
            }
        }
        target = std::move(merged);
    }

    Field field_;
    std::size_t ambient_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivots_;
};

// Kernel of x -> M x where M is given by its rows (each of length cols).
template <class Field>
Subspace<Field> kernel(const Field& field, const std::vector<typename Subspace<Field>::Vector>& matrix, std::size_t cols)
{
    Subspace<Field> row_space(field, cols);
    for (const auto& r : matrix)
        row_space.insert(r);
    const auto pivots = row_space.pivots();
    const auto rows = row_space.reduced_rows();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    Subspace<Field> ker(field, cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        typename Subspace<Field>::Vector x(cols, field.zero());
        x[free] = field.one();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto& row = rows[r];
            auto hit = std::lower_bound(row.begin(), row.end(), free,
                [](const auto& entry, std::size_t col) { return entry.first < col; });
            if (hit != row.end() && hit->first == free)
                x[pivots[r]] = field.neg(hit->second);
        }
        ker.insert(x);
    }
    return ker;
}

} // namespace tc
