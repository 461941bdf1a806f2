#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tc/span_kernels.hpp"
#include "tc/subspace.hpp"
#include "tc/tensor_square.hpp"

namespace tc {

struct ResourceCaps {
    int max_n = 5;
    int max_m = 9;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void check_caps(const Presentation& p, const ResourceCaps& caps)
{
    if (p.n > caps.max_n)
        throw CapExceeded("n=" + std::to_string(p.n) + " exceeds cap max_n=" + std::to_string(caps.max_n));
    if (p.m > caps.max_m)
        throw CapExceeded("m=" + std::to_string(p.m) + " exceeds cap max_m=" + std::to_string(caps.max_m));
}

// One subspace per total factor count t = 0 .. 2(n-1).
template <class Field>
using GradedSubspace = std::vector<Subspace<Field>>;

template <class Field>
bool is_zero(const GradedSubspace<Field>& g)
{
    for (const auto& s : g)
        if (!s.is_zero())
            return false;
    return true;
}

template <class Field>
std::vector<std::size_t> dimensions(const GradedSubspace<Field>& g)
{
    std::vector<std::size_t> dims;
    for (const auto& s : g)
        dims.push_back(s.dim());
    return dims;
}

// Kernel of the diagonal restriction on the piece of total factor count t
// (cohomological degree t * (m - 1)).
template <class Field>
Subspace<Field> zero_divisor_subspace(const TensorSquare<Field>& sq, int t)
{
    if (t < 0 || t > sq.max_total())
        return Subspace<Field>(sq.field(), 0);
    return kernel(sq.field(), sq.restriction_matrix(t), sq.piece_dim(t));
}

template <class Field>
GradedSubspace<Field> zero_divisor_ideal(const TensorSquare<Field>& sq)
{
    GradedSubspace<Field> z;
    for (int t = 0; t <= sq.max_total(); ++t)
        z.push_back(zero_divisor_subspace(sq, t));
    return z;
}

// Coordinates of bar(e_ij) for every generator, in piece 1.
template <class Field>
std::vector<typename TensorSquare<Field>::Vector> generator_bars(const TensorSquare<Field>& sq)
{
    std::vector<typename TensorSquare<Field>::Vector> out;
    const ArnoldAlgebra& alg = sq.algebra();
    for (const Edge& e : alg.presentation().generators()) {
        auto v = AlgebraElement<Field>::generator(sq.algebra_ptr(), sq.field(), e);
        out.push_back(sq.to_vector(bar(v), 1));
    }
    return out;
}

// How Z^(k+1) is formed from Z^(k).
enum class PowerMethod {
    // span(Z^(k) . Z^(1)) over all degree pairs.
    FullProducts,
    // span(Z^(k) . bar(e_ij)); equal to the above because Z is the ideal
    // generated by the generator bars and Z^(k) is itself an ideal.
    GeneratorBars,
};

struct CuplengthOptions {
    Execution execution = Execution::Parallel;
    PowerMethod method = PowerMethod::GeneratorBars;
    ResourceCaps caps{};
};

struct CuplengthResult {
    int length = 0;
    // dims[k - 1][t] = dim of Z^(k) in piece t.
    std::vector<std::vector<std::size_t>> dims;
};

// Largest k with Z^k != 0 where Z is the kernel of the diagonal restriction.
template <class Field>
CuplengthResult zero_divisor_cuplength(const TensorSquare<Field>& sq, const CuplengthOptions& opts = {})
{
    check_caps(sq.algebra().presentation(), opts.caps);
    CuplengthResult result;
    const GradedSubspace<Field> first = zero_divisor_ideal(sq);
    if (is_zero(first))
        return result;
    const auto bars = generator_bars(sq);

    GradedSubspace<Field> current = first;
    result.length = 1;
    result.dims.push_back(dimensions(current));
    for (;;) {
        GradedSubspace<Field> next;
        for (int t = 0; t <= sq.max_total(); ++t) {
            // Z^(k+1) is inside Z^(k), so its dimension caps the span.
            const std::size_t bound = current[static_cast<std::size_t>(t)].dim();
            Subspace<Field> piece(sq.field(), sq.piece_dim(t));
            if (opts.method == PowerMethod::GeneratorBars) {
                if (t >= 1 && !current[static_cast<std::size_t>(t - 1)].is_zero())
                    piece = product_span(opts.execution, sq, t - 1, dense_rows(current[static_cast<std::size_t>(t - 1)]), 1,
                        bars, bound);
            } else {
                for (int t1 = 0; t1 <= t && piece.dim() < bound; ++t1) {
                    const auto& lhs = current[static_cast<std::size_t>(t1)];
                    const auto& rhs = first[static_cast<std::size_t>(t - t1)];
                    if (lhs.is_zero() || rhs.is_zero())
                        continue;
                    piece.merge(product_span(opts.execution, sq, t1, dense_rows(lhs), t - t1, dense_rows(rhs), bound));
                }
            }
            next.push_back(std::move(piece));
        }
        if (is_zero(next))
            return result;
        current = std::move(next);
        ++result.length;
        result.dims.push_back(dimensions(current));
    }
}

struct BarSpanResult {
    int length = 0;
    // dims[k - 1] = dim V_k, living in piece k.
    std::vector<std::size_t> dims;
};

// V_1 = span{bar(e_ij)}, V_{k+1} = span(V_k . V_1); largest k with V_k != 0.
template <class Field>
BarSpanResult bar_span_length(const TensorSquare<Field>& sq, Execution exec = Execution::Parallel,
    const ResourceCaps& caps = {})
{
    check_caps(sq.algebra().presentation(), caps);
    BarSpanResult result;
    const auto bars = generator_bars(sq);
    if (bars.empty())
        return result;
    Subspace<Field> current(sq.field(), sq.piece_dim(1));
    for (const auto& b : bars)
        current.insert(b);
    int k = 1;
    while (!current.is_zero()) {
        result.length = k;
        result.dims.push_back(current.dim());
        if (k + 1 > sq.max_total())
            break;
        current = product_span(exec, sq, k, dense_rows(current), 1, bars);
        ++k;
    }
    return result;
}

struct BarProductResult {
    int length = 0;
    // Generator indices (non-decreasing) of one nonzero product of that length.
    std::vector<std::size_t> witness;
};

namespace detail {

template <class Ring>
class BarProductSearch {
public:
    using Vector = typename TensorSquare<Ring>::Vector;

    explicit BarProductSearch(const TensorSquare<Ring>& sq) : sq_(sq)
    {
        for (const auto& b : generator_bars(sq))
            bars_.push_back(sq.sparse(b));
    }

    std::size_t generator_count() const { return bars_.size(); }

    // Depth-first over non-decreasing sequences starting with `first`. A zero
    // product stays zero after further multiplication, so zero branches are
    // cut. Stops everywhere once `done` is set.
    BarProductResult run(std::size_t first, std::atomic<bool>& done) const
    {
        BarProductResult best;
        std::vector<std::size_t> path{first};
        const Vector x = dense(bars_[first], 1);
        if (is_zero(x))
            return best;
        visit(x, path, best, done);
        return best;
    }

private:
    Vector dense(const typename TensorSquare<Ring>::SparseVector& y, int t) const
    {
        Vector v = sq_.zero_vector(t);
        for (const auto& [i, e] : y)
            v[i] = e;
        return v;
    }

    bool is_zero(const Vector& v) const
    {
        return std::all_of(v.begin(), v.end(), [&](const auto& e) { return sq_.field().is_zero(e); });
    }

    void visit(const Vector& x, std::vector<std::size_t>& path, BarProductResult& best, std::atomic<bool>& done) const
    {
        const int t = static_cast<int>(path.size());
        if (t > best.length) {
            best.length = t;
            best.witness = path;
        }
        if (t >= sq_.max_total()) {
            done = true;
            return;
        }
        for (std::size_t g = path.back(); g < bars_.size() && !done; ++g) {
            const Vector y = sq_.multiply(t, x, 1, bars_[g]);
            if (is_zero(y))
                continue;
            path.push_back(g);
            visit(y, path, best, done);
            path.pop_back();
        }
    }

    const TensorSquare<Ring>& sq_;
    std::vector<typename TensorSquare<Ring>::SparseVector> bars_;
};

} // namespace detail

// Largest k with some product bar(g_1) ... bar(g_k) of generator bar classes
// nonzero. This equals both the bar span length and the zero-divisor
// cup-length, and needs no linear algebra, so it also runs over Z (which
// decides nonvanishing over Q because the cohomology is free).
template <class Ring>
BarProductResult bar_product_length(const TensorSquare<Ring>& sq, Execution exec = Execution::Parallel,
    const ResourceCaps& caps = {})
{
    check_caps(sq.algebra().presentation(), caps);
    const detail::BarProductSearch<Ring> search(sq);
    const auto count = static_cast<std::ptrdiff_t>(search.generator_count());
    std::vector<BarProductResult> per_first(search.generator_count());
    std::atomic<bool> done{false};
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::Parallel)
    for (std::ptrdiff_t g = 0; g < count; ++g)
        if (!done)
            per_first[static_cast<std::size_t>(g)] = search.run(static_cast<std::size_t>(g), done);
    BarProductResult best;
    for (auto& r : per_first)
        if (r.length > best.length)
            best = std::move(r);
    return best;
}

} // namespace tc
