#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "tc/subspace.hpp"
#include "tc/tensor_square.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tc {

enum class Execution { Serial, Parallel };

constexpr std::size_t no_saturation = std::numeric_limits<std::size_t>::max();

// Reference kernel: span of all products left[i] * right[j] with left in
// piece t1 and right in piece t2. Stops early once the span reaches
// `saturation` (a known upper bound on its dimension) or the whole piece.
template <class Field>
Subspace<Field> product_span_serial(const TensorSquare<Field>& sq, int t1,
    const std::vector<typename TensorSquare<Field>::Vector>& left, int t2,
    const std::vector<typename TensorSquare<Field>::Vector>& right, std::size_t saturation = no_saturation)
{
    Subspace<Field> span(sq.field(), sq.piece_dim(t1 + t2));
    if (sq.piece_dim(t1 + t2) == 0)
        return span;
    for (const auto& x : left)
        for (const auto& y : right) {
            if (span.is_full() || span.dim() >= saturation)
                return span;
            span.insert(sq.multiply(t1, x, t2, y));
        }
    return span;
}

// OpenMP kernel: each thread reduces its share of the product pairs into a
// private echelon basis, and the private bases are merged at the end. The
// reduced echelon form is canonical, so the result equals the serial one.
template <class Field>
Subspace<Field> product_span_parallel(const TensorSquare<Field>& sq, int t1,
    const std::vector<typename TensorSquare<Field>::Vector>& left, int t2,
    const std::vector<typename TensorSquare<Field>::Vector>& right, std::size_t saturation = no_saturation)
{
    Subspace<Field> span(sq.field(), sq.piece_dim(t1 + t2));
    if (sq.piece_dim(t1 + t2) == 0 || left.empty() || right.empty())
        return span;
    const auto pairs = static_cast<std::ptrdiff_t>(left.size() * right.size());
    std::vector<Subspace<Field>> partials;
#pragma omp parallel
    {
        Subspace<Field> local(sq.field(), sq.piece_dim(t1 + t2));
#pragma omp for schedule(dynamic, 4) nowait
        for (std::ptrdiff_t p = 0; p < pairs; ++p) {
            if (local.is_full() || local.dim() >= saturation)
                continue;
            const auto i = static_cast<std::size_t>(p) / right.size();
            const auto j = static_cast<std::size_t>(p) % right.size();
            local.insert(sq.multiply(t1, left[i], t2, right[j]));
        }
#pragma omp critical(tc_span_merge)
        partials.push_back(std::move(local));
    }
    for (const auto& part : partials) {
        if (span.is_full() || span.dim() >= saturation)
            break;
        span.merge(part);
    }
    return span;
}

template <class Field>
Subspace<Field> product_span(Execution exec, const TensorSquare<Field>& sq, int t1,
    const std::vector<typename TensorSquare<Field>::Vector>& left, int t2,
    const std::vector<typename TensorSquare<Field>::Vector>& right, std::size_t saturation = no_saturation)
{
    return exec == Execution::Parallel ? product_span_parallel(sq, t1, left, t2, right, saturation)
                                       : product_span_serial(sq, t1, left, t2, right, saturation);
}

template <class Field>
std::vector<typename Subspace<Field>::Vector> dense_rows(const Subspace<Field>& s)
{
    std::vector<typename Subspace<Field>::Vector> out;
    out.reserve(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r)
        out.push_back(s.basis_row(r));
    return out;
}

} // namespace tc
