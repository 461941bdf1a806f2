#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tc/algebra_element.hpp"
#include "tc/arnold_algebra.hpp"

namespace tc {

// A parsed expression: sum of integer multiples of generator words. The
// empty word stands for the unit.
using WordSum = std::vector<std::pair<mpz_class, Word>>;

// Grammar: term (('+' | '-') term)*, term = [int ['*']] factor ('*' factor)*
// or a bare integer; factor = e<i><j> with single digits, e<i>_<j>, or 1.
// Throws std::invalid_argument with the offending position.
WordSum parse_word_sum(std::string_view text);

template <class Ring>
AlgebraElement<Ring> parse_element(std::shared_ptr<const ArnoldAlgebra> alg, const Ring& ring, std::string_view text)
{
    AlgebraElement<Ring> out(alg, ring);
    for (const auto& [coeff, word] : parse_word_sum(text))
        out += AlgebraElement<Ring>::from_word(alg, ring, word).scaled(ring.from_integer(coeff));
    return out;
}

} // namespace tc
