#include "tc/coefficients.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace tc {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("Z_p requires a prime p < 2^31, got " + std::to_string(p));
}

PrimeField::Elem PrimeField::from_integer(const mpz_class& z) const
{
    mpz_class r = z % p_;
    if (sgn(r) < 0)
        r += p_;
    return static_cast<Elem>(r.get_ui());
}

PrimeField::Elem PrimeField::inv(Elem a) const
{
    if (a == 0)
        throw std::domain_error("division by zero in " + name());
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
        if (e & 1)
            result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Elem>(result);
}

FieldSpec parse_field(std::string_view text)
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
        [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "q" || lower == "rational" || lower == "rationals")
        return Rationals{};
    if (lower.rfind("zp:", 0) == 0) {
        std::string_view digits = std::string_view(lower).substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw std::invalid_argument("malformed prime in field descriptor '" + std::string(text) + "'");
        if (p > std::numeric_limits<std::uint32_t>::max())
            throw std::invalid_argument("prime too large: " + std::string(digits));
        return PrimeField(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("unknown field descriptor '" + std::string(text) + "' (expected q or zp:P)");
}

std::string field_name(const FieldSpec& spec)
{
    return std::visit([](const auto& f) { return f.name(); }, spec);
}

unsigned field_characteristic(const FieldSpec& spec)
{
    return std::visit([](const auto& f) { return f.characteristic(); }, spec);
}

} // namespace tc
