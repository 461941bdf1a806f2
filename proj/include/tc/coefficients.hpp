#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace tc {

// Coefficient rings. Each exposes an Elem type plus the arithmetic used by the
// sparse algebra code; fields additionally provide inv().

struct Integers {
    using Elem = mpz_class;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_integer(const mpz_class& z) const { return z; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    std::string to_string(const Elem& a) const { return a.get_str(); }
    unsigned characteristic() const { return 0; }
    std::string name() const { return "Z"; }
    bool operator==(const Integers&) const = default;
};

struct Rationals {
    using Elem = mpq_class;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_integer(const mpz_class& z) const { return Elem(z); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const
    {
        if (sgn(a) == 0)
            throw std::domain_error("division by zero in Q");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    std::string to_string(const Elem& a) const { return a.get_str(); }
    unsigned characteristic() const { return 0; }
    std::string name() const { return "Q"; }
    bool operator==(const Rationals&) const = default;
};

bool is_prime(std::uint64_t p);

// Z_p with p < 2^31 so products fit in 64 bits.
class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t prime() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_integer(const mpz_class& z) const;
    Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % p_); }
    Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + p_ - b) % p_); }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} * b) % p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const;
    bool is_zero(Elem a) const { return a == 0; }
    std::string to_string(Elem a) const { return std::to_string(a); }
    unsigned characteristic() const { return p_; }
    std::string name() const { return "Z_" + std::to_string(p_); }
    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

// A parsed field descriptor: "q" / "Q" / "rational" or "zp:P" with P prime.
using FieldSpec = std::variant<Rationals, PrimeField>;

FieldSpec parse_field(std::string_view text);
std::string field_name(const FieldSpec& spec);
unsigned field_characteristic(const FieldSpec& spec);

} // namespace tc
