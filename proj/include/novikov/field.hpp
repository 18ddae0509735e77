// Exact field arithmetic: arbitrary-precision rationals and prime fields GF(p).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace novikov {

// Base class for everything this library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid user-supplied data: bad moduli, mixed fields, malformed scalars,
// dimension mismatches, caps exceeded.
class input_error : public error {
public:
    using error::error;
};

bool is_prime_u32(std::uint32_t n);

enum class FieldKind { Rationals, PrimeField };

class FieldDescriptor {
public:
    static FieldDescriptor rationals() { return FieldDescriptor(FieldKind::Rationals, 0); }
    // Throws input_error unless p is prime and 2 <= p < 2^16.
    static FieldDescriptor gf(std::uint32_t p);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
    std::uint32_t modulus() const;

    bool operator==(const FieldDescriptor&) const = default;
    std::string to_string() const;

private:
    FieldDescriptor(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::uint32_t p_;
};

// An exact field element. Rationals are kept in lowest terms with positive
// denominator (mpq canonical form); GF(p) elements are residues in 0..p-1.
class Scalar {
public:
    Scalar() : field_(FieldDescriptor::rationals()), v_(mpq_class(0)) {}

    static Scalar zero(const FieldDescriptor& f);
    static Scalar one(const FieldDescriptor& f);
    static Scalar of(const FieldDescriptor& f, long value);
    static Scalar rational(const mpq_class& q);
    static Scalar rational(long num, long den);
    static Scalar residue(const FieldDescriptor& f, std::uint64_t r);

    // Accepts "123", "-4" and, over Q only, "num/den". Throws input_error.
    static Scalar parse(const FieldDescriptor& f, std::string_view text);

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const; // throws error on zero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

    // Valid only for the matching field kind.
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    std::uint32_t residue_value() const { return std::get<std::uint32_t>(v_); }

private:
    Scalar(FieldDescriptor f, mpq_class q) : field_(f), v_(std::move(q)) {}
    Scalar(FieldDescriptor f, std::uint32_t r) : field_(f), v_(r) {}
    void require_same_field(const Scalar& o) const;

    FieldDescriptor field_;
    std::variant<mpq_class, std::uint32_t> v_;
};

} // namespace novikov
