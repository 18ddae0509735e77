#include "novikov/field.hpp"

namespace novikov {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldDescriptor FieldDescriptor::gf(std::uint32_t p) {
    if (p < 2 || p >= (1u << 16))
        throw input_error("GF(p) modulus out of range [2, 2^16): " + std::to_string(p));
    if (!is_prime_u32(p))
        throw input_error("GF(p) modulus is not prime: " + std::to_string(p));
    return FieldDescriptor(FieldKind::PrimeField, p);
}

std::uint32_t FieldDescriptor::modulus() const {
    if (kind_ != FieldKind::PrimeField) throw error("modulus() on the rational field");
    return p_;
}

std::string FieldDescriptor::to_string() const {
    return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on signed 64-bit; p < 2^16 so everything fits
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw error("residue not invertible mod " + std::to_string(p));
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

} // namespace

Scalar Scalar::zero(const FieldDescriptor& f) {
    return f.is_rationals() ? Scalar(f, mpq_class(0)) : Scalar(f, std::uint32_t{0});
}

Scalar Scalar::one(const FieldDescriptor& f) {
    return f.is_rationals() ? Scalar(f, mpq_class(1)) : Scalar(f, std::uint32_t{1 % f.modulus()});
}

Scalar Scalar::of(const FieldDescriptor& f, long value) {
    if (f.is_rationals()) return Scalar(f, mpq_class(value));
    std::int64_t p = f.modulus();
    std::int64_t r = value % p;
    if (r < 0) r += p;
    return Scalar(f, static_cast<std::uint32_t>(r));
}

Scalar Scalar::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(FieldDescriptor::rationals(), std::move(c));
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(FieldDescriptor::rationals(), std::move(q));
}

Scalar Scalar::residue(const FieldDescriptor& f, std::uint64_t r) {
    if (!f.is_prime_field()) throw input_error("residue() needs a prime field");
    return Scalar(f, static_cast<std::uint32_t>(r % f.modulus()));
}

Scalar Scalar::parse(const FieldDescriptor& f, std::string_view text) {
    std::string s(text);
    if (s.empty()) throw input_error("empty scalar literal");
    auto is_int = [](const std::string& t) {
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        if (!f.is_rationals())
            throw input_error("fractional scalar '" + s + "' not allowed over " + f.to_string());
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den))
            throw input_error("malformed rational scalar '" + s + "'");
        mpz_class nz(num), dz(den);
        if (dz == 0) throw input_error("zero denominator in scalar '" + s + "'");
        mpq_class q{nz, dz};
        q.canonicalize();
        return Scalar(f, std::move(q));
    }
    if (!is_int(s)) throw input_error("malformed scalar '" + s + "'");
    if (f.is_rationals()) return Scalar(f, mpq_class(mpz_class(s)));
    mpz_class z(s);
    mpz_class p(f.modulus());
    mpz_class r = z % p;
    if (r < 0) r += p;
    return Scalar(f, static_cast<std::uint32_t>(r.get_ui()));
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rat() == 0 : residue_value() == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rat() == 1 : residue_value() == 1 % field_.modulus();
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw input_error("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, mpq_class(rat() + o.rat()));
    std::uint32_t p = field_.modulus();
    return Scalar(field_, (residue_value() + o.residue_value()) % p);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, mpq_class(rat() - o.rat()));
    std::uint32_t p = field_.modulus();
    return Scalar(field_, (residue_value() + p - o.residue_value()) % p);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, mpq_class(rat() * o.rat()));
    std::uint64_t prod = std::uint64_t(residue_value()) * o.residue_value();
    return Scalar(field_, static_cast<std::uint32_t>(prod % field_.modulus()));
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, mpq_class(-rat()));
    std::uint32_t p = field_.modulus();
    return Scalar(field_, (p - residue_value()) % p);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("inverse of zero");
    if (field_.is_rationals()) return Scalar(field_, mpq_class(1 / rat()));
    return Scalar(field_, mod_inverse(residue_value(), field_.modulus()));
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rationals() ? rat() == o.rat() : residue_value() == o.residue_value();
}

std::string Scalar::to_string() const {
    if (field_.is_rationals()) return rat().get_str();
    return std::to_string(residue_value());
}

} // namespace novikov
