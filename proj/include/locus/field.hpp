#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "locus/errors.hpp"

namespace locus {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

/// Largest admitted prime modulus.  Residue products then fit in 64 bits.
inline constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Identifies the scalar field: the rationals, or Z_p for a verified prime p.
class FieldDescriptor {
  public:
    static FieldDescriptor rationals() { return FieldDescriptor(FieldKind::Rationals, 0); }

    static FieldDescriptor prime_field(std::int64_t p) {
        if (p > kMaxModulus)
            throw InputError("prime_field: modulus exceeds 2^31 - 1");
        if (!is_prime(p))
            throw CompositeModulusError("prime_field: " + std::to_string(p) + " is not prime");
        return FieldDescriptor(FieldKind::PrimeField, p);
    }

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

    /// The modulus p; only meaningful for PrimeField.
    std::int64_t modulus() const { return p_; }

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

  private:
    FieldDescriptor(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::int64_t p_;
};

/// An exact scalar: a reduced arbitrary-precision rational, or the least
/// non-negative residue mod p.  Immutable after construction.
class FieldElement {
  public:
    /// Defaults to the rational zero.
    FieldElement() : desc_(FieldDescriptor::rationals()) {}

    static FieldElement zero(const FieldDescriptor& d) { return from_integer(d, 0); }
    static FieldElement one(const FieldDescriptor& d) { return from_integer(d, 1); }

    static FieldElement from_integer(const FieldDescriptor& d, const BigInt& value) {
        FieldElement x(d);
        if (d.is_rationals()) {
            x.rat_ = value;
        } else {
            x.residue_ = reduce(value, d.modulus());
        }
        return x;
    }

    /// The reduced rational num/den.  Throws on den = 0.
    static FieldElement from_rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw DivisionByZeroError("rational with zero denominator");
        FieldElement x(FieldDescriptor::rationals());
        // cpp_rational rejects negative denominators outright.
        x.rat_ = den < 0 ? BigRational(-num, -den) : BigRational(num, den);
        return x;
    }

    static FieldElement from_rational(BigRational value) {
        FieldElement x(FieldDescriptor::rationals());
        x.rat_ = std::move(value);
        return x;
    }

    static FieldElement from_residue(const FieldDescriptor& d, std::int64_t residue) {
        return from_integer(d, residue);
    }

    const FieldDescriptor& descriptor() const { return desc_; }

    bool is_zero() const {
        return desc_.is_rationals() ? rat_.is_zero() : residue_ == 0;
    }

    /// Rational accessor; the value as num/den in lowest terms.
    const BigRational& rational() const { return rat_; }
    /// PrimeField accessor; the canonical residue in [0, p).
    std::int64_t residue() const { return residue_; }

    /// True for rationals with denominator 1 and for every residue.
    bool is_integer() const {
        return desc_.is_prime_field() || denominator(rat_) == 1;
    }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
        require_same(x, y);
        FieldElement z(x.desc_);
        if (x.desc_.is_rationals())
            z.rat_ = x.rat_ + y.rat_;
        else
            z.residue_ = (x.residue_ + y.residue_) % x.desc_.modulus();
        return z;
    }

    friend FieldElement operator-(const FieldElement& x) {
        FieldElement z(x.desc_);
        if (x.desc_.is_rationals())
            z.rat_ = -x.rat_;
        else
            z.residue_ = x.residue_ == 0 ? 0 : x.desc_.modulus() - x.residue_;
        return z;
    }

    friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
        return x + (-y);
    }

    friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
        require_same(x, y);
        FieldElement z(x.desc_);
        if (x.desc_.is_rationals())
            z.rat_ = x.rat_ * y.rat_;
        else
            z.residue_ = mulmod(x.residue_, y.residue_, x.desc_.modulus());
        return z;
    }

    FieldElement inverse() const {
        if (is_zero())
            throw DivisionByZeroError("inverse of zero");
        FieldElement z(desc_);
        if (desc_.is_rationals()) {
            z.rat_ = numerator(rat_) < 0 ? BigRational(-denominator(rat_), -numerator(rat_))
                                         : BigRational(denominator(rat_), numerator(rat_));
        } else {
            z.residue_ = invmod(residue_, desc_.modulus());
        }
        return z;
    }

    friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
        require_same(x, y);
        return x * y.inverse();
    }

    /// x^e by repeated squaring; 0^0 = 1 (empty product).
    FieldElement pow(std::uint64_t e) const {
        FieldElement acc = one(desc_);
        FieldElement base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        if (x.desc_ != y.desc_) return false;
        return x.desc_.is_rationals() ? x.rat_ == y.rat_ : x.residue_ == y.residue_;
    }

  private:
    explicit FieldElement(const FieldDescriptor& d) : desc_(d) {}

    static void require_same(const FieldElement& x, const FieldElement& y) {
        if (x.desc_ != y.desc_)
            throw FieldMismatchError("operands belong to different fields");
    }

    static std::int64_t reduce(const BigInt& value, std::int64_t p) {
        BigInt r = value % p;
        if (r < 0) r += p;
        return static_cast<std::int64_t>(r);
    }

    // Safe without wider intermediates: residues stay below 2^31.
    static std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
        return (a * b) % p;
    }

    // Extended gcd; p prime and a in [1, p) guarantee gcd(a, p) = 1.
    static std::int64_t invmod(std::int64_t a, std::int64_t p) {
        std::int64_t old_r = a, r = p;
        std::int64_t old_s = 1, s = 0;
        while (r != 0) {
            std::int64_t q = old_r / r;
            std::int64_t t = old_r - q * r;
            old_r = r; r = t;
            t = old_s - q * s;
            old_s = s; s = t;
        }
        return old_s < 0 ? old_s + p : old_s;
    }

    FieldDescriptor desc_;
    BigRational rat_;            // Rationals payload
    std::int64_t residue_ = 0;   // PrimeField payload
};

/// Canonical text: "-3/4", "0", "5" for rationals; the residue for Z_p.
inline std::string format_element(const FieldElement& x) {
    if (x.descriptor().is_prime_field())
        return std::to_string(x.residue());
    const BigRational& q = x.rational();
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

namespace detail {

inline bool parse_bigint(const std::string& text, std::size_t& pos, bool allow_sign, BigInt& out) {
    std::size_t start = pos;
    bool negative = false;
    if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t digits_from = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits_from) {
        pos = start;
        return false;
    }
    out = BigInt(text.substr(digits_from, pos - digits_from));
    if (negative) out = -out;
    return true;
}

}  // namespace detail

/// Grammar: sign? digits ("/" digits)? over the rationals; sign? digits over
/// Z_p (reduced mod p).  Round-trip stable with format_element.
inline FieldElement parse_element(const std::string& text, const FieldDescriptor& d) {
    std::size_t pos = 0;
    BigInt num;
    if (!detail::parse_bigint(text, pos, /*allow_sign=*/true, num))
        throw ParseError("malformed field element: '" + text + "'");
    if (d.is_prime_field()) {
        if (pos != text.size())
            throw ParseError("malformed residue: '" + text + "'");
        return FieldElement::from_integer(d, num);
    }
    BigInt den = 1;
    if (pos < text.size()) {
        if (text[pos] != '/')
            throw ParseError("malformed rational: '" + text + "'");
        ++pos;
        if (!detail::parse_bigint(text, pos, /*allow_sign=*/false, den) || pos != text.size())
            throw ParseError("malformed rational: '" + text + "'");
        if (den == 0)
            throw ParseError("zero denominator: '" + text + "'");
    }
    return FieldElement::from_rational(num, den);
}

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    return os << format_element(x);
}

}  // namespace locus
