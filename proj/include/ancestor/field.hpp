#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace anc {

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant is violated.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A coefficient field: the rationals or a prime field F_p.
class Field {
public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);
    static Field parse(std::string_view text);
    static Field standard() { return prime(101); }

    Kind kind() const { return p_ == 0 ? Kind::Rationals : Kind::Prime; }
    bool isRationals() const { return p_ == 0; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }
    std::string toString() const;

    bool operator==(const Field&) const = default;

private:
    friend class Scalar;
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(const Field& field, long value);
    Scalar(const Field& field, const mpq_class& value);

    static Scalar zero(const Field& field) { return Scalar(field, 0L); }
    static Scalar one(const Field& field) { return Scalar(field, 1L); }
    /// Accepts "a" or "a/b" with integers a, b.
    static Scalar parse(const Field& field, std::string_view text);

    Field field() const;
    bool isZero() const;
    bool isOne() const;
    std::string toString() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;
    Scalar pow(unsigned e) const;

    bool operator==(const Scalar& o) const;
    /// Total order on representatives: residues in [0,p) or rationals by value.
    std::strong_ordering canonicalCompare(const Scalar& o) const;

    /// Residue in [0,p) for prime fields.
    std::uint32_t residue() const;
    const mpq_class& rational() const;

private:
    void requireSameField(const Scalar& o) const;

    std::uint32_t p_ = 0;
    std::variant<std::uint32_t, mpq_class> v_{std::uint32_t{0}};
};

}  // namespace anc
