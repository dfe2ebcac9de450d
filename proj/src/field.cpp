#include "ancestor/field.hpp"

#include <charconv>

namespace anc {

namespace {

bool isPrime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

std::uint32_t reduce(long value, std::uint32_t p) {
    long r = value % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t powMod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!isPrime(p)) throw PreconditionError("field characteristic is not prime: " + std::to_string(p));
    if (p > 2147483647u) throw PreconditionError("prime too large");
    return Field(p);
}

Field Field::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.substr(0, 3) == "Fp:") {
        std::uint32_t p = 0;
        auto body = text.substr(3);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec != std::errc() || ptr != body.data() + body.size())
            throw PreconditionError("malformed field: " + std::string(text));
        return prime(p);
    }
    throw PreconditionError("malformed field: " + std::string(text));
}

std::string Field::toString() const {
    return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(const Field& field, long value) : p_(field.characteristic()) {
    if (p_ == 0)
        v_ = mpq_class(value);
    else
        v_ = reduce(value, p_);
}

Scalar::Scalar(const Field& field, const mpq_class& value) : p_(field.characteristic()) {
    if (p_ == 0) {
        v_ = value;
        return;
    }
    mpz_class num = value.get_num() % p_;
    if (num < 0) num += p_;
    mpz_class den = value.get_den() % p_;
    if (den == 0) throw PreconditionError("denominator divisible by the characteristic");
    std::uint32_t n = static_cast<std::uint32_t>(num.get_ui());
    std::uint32_t d = static_cast<std::uint32_t>(den.get_ui());
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(n) * powMod(d, p_ - 2, p_) % p_);
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
    mpq_class q;
    std::string s(text);
    if (s.empty() || q.set_str(s, 10) != 0) throw PreconditionError("malformed scalar: " + s);
    if (q.get_den() == 0) throw PreconditionError("zero denominator: " + s);
    q.canonicalize();
    return Scalar(field, q);
}

Field Scalar::field() const { return Field(p_); }

bool Scalar::isZero() const {
    return p_ == 0 ? std::get<mpq_class>(v_) == 0 : std::get<std::uint32_t>(v_) == 0;
}

bool Scalar::isOne() const {
    return p_ == 0 ? std::get<mpq_class>(v_) == 1 : std::get<std::uint32_t>(v_) == 1;
}

std::string Scalar::toString() const {
    if (p_ == 0) return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<std::uint32_t>(v_));
}

void Scalar::requireSameField(const Scalar& o) const {
    if (p_ != o.p_) throw PreconditionError("field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    requireSameField(o);
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
    else
        r.v_ = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(std::get<std::uint32_t>(v_)) + std::get<std::uint32_t>(o.v_)) % p_);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.p_ = p_;
    if (p_ == 0) {
        r.v_ = mpq_class(-std::get<mpq_class>(v_));
    } else {
        std::uint32_t a = std::get<std::uint32_t>(v_);
        r.v_ = a == 0 ? 0u : p_ - a;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    requireSameField(o);
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
    else
        r.v_ = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(std::get<std::uint32_t>(v_)) * std::get<std::uint32_t>(o.v_) % p_);
    return r;
}

Scalar Scalar::inverse() const {
    if (isZero()) throw PreconditionError("division by zero");
    Scalar r;
    r.p_ = p_;
    if (p_ == 0)
        r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
    else
        r.v_ = powMod(std::get<std::uint32_t>(v_), p_ - 2, p_);
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(unsigned e) const {
    Scalar r = one(field());
    Scalar b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    if (p_ == 0) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    return std::get<std::uint32_t>(v_) == std::get<std::uint32_t>(o.v_);
}

std::strong_ordering Scalar::canonicalCompare(const Scalar& o) const {
    requireSameField(o);
    if (p_ == 0) {
        int c = cmp(std::get<mpq_class>(v_), std::get<mpq_class>(o.v_));
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    return std::get<std::uint32_t>(v_) <=> std::get<std::uint32_t>(o.v_);
}

std::uint32_t Scalar::residue() const {
    if (p_ == 0) throw PreconditionError("residue of a rational");
    return std::get<std::uint32_t>(v_);
}

const mpq_class& Scalar::rational() const {
    if (p_ != 0) throw PreconditionError("rational value of a residue");
    return std::get<mpq_class>(v_);
}

}  // namespace anc
