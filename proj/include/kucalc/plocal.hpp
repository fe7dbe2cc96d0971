#pragma once

// Exact arithmetic in Z localized at a prime p.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace kucalc {

using BigInt = mpz_class;

/// A p-adic valuation: a nonnegative integer or +infinity (valuation of zero).
class Valuation {
public:
    explicit Valuation(std::uint64_t value) : value_(value), infinite_(false) {}

    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    /// Throws std::logic_error for +infinity.
    std::uint64_t value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b)
    {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    Valuation operator+(const Valuation& other) const;

    std::string to_string() const;

private:
    Valuation() : value_(0), infinite_(true) {}

    std::uint64_t value_;
    bool infinite_;
};

bool is_prime(std::uint64_t n);

/// p^k as a big integer.
BigInt ipow(std::uint64_t p, std::uint64_t k);

/// Valuation of an integer; +infinity for zero.
Valuation vp(const BigInt& x, std::uint64_t p);

/// Exact C(m, k); zero when k > m.
BigInt binom(std::uint64_t m, std::uint64_t k);

/// An element of Z_(p): a reduced fraction whose denominator is prime to p.
///
/// The scalar does not carry p itself. Constructors that can introduce a
/// denominator take p and reject denominators divisible by it; sums,
/// differences and products of p-local values stay p-local.
class PLocalScalar {
public:
    PLocalScalar() = default;
    PLocalScalar(long value) : q_(value) {}
    PLocalScalar(const BigInt& value) : q_(value) {}

    /// num/den reduced; throws std::domain_error when p divides the reduced denominator.
    static PLocalScalar fraction(const BigInt& num, const BigInt& den, std::uint64_t p);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    PLocalScalar operator-() const { return PLocalScalar(mpq_class(-q_)); }
    PLocalScalar& operator+=(const PLocalScalar& o)
    {
        q_ += o.q_;
        return *this;
    }
    PLocalScalar& operator-=(const PLocalScalar& o)
    {
        q_ -= o.q_;
        return *this;
    }
    PLocalScalar& operator*=(const PLocalScalar& o)
    {
        q_ *= o.q_;
        return *this;
    }
    friend PLocalScalar operator+(PLocalScalar a, const PLocalScalar& b) { return a += b; }
    friend PLocalScalar operator-(PLocalScalar a, const PLocalScalar& b) { return a -= b; }
    friend PLocalScalar operator*(PLocalScalar a, const PLocalScalar& b) { return a *= b; }

    friend bool operator==(const PLocalScalar& a, const PLocalScalar& b) { return a.q_ == b.q_; }

    /// Divides by a p-unit. Throws std::domain_error if `unit` is not a p-unit.
    PLocalScalar divided_by_unit(const PLocalScalar& unit, std::uint64_t p) const;

    /// Least nonnegative residue modulo `modulus` (a power of p).
    BigInt residue(const BigInt& modulus) const;

    /// "a" or "a/b".
    std::string to_string() const;

private:
    explicit PLocalScalar(const mpq_class& q) : q_(q) {}

    mpq_class q_;
};

/// +infinity for zero, otherwise the valuation of the numerator.
Valuation vp(const PLocalScalar& x, std::uint64_t p);

/// x / p^k. Throws std::domain_error when vp(x) < k.
PLocalScalar unit_divide(const PLocalScalar& x, std::uint64_t p, std::uint64_t k);

/// Inverse of a p-unit modulo `modulus`.
BigInt inverse_mod(const BigInt& unit, const BigInt& modulus);

}  // namespace kucalc
