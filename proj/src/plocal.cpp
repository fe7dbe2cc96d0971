#include "kucalc/plocal.hpp"

#include <stdexcept>

namespace kucalc {

std::uint64_t Valuation::value() const
{
    if (infinite_)
        throw std::logic_error("valuation is infinite");
    return value_;
}

Valuation Valuation::operator+(const Valuation& other) const
{
    if (infinite_ || other.infinite_)
        return infinity();
    return Valuation(value_ + other.value_);
}

std::string Valuation::to_string() const
{
    return infinite_ ? std::string("inf") : std::to_string(value_);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

BigInt ipow(std::uint64_t p, std::uint64_t k)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

Valuation vp(const BigInt& x, std::uint64_t p)
{
    if (sgn(x) == 0)
        return Valuation::infinity();
    if (p == 2)
        return Valuation(mpz_scan1(x.get_mpz_t(), 0));
    BigInt rest = x;
    std::uint64_t k = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++k;
    }
    return Valuation(k);
}

BigInt binom(std::uint64_t m, std::uint64_t k)
{
    BigInt r;
    if (k > m)
        return r;
    mpz_bin_uiui(r.get_mpz_t(), m, k);
    return r;
}

PLocalScalar PLocalScalar::fraction(const BigInt& num, const BigInt& den, std::uint64_t p)
{
    if (sgn(den) == 0)
        throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    if (mpz_divisible_ui_p(q.get_den_mpz_t(), p))
        throw std::domain_error("denominator " + q.get_den().get_str() + " is not prime to " +
                                std::to_string(p));
    return PLocalScalar(q);
}

PLocalScalar PLocalScalar::divided_by_unit(const PLocalScalar& unit, std::uint64_t p) const
{
    if (vp(unit, p) != Valuation(0))
        throw std::domain_error(unit.to_string() + " is not a " + std::to_string(p) + "-unit");
    return PLocalScalar(mpq_class(q_ / unit.q_));
}

BigInt PLocalScalar::residue(const BigInt& modulus) const
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), q_.get_num_mpz_t(), modulus.get_mpz_t());
    if (q_.get_den() != 1) {
        r *= inverse_mod(q_.get_den(), modulus);
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    }
    return r;
}

std::string PLocalScalar::to_string() const
{
    return q_.get_str();
}

Valuation vp(const PLocalScalar& x, std::uint64_t p)
{
    return vp(x.numerator(), p);
}

PLocalScalar unit_divide(const PLocalScalar& x, std::uint64_t p, std::uint64_t k)
{
    if (x.is_zero())
        return x;
    if (vp(x, p) < Valuation(k))
        throw std::domain_error(x.to_string() + " is not divisible by " + std::to_string(p) +
                                "^" + std::to_string(k));
    return PLocalScalar::fraction(x.numerator(), x.denominator() * ipow(p, k), p);
}

BigInt inverse_mod(const BigInt& unit, const BigInt& modulus)
{
    BigInt inv;
    if (modulus == 1)
        return inv;
    if (mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::domain_error(unit.get_str() + " is not invertible modulo " + modulus.get_str());
    return inv;
}

}  // namespace kucalc
