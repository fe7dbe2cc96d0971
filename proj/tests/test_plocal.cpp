#include "kucalc/plocal.hpp"

#include "properties.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace kucalc;

TEST_CASE("vp on integers")
{
    CHECK(vp(BigInt(6), 2) == Valuation(1));
    CHECK(vp(BigInt(84), 3) == Valuation(1));
    CHECK(vp(BigInt(0), 5).is_infinite());
    CHECK(vp(BigInt(-48), 2) == Valuation(4));
    CHECK(vp(BigInt(7), 7) == Valuation(1));
    CHECK(vp(BigInt(1), 3) == Valuation(0));
}

TEST_CASE("valuation ordering and arithmetic")
{
    const Valuation inf = Valuation::infinity();
    CHECK(Valuation(3) < inf);
    CHECK(Valuation(0) < Valuation(1));
    CHECK(inf == Valuation::infinity());
    CHECK((Valuation(2) + Valuation(5)) == Valuation(7));
    CHECK((Valuation(2) + inf).is_infinite());
    CHECK_THROWS_AS(inf.value(), std::logic_error);
    CHECK(inf.to_string() == "inf");
    CHECK(Valuation(4).to_string() == "4");
}

TEST_CASE("binom")
{
    CHECK(binom(4, 2) == 6);
    CHECK(binom(9, 3) == 84);
    CHECK(binom(25, 2) == 300);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("binom(p^n, k+1) has valuation n - vp(k+1)")
{
    for (std::uint64_t p : {2u, 3u, 5u})
        for (unsigned n = 1; n <= 3; ++n) {
            const std::uint64_t pn = ipow(p, n).get_ui();
            for (std::uint64_t k = 0; k < pn; ++k) {
                const std::uint64_t e = vp(BigInt(k + 1), p).value();
                CHECK(vp(binom(pn, k + 1), p) == Valuation(n - e));
            }
        }
}

TEST_CASE("unit_divide")
{
    CHECK(unit_divide(PLocalScalar(6), 2, 1) == PLocalScalar(3));
    CHECK(unit_divide(PLocalScalar(84), 3, 1) == PLocalScalar(28));
    CHECK_THROWS_AS(unit_divide(PLocalScalar(6), 2, 2), std::domain_error);
    CHECK(unit_divide(PLocalScalar(0), 5, 9).is_zero());
    CHECK(unit_divide(PLocalScalar::fraction(12, 5, 2), 2, 2) == PLocalScalar::fraction(3, 5, 2));
}

TEST_CASE("p-local fractions")
{
    const PLocalScalar h = PLocalScalar::fraction(2, 6, 2);
    CHECK(h.numerator() == 1);
    CHECK(h.denominator() == 3);
    CHECK(h.to_string() == "1/3");
    CHECK_THROWS_AS(PLocalScalar::fraction(1, 4, 2), std::domain_error);
    CHECK_THROWS_AS(PLocalScalar::fraction(1, 0, 3), std::domain_error);
    CHECK(PLocalScalar::fraction(-4, 2, 3) == PLocalScalar(-2));
    CHECK(PLocalScalar::fraction(0, 7, 3).denominator() == 1);
    CHECK(vp(PLocalScalar::fraction(18, 5, 3), 3) == Valuation(2));
}

TEST_CASE("residues and inverses")
{
    CHECK(PLocalScalar(-6).residue(4) == 2);
    CHECK(PLocalScalar(6).residue(4) == 2);
    // 1/3 = 3 mod 4
    CHECK(PLocalScalar::fraction(1, 3, 2).residue(4) == 3);
    CHECK(PLocalScalar::fraction(-2, 5, 3).residue(9) == 5);
    CHECK(inverse_mod(3, 4) == 3);
    CHECK(inverse_mod(2, 9) == 5);
    CHECK(PLocalScalar(10).divided_by_unit(PLocalScalar(5), 2) == PLocalScalar(2));
    CHECK_THROWS_AS(PLocalScalar(10).divided_by_unit(PLocalScalar(4), 2), std::domain_error);
}

TEST_CASE("is_prime against a sieve")
{
    std::vector<bool> composite(500, false);
    for (std::size_t k = 2; k < composite.size(); ++k)
        for (std::size_t m = 2 * k; m < composite.size(); m += k)
            composite[m] = true;
    for (std::uint64_t k = 0; k < composite.size(); ++k)
        CHECK(is_prime(k) == (k >= 2 && !composite[k]));
}

TEST_CASE("property: valuation identities")
{
    const auto run = kutest::prop_valuation(0x5eed0001, 300);
    INFO(run.failure.value_or(""));
    CHECK(run.ok());
    CHECK(run.cases == 300);
}
