#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>

#include "hvf/errors.hpp"
#include "hvf/numfield.hpp"

using namespace hvf;

namespace
{

int euler_phi(int n)
{
    int count = 0;
    for (int k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) {
            ++count;
        }
    }
    return count;
}

// prod (x - 2cos(k pi/mu)) over 0 < k < mu with gcd(k, 2mu) = 1, in long double.
std::vector<long double> conjugate_product(int mu)
{
    std::vector<long double> p{1.0L};
    for (int k = 1; k < mu; ++k) {
        if (std::gcd(k, 2 * mu) != 1) {
            continue;
        }
        const long double root = 2 * std::cos(k * std::acos(-1.0L) / mu);
        std::vector<long double> next(p.size() + 1, 0.0L);
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] += p[i];
            next[i] -= root * p[i];
        }
        p = next;
    }
    return p;
}

FieldElement random_element(int mu, std::mt19937_64 &gen)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    const int d = FieldContext::get(mu)->degree();
    std::vector<Rational> c;
    for (int i = 0; i < d; ++i) {
        c.emplace_back(num(gen), den(gen));
    }
    return FieldElement(FieldContext::get(mu), c);
}

} // namespace

TEST_CASE("rational parsing and canonical form")
{
    CHECK(Rational::parse("6/-4") == Rational(-3, 2));
    CHECK(Rational::parse("-24/1").str() == "-24/1");
    CHECK(Rational::parse("7").str() == "7/1");
    CHECK(Rational::parse("-1.25") == Rational(-5, 4));
    CHECK(Rational(4, 6).str() == "2/3");
    CHECK(Rational(3, -9).denominator() == 3);
    CHECK_THROWS_AS(Rational::parse("1/0"), division_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), division_error);
    CHECK_THROWS_AS(Rational::parse("abc"), domain_error);
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3));
}

TEST_CASE("minimal polynomial examples")
{
    CHECK(minimal_polynomial(3).str() == "x - 1");
    CHECK(minimal_polynomial(4).str() == "x^2 - 2");
    CHECK(minimal_polynomial(5).str() == "x^2 - x - 1");
    CHECK(minimal_polynomial(7).str() == "x^3 - x^2 - 2x + 1");
    CHECK_THROWS_AS(minimal_polynomial(2), domain_error);
    CHECK_THROWS_AS(FieldContext::get(1), domain_error);
}

TEST_CASE("minimal polynomial matches the product over Galois conjugates")
{
    for (int mu = 3; mu <= 24; ++mu) {
        CAPTURE(mu);
        const IntPolynomial m = minimal_polynomial(mu);
        CHECK(m.degree() == euler_phi(2 * mu) / 2);
        CHECK(m.leading() == 1);
        const auto p = conjugate_product(mu);
        REQUIRE(p.size() == m.coeffs.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(std::llround(p[i]) == m.coeffs[i].get_si());
        }
        // m(2cos(pi/mu)) vanishes numerically.
        const long double x = 2 * std::cos(std::acos(-1.0L) / mu);
        long double acc = 0;
        for (std::size_t i = m.coeffs.size(); i-- > 0;) {
            acc = acc * x + m.coeffs[i].get_d();
        }
        CHECK(std::abs(acc) < 1e-12L);
    }
}

TEST_CASE("field arithmetic examples")
{
    const FieldElement w5 = FieldElement::varpi(5);
    CHECK(w5 * w5 == w5 + FieldElement(1));
    const FieldElement w4 = FieldElement::varpi(4);
    CHECK(w4 * w4 == FieldElement::constant(4, Rational(2)));
    CHECK(w4.inverse() == w4 * FieldElement(Rational(1, 2)));
    CHECK(w4 * w4.inverse() == FieldElement(1));
    CHECK_THROWS_AS(FieldElement::constant(5, Rational(0)).inverse(), division_error);
    CHECK_THROWS_AS(FieldElement::varpi(5) + FieldElement::varpi(7), domain_error);
}

TEST_CASE("real embedding")
{
    for (int mu = 3; mu <= 24; ++mu) {
        CAPTURE(mu);
        CHECK(std::abs(FieldElement::varpi(mu).to_double() - 2 * std::cos(M_PI / mu)) < 1e-12);
    }
    CHECK(FieldElement::varpi(5).embed_string(11).rfind("1.6180339887", 0) == 0);
    CHECK(FieldElement::varpi(3).embed_string(5) == "1.0000");
    CHECK(FieldElement::varpi(6).embed_string(11).rfind("1.7320508076", 0) == 0);
    CHECK_THROWS_AS(FieldElement::varpi(5).embed_string(0), domain_error);
    // sqrt(2) to 40 significant digits.
    CHECK(FieldElement::varpi(4).embed_string(40) == "1.414213562373095048801688724209698078570");
}

TEST_CASE("minimal polynomial evaluated at varpi reduces to zero")
{
    for (int mu = 3; mu <= 24; ++mu) {
        CAPTURE(mu);
        const IntPolynomial m = minimal_polynomial(mu);
        const FieldElement w = FieldElement::varpi(mu);
        FieldElement acc = FieldElement::constant(mu, Rational(0));
        for (std::size_t i = m.coeffs.size(); i-- > 0;) {
            acc = acc * w + FieldElement(Rational(m.coeffs[i]));
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937_64 gen(7);
    for (int mu : {4, 5, 7, 9, 11, 12, 15}) {
        for (int trial = 0; trial < 20; ++trial) {
            const FieldElement a = random_element(mu, gen);
            const FieldElement b = random_element(mu, gen);
            const FieldElement c = random_element(mu, gen);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == FieldElement::constant(mu, Rational(1)));
            }
        }
    }
}

TEST_CASE("field element text forms")
{
    const FieldElement w = FieldElement::varpi(5);
    CHECK((w * w).str() == "1 + varpi");
    CHECK((w * w).latex() == "1 + \\varpi");
    CHECK((FieldElement(Rational(-1, 2)) * w).latex() == "-\\frac{1}{2}\\varpi");
    const auto c = (w * w).coeffs();
    REQUIRE(c.size() == 2);
    CHECK(c[0].str() == "1/1");
}
