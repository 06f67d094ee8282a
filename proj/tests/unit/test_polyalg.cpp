#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "poisson/errors.hpp"
#include "poisson/parser.hpp"
#include "poisson/tensor.hpp"
#include "random.hpp"

using namespace poisson;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};
const std::vector<std::string> xy{"x", "y"};

Polynomial poly(const std::string& text, const std::vector<std::string>& vars = xyz)
{
    return parse_poly(text, vars);
}

std::vector<Rational> random_point(test::Rng& rng, std::size_t n)
{
    std::vector<Rational> p(n);
    for (auto& v : p)
        v = rng.rational();
    return p;
}

} // namespace

TEST_CASE("rationals are stored in lowest terms")
{
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7").to_string() == "7");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("parser expands and normalises")
{
    const Polynomial p = poly("x*y - 3*z");
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient({1, 1, 0}) == Rational(1));
    CHECK(p.coefficient({0, 0, 1}) == Rational(-3));

    CHECK(poly("0", xy).is_zero());

    const Polynomial sq = poly("(x + 1/2*y)^2", xy);
    CHECK(sq.term_count() == 3);
    CHECK(sq.coefficient({2, 0}) == Rational(1));
    CHECK(sq.coefficient({1, 1}) == Rational(1));
    CHECK(sq.coefficient({0, 2}) == Rational(1, 4));

    CHECK(poly("-x + x") == Polynomial(3));
    CHECK(poly(" 2 * ( x - y ) ^ 0 ") == Polynomial::constant(3, 2));
    CHECK(poly("4/6*x") == poly("2/3*x"));
}

TEST_CASE("parser reports errors with positions")
{
    try {
        poly("2x");
        FAIL("implicit multiplication accepted");
    } catch (const ParseError& e) {
        CHECK(e.position() == 1);
    }
    try {
        poly("x + w");
        FAIL("unknown variable accepted");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("unknown variable 'w'") != std::string::npos);
    }
    CHECK_THROWS_AS(poly("x^y"), ParseError);
    CHECK_THROWS_AS(poly("x^-1"), ParseError);
    CHECK_THROWS_AS(poly("(x + y"), ParseError);
    CHECK_THROWS_AS(poly("x + "), ParseError);
    CHECK_THROWS_AS(poly("1/0"), ParseError);
    CHECK_THROWS_AS(poly("x - - y"), ParseError);
    CHECK_THROWS_AS(poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("x", std::vector<std::string>{"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x", std::vector<std::string>{"1x"}), std::invalid_argument);
}

TEST_CASE("canonical serialisation")
{
    CHECK(to_string(poly("3*z - x*y + 1/2"), xyz) == "-x*y + 3*z + 1/2");
    CHECK(to_string(poly("y^2*x - x^3"), xyz) == "-x^3 + x*y^2");
    CHECK(to_string(Polynomial(3), xyz) == "0");
    CHECK(to_string(poly("-1"), xyz) == "-1");
}

TEST_CASE("basic arithmetic")
{
    const std::vector<std::string> x{"x"};
    CHECK(parse_poly("x^2", x).derivative(0) == parse_poly("2*x", x));
    CHECK(poly("x + y") * poly("x - y") == poly("x^2 - y^2"));
    const Polynomial p = poly("x^2*z - 1/3*y + 7");
    CHECK((p + p * Rational(-1)).is_zero());
    CHECK(Polynomial(3).degree() == -1);
    CHECK(p.degree() == 3);
    CHECK_THROWS_AS(Polynomial(2) + Polynomial(3), DimensionError);
}

TEST_CASE("ring axioms and evaluation on random polynomials")
{
    test::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        const Polynomial p = rng.poly(n, 3), q = rng.poly(n, 3), r = rng.poly(n, 3);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * Polynomial::constant(n, 1) == p);
        CHECK((p - p).is_zero());
        // evaluation is a ring homomorphism
        const auto pt = random_point(rng, n);
        CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
        CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
        // product rule
        const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
        CHECK((p * q).derivative(i) == p.derivative(i) * q + p * q.derivative(i));
        // round trip through text
        const auto names = default_var_names(n);
        CHECK(parse_poly(to_string(p, names), names) == p);
    }
}

TEST_CASE("substitution is composition")
{
    test::Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        const Polynomial p = rng.poly(n, 3);
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < n; ++i)
            images.push_back(rng.poly(n, 1));
        const auto pt = random_point(rng, n);
        std::vector<Rational> inner;
        for (const auto& g : images)
            inner.push_back(g.evaluate(pt));
        CHECK(p.substitute(images).evaluate(pt) == p.evaluate(inner));
    }
}

TEST_CASE("wedge products")
{
    const Form dx = coordinate_differential(2, 0), dy = coordinate_differential(2, 1);
    const Form area = wedge(dx, dy);
    CHECK(area.coefficient({0, 1}) == Polynomial::constant(2, 1));
    CHECK(wedge(dx, dx).is_zero());
    CHECK(wedge(dy, dx) == -area);

    const Form x_dy = Polynomial::variable(3, 0) * coordinate_differential(3, 1);
    const Form w = wedge(x_dy, coordinate_differential(3, 2));
    CHECK(w == Form::basis(3, {1, 2}, Polynomial::variable(3, 0)));
    CHECK_THROWS_AS(wedge(dx, coordinate_differential(3, 0)), DimensionError);
}

TEST_CASE("wedge is graded commutative and associative")
{
    test::Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto ka = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n)));
        const auto kb = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n)));
        const auto kc = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n)));
        const Form a = rng.form(n, ka), b = rng.form(n, kb), c = rng.form(n, kc);
        const Form ab = wedge(a, b), ba = wedge(b, a);
        CHECK(ab == ((ka * kb) % 2 == 0 ? ba : -ba));
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        const Multivector u = rng.field(n, ka), v = rng.field(n, kb);
        CHECK(wedge(u, v) == ((ka * kb) % 2 == 0 ? wedge(v, u) : -wedge(v, u)));
    }
}

TEST_CASE("contraction examples")
{
    const Multivector dxdy = Multivector::basis(2, {0, 1});
    CHECK(contract(coordinate_differential(2, 0), dxdy) == coordinate_vector(2, 1));
    CHECK(contract(coordinate_vector(2, 0), Form::basis(2, {0, 1})) == coordinate_differential(2, 1));
    const Multivector x_dxdy = Polynomial::variable(2, 0) * dxdy;
    CHECK(contract(coordinate_differential(2, 1), x_dxdy) == -(Polynomial::variable(2, 0) * coordinate_vector(2, 0)));
    CHECK_THROWS_AS(contract(coordinate_differential(2, 0), Multivector::scalar(Polynomial::constant(2, 1))),
                    GradeError);
}

TEST_CASE("contraction is a graded derivation and matches the component oracle")
{
    test::Rng rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto ku = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n)));
        const auto kv = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n)));
        const Form alpha = rng.form(n, 1);
        const Multivector u = rng.field(n, ku), v = rng.field(n, kv);
        if (ku + kv >= 1) {
            Multivector rhs(n, ku + kv - 1);
            if (ku >= 1)
                rhs += wedge(contract(alpha, u), v);
            if (kv >= 1) {
                const Multivector t = wedge(u, contract(alpha, v));
                rhs += ku % 2 == 0 ? t : -t;
            }
            CHECK(contract(alpha, wedge(u, v)) == rhs);
        }
        const Multivector x = rng.field(n, 1);
        const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(n)));
        const Form w = rng.form(n, k);
        CHECK(contract(x, w) == oracle::contraction(x, w));
    }
}

TEST_CASE("tensors are stored in canonical order")
{
    test::Rng rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 4;
        const auto k = static_cast<std::size_t>(rng.uniform(0, 4));
        Form f(n, k);
        for (int e = 0; e < 4; ++e) {
            std::vector<std::size_t> idx;
            for (std::size_t q = 0; q < k; ++q)
                idx.push_back(static_cast<std::size_t>(rng.uniform(0, 3)));
            f.add_term(idx, rng.poly(n, 2));
        }
        for (const auto& [idx, c] : f.coeffs()) {
            CHECK(!c.is_zero());
            for (std::size_t q = 1; q < idx.size(); ++q)
                CHECK(idx[q - 1] < idx[q]);
        }
        const auto first = f.coeffs();
        CHECK(first == f.coeffs());
    }
    // alternation via sorting sign
    CHECK(Form::basis(3, {2, 0}) == -Form::basis(3, {0, 2}));
    CHECK(Form::basis(3, {1, 1}).is_zero());
    CHECK_THROWS_AS(Form::basis(2, {0, 3}), DimensionError);
}
