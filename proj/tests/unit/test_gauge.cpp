#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "poisson/errors.hpp"
#include "poisson/gauge.hpp"
#include "poisson/liealg.hpp"
#include "poisson/parser.hpp"
#include "random.hpp"

using namespace poisson;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

Polynomial P(const std::string& text, std::size_t n = 3)
{
    return parse_poly(text, std::vector<std::string>(xyz.begin(), xyz.begin() + static_cast<long>(n)));
}

PoissonStructure so3() { return linear_poisson(builtin("so3")); }

RationalMatrix constant_part(const PolyMatrix& m)
{
    RationalMatrix r(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            REQUIRE(m(i, j).is_constant());
            r(i, j) = m(i, j).constant_term();
        }
    return r;
}

RationalMatrix sum(const RationalMatrix& a, const RationalMatrix& b)
{
    RationalMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) += b(i, j);
    return r;
}

struct Admissible {
    PoissonStructure pi;
    Form b, c;
};

Admissible admissible(test::Rng& rng)
{
    const auto n = static_cast<std::size_t>(rng.uniform(3, 4));
    const PoissonStructure pi = PoissonStructure::checked(Multivector::basis(n, {0, 1}, rng.poly(n, 2, 3)));
    return {pi, rng.transverse_exact_form(n), rng.transverse_exact_form(n)};
}

// Nondegenerate constant bivector on R^2 or R^4.
PoissonStructure symplectic(test::Rng& rng, std::size_t n)
{
    for (;;) {
        Multivector pi(n, 2);
        for (const auto& idx : index_sets(n, 2))
            pi.add_term(idx, Polynomial::constant(n, rng.rational()));
        if (!constant_part(sharp_matrix(pi)).determinant().is_zero())
            return PoissonStructure::checked(pi);
    }
}

} // namespace

TEST_CASE("flat examples")
{
    const PolyMatrix m = flat(Form::basis(2, {0, 1}));
    // d_x -> dy, d_y -> -dx
    CHECK(m(1, 0) == Polynomial::constant(2, 1));
    CHECK(m(0, 1) == Polynomial::constant(2, -1));
    CHECK(m(0, 0).is_zero());
    CHECK(flat(Form(3, 2)) == PolyMatrix(3, 3));

    const Form b = Form::basis(3, {0, 2}, P("x"));
    const PolyMatrix f = flat(b);
    CHECK(f(2, 0) == P("x"));
    CHECK(f(0, 2) == P("-x"));
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(f(j, 1).is_zero());
    test::Rng rng(41);
    for (int t = 0; t < 50; ++t) {
        const Form w = rng.form(3, 2);
        const PolyMatrix fw = flat(w);
        for (std::size_t i = 0; i < 3; ++i) {
            const Form image = oracle::contraction(coordinate_vector(3, i), w);
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(fw(j, i) == image.coefficient({j}));
        }
    }
}

TEST_CASE("polynomial determinants and adjugates")
{
    test::Rng rng(42);
    for (int t = 0; t < 40; ++t) {
        const auto s = static_cast<std::size_t>(rng.uniform(1, 4));
        PolyMatrix m(s, 2);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                m(i, j) = rng.poly(2, 1, 2);
        const PolyMatrix adj = m.adjugate();
        PolyMatrix scaled(s, 2);
        for (std::size_t i = 0; i < s; ++i)
            scaled(i, i) = m.determinant();
        CHECK(m * adj == scaled);
        CHECK(adj * m == scaled);
    }
}

TEST_CASE("gauge transform examples")
{
    const PoissonStructure sym = PoissonStructure::checked(Multivector::basis(2, {0, 1}));
    // pi# is dx -> d_y, so omega = pi^{-1} = -dx^dy and omega + B = -2 dx^dy for B = -dx^dy.
    const PoissonStructure half = gauge_transform(sym, Form::basis(2, {0, 1}, Polynomial::constant(2, -1)));
    CHECK(half.bivector() == Multivector::basis(2, {0, 1}, Polynomial::constant(2, Rational(1, 2))));
    CHECK(half.is_verified());
    CHECK_THROWS_AS(gauge_transform(sym, Form::basis(2, {0, 1})), NotInvertibleError);
    CHECK(gauge_transform(sym, Form(2, 2)) == sym);

    const Polynomial det = gauge_determinant(so3().bivector(), Form::basis(3, {0, 1}));
    CHECK_FALSE(det.is_constant());
    // I + B-flat pi-sharp has diagonal (1 - z, 1 - z, 1) and is triangular in the frame dx, dy, dz.
    CHECK(det == P("(1 - z)^2"));
    CHECK_THROWS_AS(gauge_transform(so3(), Form::basis(3, {0, 1})), NotInvertibleError);

    const PoissonStructure r3 = PoissonStructure::checked(Multivector::basis(3, {0, 1}));
    CHECK_THROWS_AS(gauge_transform(r3, Form::basis(3, {0, 1}, P("z"))), NotClosedError);
    CHECK_THROWS_AS(gauge_transform(PoissonStructure(so3().bivector() + Multivector::basis(3, {0, 2}, P("x"))),
                                    Form(3, 2)),
                    NotPoissonError);
}

TEST_CASE("gauge transforms invert and add")
{
    test::Rng rng(43);
    for (int t = 0; t < 60; ++t) {
        const Admissible a = admissible(rng);
        const PoissonStructure pb = gauge_transform(a.pi, a.b);
        CHECK(jacobi_check(pb.bivector()));
        CHECK(gauge_transform(pb, -a.b) == a.pi);
        CHECK(gauge_transform(pb, a.c) == gauge_transform(a.pi, a.b + a.c));
    }
}

TEST_CASE("symplectic gauge transform inverts omega + B")
{
    test::Rng rng(44);
    int done = 0;
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = rng.coin() ? 2 : 4;
        const PoissonStructure pi = symplectic(rng, n);
        const Form b = rng.constant_form(n);
        const RationalMatrix omega = constant_part(sharp_matrix(pi.bivector())).inverse();
        const RationalMatrix target = sum(omega, constant_part(flat(b)));
        if (target.determinant().is_zero()) {
            CHECK_THROWS_AS(gauge_transform(pi, b), NotInvertibleError);
            continue;
        }
        const PoissonStructure pb = gauge_transform(pi, b);
        CHECK(constant_part(sharp_matrix(pb.bivector())) == target.inverse());
        ++done;
    }
    CHECK(done > 20);
}

TEST_CASE("affine maps")
{
    test::Rng rng(45);
    for (int t = 0; t < 40; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        const AffineMap f = rng.affine_map(n), g = rng.affine_map(n);
        CHECK(f.compose(f.inverse()) == AffineMap::identity(n));
        const Polynomial p = rng.poly(n, 3);
        CHECK(f.compose(g).pullback(p) == g.pullback(f.pullback(p)));
        CHECK(f.pushforward(f.pullback(p)) == p);
        const Form w = rng.form(n, static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n))));
        CHECK(de_rham_d(f.pullback(w)) == f.pullback(de_rham_d(w)));
        CHECK(f.pushforward(f.pullback(w)) == w);
    }
    std::vector<Rational> zero(2);
    RationalMatrix singular(2, 2);
    CHECK_THROWS_AS(AffineMap(singular, zero), NotInvertibleError);
}

TEST_CASE("gauge group membership")
{
    CHECK(is_member(GaugeElement::identity(3), so3()));
    RationalMatrix quarter(3, 3);
    quarter(0, 1) = Rational(-1);
    quarter(1, 0) = Rational(1);
    quarter(2, 2) = Rational(1);
    CHECK(is_member(GaugeElement(AffineMap(quarter, std::vector<Rational>(3)), Form(3, 2)), so3()));
    RationalMatrix stretch = RationalMatrix::identity(3);
    stretch(0, 0) = Rational(2);
    CHECK_FALSE(is_member(GaugeElement(AffineMap(stretch, std::vector<Rational>(3)), Form(3, 2)), so3()));
    std::vector<Rational> shift{Rational(1), Rational(0), Rational(0)};
    CHECK_FALSE(is_member(GaugeElement(AffineMap(RationalMatrix::identity(3), shift), Form(3, 2)), so3()));
    CHECK_THROWS_AS(GaugeElement(AffineMap::identity(3), Form::basis(3, {0, 1}, P("z"))), NotClosedError);

    test::Rng rng(46);
    const PoissonStructure zero = PoissonStructure::checked(Multivector(3, 2));
    for (int t = 0; t < 20; ++t) {
        CHECK(is_member(GaugeElement(rng.affine_map(3), rng.closed_two_form(3)), zero));
        CHECK(is_member(GaugeElement(AffineMap(rng.rotation3(), std::vector<Rational>(3)), Form(3, 2)), so3()));
    }
}

TEST_CASE("gauge group axioms")
{
    test::Rng rng(47);
    const PoissonStructure zero = PoissonStructure::checked(Multivector(3, 2));
    auto zero_element = [&] { return GaugeElement(rng.affine_map(3), rng.closed_two_form(3)); };
    auto rotation = [&] { return GaugeElement(AffineMap(rng.rotation3(), std::vector<Rational>(3)), Form(3, 2)); };
    for (int t = 0; t < 30; ++t) {
        for (int family = 0; family < 2; ++family) {
            const PoissonStructure& pi = family == 0 ? zero : so3();
            const GaugeElement a = family == 0 ? zero_element() : rotation();
            const GaugeElement b = family == 0 ? zero_element() : rotation();
            const GaugeElement c = family == 0 ? zero_element() : rotation();
            const GaugeElement id = GaugeElement::identity(3);
            const GaugeElement ab = gauge_compose(a, b, pi);
            CHECK(is_member(ab, pi));
            CHECK(gauge_compose(ab, c, pi) == gauge_compose(a, gauge_compose(b, c, pi), pi));
            CHECK(gauge_compose(a, id, pi) == a);
            CHECK(gauge_compose(id, a, pi) == a);
            CHECK(gauge_compose(a, gauge_inverse(a), pi) == id);
            CHECK(gauge_compose(gauge_inverse(a), a, pi) == id);
        }
    }
    RationalMatrix stretch = RationalMatrix::identity(3);
    stretch(0, 0) = Rational(2);
    const GaugeElement bad(AffineMap(stretch, std::vector<Rational>(3)), Form(3, 2));
    CHECK_THROWS_AS(gauge_compose(bad, GaugeElement::identity(3), so3()), NotMemberError);
}

TEST_CASE("gauge group closure with nonzero B on a symplectic plane")
{
    test::Rng rng(48);
    const PoissonStructure sym = PoissonStructure::checked(Multivector::basis(2, {0, 1}));
    // phi_* pi_B = pi with B = b dx^dy forces b = 1 - det(A), since pi_B = (1 - b)^{-1} pi.
    auto fitted = [&] {
        const RationalMatrix a = rng.invertible_matrix(2);
        return GaugeElement(AffineMap(a, {rng.rational(), rng.rational()}),
                            Form::basis(2, {0, 1}, Polynomial::constant(2, Rational(1) - a.determinant())));
    };
    for (int t = 0; t < 20; ++t) {
        const GaugeElement g1 = fitted(), g2 = fitted(), g3 = fitted();
        REQUIRE(is_member(g1, sym));
        const GaugeElement g12 = gauge_compose(g1, g2, sym);
        CHECK(is_member(g12, sym));
        CHECK(gauge_compose(g12, g3, sym) == gauge_compose(g1, gauge_compose(g2, g3, sym), sym));
        CHECK(gauge_compose(g1, gauge_inverse(g1), sym) == GaugeElement::identity(2));
    }
}

TEST_CASE("infinitesimal gauge pairs")
{
    const PoissonStructure pi = so3();
    CHECK(inf_pair_check(InfGaugePair::zero(3), pi));
    CHECK_FALSE(inf_pair_check({euler_vector_field(3), Form(3, 2)}, pi));
    const InfGaugePair dx = ideal_embed(coordinate_differential(3, 0), pi);
    CHECK(dx.z == Multivector::basis(3, {1}, P("z")) - Multivector::basis(3, {2}, P("y")));
    CHECK(dx.beta.is_zero());
    CHECK(ideal_embed(Form(3, 1), pi) == InfGaugePair::zero(3));
    CHECK_THROWS_AS(inf_bracket({euler_vector_field(3), Form(3, 2)}, InfGaugePair::zero(3), pi), InvalidPairError);

    test::Rng rng(49);
    for (int t = 0; t < 40; ++t) {
        const PoissonStructure q = rng.homogeneous_poisson(3);
        const Form eta = rng.form(3, 1);
        CHECK(inf_pair_check(ideal_embed(eta, q), q));
        const Polynomial f = rng.poly(3, 3);
        CHECK(ideal_embed(de_rham_d(Form::scalar(f)), q)
              == InfGaugePair{hamiltonian_vector_field(q.bivector(), f), Form(3, 2)});

        const InfGaugePair p1 = test::random_algebra_element(rng, q);
        const InfGaugePair p2 = test::random_algebra_element(rng, q);
        const InfGaugePair p3 = test::random_algebra_element(rng, q);
        CHECK(inf_pair_check(p1, q));
        CHECK(inf_bracket(p1, p1, q) == InfGaugePair::zero(3));
        const InfGaugePair b12 = inf_bracket(p1, p2, q);
        CHECK(inf_pair_check(b12, q));
        CHECK(b12 == -1 * inf_bracket(p2, p1, q));
        const InfGaugePair jac = inf_bracket(p1, inf_bracket(p2, p3, q), q)
            + inf_bracket(p2, inf_bracket(p3, p1, q), q) + inf_bracket(p3, inf_bracket(p1, p2, q), q);
        CHECK(jac == InfGaugePair::zero(3));

        // (Z, 0) with (0, beta) for beta closed and basic is (0, L_Z beta)
        const InfGaugePair e = ideal_embed(eta, q);
        const Form expected = lie_derivative(p1.z, eta) - contract(sharp(q, eta), p1.beta);
        CHECK(inf_bracket(p1, e, q) == ideal_embed(expected, q));
    }
}

TEST_CASE("basic forms")
{
    const PoissonStructure r3 = PoissonStructure::checked(Multivector::basis(3, {0, 1}));
    CHECK(is_basic(coordinate_differential(3, 2), r3));
    CHECK_FALSE(is_basic(coordinate_differential(3, 0), r3));
    CHECK(is_basic(Form::basis(3, {2}, P("z^2")), r3));
    CHECK_FALSE(is_basic(Form::basis(3, {2}, P("x")), r3));
    CHECK_FALSE(is_basic(Form::basis(3, {0, 2}), r3));

    const PoissonStructure sym = PoissonStructure::checked(Multivector::basis(2, {0, 1}));
    CHECK(is_basic(Form(2, 1), sym));
    CHECK(is_basic(Form(2, 2), sym));
    test::Rng rng(50);
    for (int t = 0; t < 30; ++t) {
        const Form a = rng.form(2, 1), b = rng.form(2, 2);
        CHECK(is_basic(a, sym) == a.is_zero());
        CHECK(is_basic(b, sym) == b.is_zero());
        // grade 2 basic iff pi# annihilates contractions: i_{X_i} t = 0
        const PoissonStructure q = rng.poisson(3);
        const Form w = rng.form(3, 2, 1);
        bool annihilated = true;
        for (std::size_t i = 0; i < 3; ++i)
            annihilated = annihilated && contract(sharp(q, coordinate_differential(3, i)), w).is_zero();
        CHECK(is_basic(w, q) == annihilated);
    }
}
