#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "poisson/rational.hpp"

namespace poisson {

// Exponent multi-index; length equals the ambient dimension.
using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

// Graded-lexicographic order, largest first: higher total degree precedes lower,
// ties broken lexicographically with x1 > x2 > ... > xn.
struct GradedLexOrder {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// All exponents of total degree d in n variables, in GradedLexOrder.
std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned d);

// Sparse multivariate polynomial over Q. No zero coefficients are stored.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational, GradedLexOrder>;

    explicit Polynomial(std::size_t dim);

    static Polynomial constant(std::size_t dim, const Rational& c);
    static Polynomial variable(std::size_t dim, std::size_t index);
    static Polynomial monomial(Exponent exponent, const Rational& c = 1);

    std::size_t dim() const noexcept { return dim_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    // Degree of the zero polynomial is -1.
    int degree() const;
    // Common total degree of all terms; nullopt for zero or mixed-degree polynomials.
    std::optional<unsigned> homogeneous_degree() const;

    Rational coefficient(const Exponent& e) const;
    Rational constant_term() const;

    // Adds c * x^e in place.
    void add_term(const Exponent& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    Polynomial pow(unsigned exponent) const;
    Polynomial derivative(std::size_t index) const;
    Polynomial homogeneous_part(unsigned degree) const;

    // p(images[0], ..., images[n-1]); every image must share one dimension.
    Polynomial substitute(std::span<const Polynomial> images) const;

    Rational evaluate(std::span<const Rational> point) const;

private:
    void check_dim(const Polynomial& other) const;

    std::size_t dim_;
    TermMap terms_;
};

} // namespace poisson
