#pragma once

#include <cstddef>
#include <vector>

#include "poisson/calculus.hpp"
#include "poisson/linalg.hpp"

namespace poisson {

// Square matrix of polynomials; column j is the image of the j-th basis element.
class PolyMatrix {
public:
    PolyMatrix(std::size_t size, std::size_t dim);
    static PolyMatrix identity(std::size_t size, std::size_t dim);

    std::size_t size() const noexcept { return size_; }
    std::size_t dim() const noexcept { return dim_; }
    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

    // Division-free cofactor expansion, memoised over column subsets.
    Polynomial determinant() const;
    PolyMatrix adjugate() const;

private:
    std::size_t size_;
    std::size_t dim_;
    std::vector<Polynomial> entries_;
};

// B-flat: X -> i_X B in the coordinate frame. Entry (j, i) is the dx_j-coefficient
// of i_{d/dx_i} B.
PolyMatrix flat(const Form& b);

// pi-sharp on 1-forms. Entry (j, i) is the d/dx_j-coefficient of pi#(dx_i).
PolyMatrix sharp_matrix(const Multivector& bivector);

// x -> A x + b with A invertible.
class AffineMap {
public:
    AffineMap(RationalMatrix matrix, std::vector<Rational> translation);
    static AffineMap identity(std::size_t dim);

    std::size_t dim() const noexcept { return matrix_.rows(); }
    const RationalMatrix& matrix() const noexcept { return matrix_; }
    const std::vector<Rational>& translation() const noexcept { return translation_; }

    // (*this) o other
    AffineMap compose(const AffineMap& other) const;
    AffineMap inverse() const;

    // The coordinate functions phi_i(x).
    std::vector<Polynomial> coordinate_images() const;

    Polynomial pullback(const Polynomial& f) const;
    Form pullback(const Form& omega) const;
    Polynomial pushforward(const Polynomial& f) const;
    Form pushforward(const Form& omega) const;
    Multivector pushforward(const Multivector& v) const;

    friend bool operator==(const AffineMap& a, const AffineMap& b) = default;

private:
    RationalMatrix matrix_;
    std::vector<Rational> translation_;
};

// det(I + B-flat o pi-sharp) as a polynomial.
Polynomial gauge_determinant(const Multivector& bivector, const Form& b);

// pi_B with (pi_B)# = pi# (I + B-flat pi#)^{-1}. Throws NotClosedError when dB != 0 and
// NotInvertibleError unless the determinant is a nonzero constant. The result is
// Jacobi-verified.
PoissonStructure gauge_transform(const PoissonStructure& pi, const Form& b);

// (phi, B) with B a closed 2-form.
class GaugeElement {
public:
    GaugeElement(AffineMap map, Form b);
    static GaugeElement identity(std::size_t dim);

    const AffineMap& map() const noexcept { return map_; }
    const Form& form() const noexcept { return b_; }
    std::size_t dim() const noexcept { return map_.dim(); }

    friend bool operator==(const GaugeElement& a, const GaugeElement& b) = default;

private:
    AffineMap map_;
    Form b_;
};

// The gauge transform by B succeeds and phi_* pi_B == pi.
bool is_member(const GaugeElement& g, const PoissonStructure& pi);

// (phi1 o phi2, phi2^* B1 + B2). This is the law under which g.pi := phi_*(pi_B) is a
// left action, so members compose to members. Throws NotMemberError on non-members.
GaugeElement gauge_compose(const GaugeElement& g1, const GaugeElement& g2, const PoissonStructure& pi);

// (phi^{-1}, -(phi^{-1})^* B)
GaugeElement gauge_inverse(const GaugeElement& g);

struct InfGaugePair {
    Multivector z;
    Form beta;

    InfGaugePair& operator+=(const InfGaugePair& o);
    InfGaugePair& operator-=(const InfGaugePair& o);
    friend InfGaugePair operator+(InfGaugePair a, const InfGaugePair& b) { return a += b; }
    friend InfGaugePair operator-(InfGaugePair a, const InfGaugePair& b) { return a -= b; }
    friend InfGaugePair operator*(const Rational& c, const InfGaugePair& p) { return {c * p.z, c * p.beta}; }
    friend bool operator==(const InfGaugePair& a, const InfGaugePair& b) = default;

    static InfGaugePair zero(std::size_t dim);
};

// d beta = 0 and L_Z pi = pi#(beta).
bool inf_pair_check(const InfGaugePair& p, const PoissonStructure& pi);

// ([Z1,Z2], L_{Z1} beta2 - L_{Z2} beta1). Throws InvalidPairError on invalid inputs.
InfGaugePair inf_bracket(const InfGaugePair& p1, const InfGaugePair& p2, const PoissonStructure& pi);

// (pi# eta, d eta)
InfGaugePair ideal_embed(const Form& eta, const PoissonStructure& pi);

// Grade 2: i_{X_{x_i}} t = 0 for every coordinate. Grade 1: additionally
// L_{X_{x_i}} t = 0. Closedness is not tested.
bool is_basic(const Form& t, const PoissonStructure& pi);

} // namespace poisson
