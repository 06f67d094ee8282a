#include "poisson/gauge.hpp"

#include <string>
#include <unordered_map>

#include "poisson/errors.hpp"

namespace poisson {

PolyMatrix::PolyMatrix(std::size_t size, std::size_t dim)
    : size_(size), dim_(dim), entries_(size * size, Polynomial(dim))
{
}

PolyMatrix PolyMatrix::identity(std::size_t size, std::size_t dim)
{
    PolyMatrix m(size, dim);
    for (std::size_t i = 0; i < size; ++i)
        m(i, i) = Polynomial::constant(dim, 1);
    return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.size_ != b.size_ || a.dim_ != b.dim_)
        throw DimensionError("polynomial matrix shape mismatch");
    PolyMatrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k)
        r.entries_[k] += b.entries_[k];
    return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.size_ != b.size_ || a.dim_ != b.dim_)
        throw DimensionError("polynomial matrix shape mismatch");
    PolyMatrix r(a.size_, a.dim_);
    for (std::size_t i = 0; i < a.size_; ++i)
        for (std::size_t k = 0; k < a.size_; ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < a.size_; ++j)
                if (!b(k, j).is_zero())
                    r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

namespace {

// Determinant of the submatrix on the given rows and columns, by Laplace expansion
// along rows with memoisation on the set of unused columns.
Polynomial minor_determinant(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols)
{
    const std::size_t k = rows.size();
    if (k == 0)
        return Polynomial::constant(m.dim(), 1);
    if (k > 30)
        throw DimensionError("matrix too large for cofactor expansion");
    std::unordered_map<unsigned long, Polynomial> memo;

    auto rec = [&](auto&& self, unsigned long mask, std::size_t row) -> Polynomial {
        if (row == k)
            return Polynomial::constant(m.dim(), 1);
        if (auto it = memo.find(mask); it != memo.end())
            return it->second;
        Polynomial sum(m.dim());
        int position = 0;
        for (std::size_t c = 0; c < k; ++c) {
            if (!(mask & (1ul << c)))
                continue;
            const Polynomial& entry = m(rows[row], cols[c]);
            if (!entry.is_zero()) {
                Polynomial term = entry * self(self, mask & ~(1ul << c), row + 1);
                if (position % 2 == 0)
                    sum += term;
                else
                    sum -= term;
            }
            ++position;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    return rec(rec, (1ul << k) - 1, 0);
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip)
{
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < n; ++i)
        if (i != skip)
            v.push_back(i);
    return v;
}

} // namespace

Polynomial PolyMatrix::determinant() const
{
    return minor_determinant(*this, all_but(size_, size_), all_but(size_, size_));
}

PolyMatrix PolyMatrix::adjugate() const
{
    PolyMatrix adj(size_, dim_);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j) {
            Polynomial cof = minor_determinant(*this, all_but(size_, j), all_but(size_, i));
            adj(i, j) = (i + j) % 2 == 0 ? cof : -cof;
        }
    return adj;
}

PolyMatrix flat(const Form& b)
{
    if (b.grade() != 2)
        throw GradeError("flat needs a 2-form");
    const std::size_t n = b.dim();
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Form image = contract(coordinate_vector(n, i), b);
        for (const auto& [idx, c] : image.coeffs())
            m(idx.front(), i) = c;
    }
    return m;
}

PolyMatrix sharp_matrix(const Multivector& bivector)
{
    const std::size_t n = bivector.dim();
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Multivector image = sharp(bivector, coordinate_differential(n, i));
        for (const auto& [idx, c] : image.coeffs())
            m(idx.front(), i) = c;
    }
    return m;
}

AffineMap::AffineMap(RationalMatrix matrix, std::vector<Rational> translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation))
{
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() != translation_.size() || matrix_.rows() == 0)
        throw DimensionError("affine map needs an n x n matrix and a length-n translation");
    if (matrix_.determinant().is_zero())
        throw NotInvertibleError("affine map with singular linear part");
}

AffineMap AffineMap::identity(std::size_t dim)
{
    return AffineMap(RationalMatrix::identity(dim), std::vector<Rational>(dim));
}

AffineMap AffineMap::compose(const AffineMap& other) const
{
    if (other.dim() != dim())
        throw DimensionError("composing affine maps of different dimensions");
    std::vector<Rational> t = translation_;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            t[i] += matrix_(i, j) * other.translation_[j];
    return AffineMap(matrix_ * other.matrix_, std::move(t));
}

AffineMap AffineMap::inverse() const
{
    RationalMatrix inv = matrix_.inverse();
    std::vector<Rational> t(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            t[i] -= inv(i, j) * translation_[j];
    return AffineMap(std::move(inv), std::move(t));
}

std::vector<Polynomial> AffineMap::coordinate_images() const
{
    const std::size_t n = dim();
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial p = Polynomial::constant(n, translation_[i]);
        for (std::size_t j = 0; j < n; ++j)
            p += Polynomial::variable(n, j) * matrix_(i, j);
        images.push_back(std::move(p));
    }
    return images;
}

Polynomial AffineMap::pullback(const Polynomial& f) const
{
    if (f.dim() != dim())
        throw DimensionError("pullback of a polynomial of the wrong dimension");
    const auto images = coordinate_images();
    return f.substitute(images);
}

Form AffineMap::pullback(const Form& omega) const
{
    const std::size_t n = dim();
    if (omega.dim() != n)
        throw DimensionError("pullback of a form of the wrong dimension");
    const auto images = coordinate_images();
    // d(phi_i) = sum_j A_ij dx_j
    std::vector<Form> differentials;
    for (std::size_t i = 0; i < n; ++i) {
        Form d(n, 1);
        for (std::size_t j = 0; j < n; ++j)
            if (!matrix_(i, j).is_zero())
                d.add_term({j}, Polynomial::constant(n, matrix_(i, j)));
        differentials.push_back(std::move(d));
    }
    Form result(n, omega.grade());
    for (const auto& [idx, c] : omega.coeffs()) {
        Form term = Form::scalar(c.substitute(images));
        for (std::size_t i : idx)
            term = wedge(term, differentials[i]);
        result += term;
    }
    return result;
}

Polynomial AffineMap::pushforward(const Polynomial& f) const
{
    return inverse().pullback(f);
}

Form AffineMap::pushforward(const Form& omega) const
{
    return inverse().pullback(omega);
}

Multivector AffineMap::pushforward(const Multivector& v) const
{
    const std::size_t n = dim();
    if (v.dim() != n)
        throw DimensionError("pushforward of a multivector of the wrong dimension");
    const auto inverse_images = inverse().coordinate_images();
    // phi_* d/dx_i = sum_j A_ji d/dx_j
    std::vector<Multivector> pushed;
    for (std::size_t i = 0; i < n; ++i) {
        Multivector e(n, 1);
        for (std::size_t j = 0; j < n; ++j)
            if (!matrix_(j, i).is_zero())
                e.add_term({j}, Polynomial::constant(n, matrix_(j, i)));
        pushed.push_back(std::move(e));
    }
    Multivector result(n, v.grade());
    for (const auto& [idx, c] : v.coeffs()) {
        Multivector term = Multivector::scalar(c.substitute(inverse_images));
        for (std::size_t i : idx)
            term = wedge(term, pushed[i]);
        result += term;
    }
    return result;
}

Polynomial gauge_determinant(const Multivector& bivector, const Form& b)
{
    if (bivector.dim() != b.dim())
        throw DimensionError("gauge transform: dimension mismatch");
    const std::size_t n = b.dim();
    const PolyMatrix t = PolyMatrix::identity(n, n) + flat(b) * sharp_matrix(bivector);
    return t.determinant();
}

PoissonStructure gauge_transform(const PoissonStructure& pi, const Form& b)
{
    pi.require_verified("gauge_transform");
    if (b.grade() != 2)
        throw GradeError("gauge transform needs a 2-form");
    if (b.dim() != pi.dim())
        throw DimensionError("gauge transform: dimension mismatch");
    if (!de_rham_d(b).is_zero())
        throw NotClosedError("gauge transform by a 2-form that is not closed");

    const std::size_t n = pi.dim();
    const PolyMatrix p = sharp_matrix(pi.bivector());
    const PolyMatrix t = PolyMatrix::identity(n, n) + flat(b) * p;
    const Polynomial det = t.determinant();
    if (det.is_zero() || !det.is_constant())
        throw NotInvertibleError("I + B-flat pi-sharp has determinant "
                                 + std::string(det.is_zero() ? "0" : "of degree " + std::to_string(det.degree()))
                                 + "; its inverse is not polynomial");

    const Rational scale = Rational(1) / det.constant_term();
    PolyMatrix inv = t.adjugate();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) *= scale;
    const PolyMatrix q = p * inv;

    Multivector result(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        if (!q(i, i).is_zero())
            throw ConsistencyError("gauge transform produced a non-alternating tensor");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (q(j, i) != -q(i, j))
                throw ConsistencyError("gauge transform produced a non-alternating tensor");
            result.add_term({i, j}, q(j, i));
        }
    }
    PoissonStructure transformed(std::move(result));
    if (!jacobi_check(transformed))
        throw ConsistencyError("gauge transform of a Poisson structure failed the Jacobi check");
    return transformed;
}

GaugeElement::GaugeElement(AffineMap map, Form b) : map_(std::move(map)), b_(std::move(b))
{
    if (b_.grade() != 2)
        throw GradeError("gauge element needs a 2-form");
    if (b_.dim() != map_.dim())
        throw DimensionError("gauge element: map and form dimensions differ");
    if (!de_rham_d(b_).is_zero())
        throw NotClosedError("gauge element with a 2-form that is not closed");
}

GaugeElement GaugeElement::identity(std::size_t dim)
{
    return GaugeElement(AffineMap::identity(dim), Form(dim, 2));
}

bool is_member(const GaugeElement& g, const PoissonStructure& pi)
{
    if (g.dim() != pi.dim())
        throw DimensionError("is_member: dimension mismatch");
    try {
        const PoissonStructure transformed = gauge_transform(pi, g.form());
        return g.map().pushforward(transformed.bivector()) == pi.bivector();
    } catch (const NotInvertibleError&) {
        return false;
    }
}

GaugeElement gauge_compose(const GaugeElement& g1, const GaugeElement& g2, const PoissonStructure& pi)
{
    if (!is_member(g1, pi))
        throw NotMemberError("first factor is not in the gauge group of pi");
    if (!is_member(g2, pi))
        throw NotMemberError("second factor is not in the gauge group of pi");
    return GaugeElement(g1.map().compose(g2.map()), g2.map().pullback(g1.form()) + g2.form());
}

GaugeElement gauge_inverse(const GaugeElement& g)
{
    const AffineMap inv = g.map().inverse();
    return GaugeElement(inv, -inv.pullback(g.form()));
}

InfGaugePair& InfGaugePair::operator+=(const InfGaugePair& o)
{
    z += o.z;
    beta += o.beta;
    return *this;
}

InfGaugePair& InfGaugePair::operator-=(const InfGaugePair& o)
{
    z -= o.z;
    beta -= o.beta;
    return *this;
}

InfGaugePair InfGaugePair::zero(std::size_t dim)
{
    return {Multivector(dim, 1), Form(dim, 2)};
}

bool inf_pair_check(const InfGaugePair& p, const PoissonStructure& pi)
{
    if (p.z.grade() != 1 || p.beta.grade() != 2)
        throw GradeError("infinitesimal gauge pair needs a vector field and a 2-form");
    if (p.z.dim() != pi.dim() || p.beta.dim() != pi.dim())
        throw DimensionError("infinitesimal gauge pair: dimension mismatch");
    return de_rham_d(p.beta).is_zero() && lie_derivative(p.z, pi.bivector()) == sharp(pi, p.beta);
}

InfGaugePair inf_bracket(const InfGaugePair& p1, const InfGaugePair& p2, const PoissonStructure& pi)
{
    if (!inf_pair_check(p1, pi))
        throw InvalidPairError("first argument violates d beta = 0 or L_Z pi = pi#(beta)");
    if (!inf_pair_check(p2, pi))
        throw InvalidPairError("second argument violates d beta = 0 or L_Z pi = pi#(beta)");
    return {schouten(p1.z, p2.z), lie_derivative(p1.z, p2.beta) - lie_derivative(p2.z, p1.beta)};
}

InfGaugePair ideal_embed(const Form& eta, const PoissonStructure& pi)
{
    if (eta.grade() != 1)
        throw GradeError("ideal_embed needs a 1-form");
    return {sharp(pi, eta), de_rham_d(eta)};
}

bool is_basic(const Form& t, const PoissonStructure& pi)
{
    if (t.grade() != 1 && t.grade() != 2)
        throw GradeError("is_basic is defined for 1-forms and 2-forms");
    if (t.dim() != pi.dim())
        throw DimensionError("is_basic: dimension mismatch");
    const std::size_t n = pi.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Multivector x = sharp(pi, coordinate_differential(n, i));
        if (!contract(x, t).is_zero())
            return false;
        if (t.grade() == 1 && !lie_derivative(x, t).is_zero())
            return false;
    }
    return true;
}

} // namespace poisson
