#include "poisson/calculus.hpp"

#include <string>

#include "poisson/errors.hpp"

namespace poisson {

namespace {

// T <d/dtheta_i: move d/dx_i to the right end of each basis word, then drop it.
Multivector right_odd_derivative(const Multivector& t, std::size_t i)
{
    Multivector r(t.dim(), t.grade() - 1);
    const std::size_t k = t.grade();
    for (const auto& [idx, c] : t.coeffs()) {
        for (std::size_t m = 0; m < idx.size(); ++m) {
            if (idx[m] != i)
                continue;
            IndexSet rest;
            rest.reserve(k - 1);
            for (std::size_t q = 0; q < idx.size(); ++q)
                if (q != m)
                    rest.push_back(idx[q]);
            r.add_term(std::move(rest), (k - 1 - m) % 2 == 0 ? c : -c);
        }
    }
    return r;
}

void check_same_dim(std::size_t a, std::size_t b, const char* what)
{
    if (a != b)
        throw DimensionError(std::string(what) + ": dimension mismatch " + std::to_string(a) + " vs "
                             + std::to_string(b));
}

} // namespace

Multivector schouten(const Multivector& a, const Multivector& b)
{
    check_same_dim(a.dim(), b.dim(), "schouten");
    const long p = static_cast<long>(a.grade());
    const long q = static_cast<long>(b.grade());
    if (p + q < 1)
        throw GradeError("schouten bracket of two functions is undefined");
    const std::size_t n = a.dim();
    Multivector result(n, static_cast<std::size_t>(p + q - 1));
    const bool flip = ((p - 1) * (q - 1)) % 2 != 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (p > 0) {
            const Multivector ai = right_odd_derivative(a, i);
            if (!ai.is_zero())
                result += wedge(ai, b.derivative(i));
        }
        if (q > 0) {
            const Multivector bi = right_odd_derivative(b, i);
            if (!bi.is_zero()) {
                const Multivector term = wedge(bi, a.derivative(i));
                // minus (-1)^{(p-1)(q-1)}
                if (flip)
                    result += term;
                else
                    result -= term;
            }
        }
    }
    return result;
}

Form de_rham_d(const Form& omega)
{
    const std::size_t n = omega.dim();
    Form result(n, omega.grade() + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Form di = omega.derivative(i);
        if (!di.is_zero())
            result += wedge(coordinate_differential(n, i), di);
    }
    return result;
}

Form lie_derivative(const Multivector& x, const Form& omega)
{
    check_same_dim(x.dim(), omega.dim(), "lie_derivative");
    if (x.grade() != 1)
        throw GradeError("lie_derivative needs a vector field");
    Form result = contract(x, de_rham_d(omega));
    if (omega.grade() > 0)
        result += de_rham_d(contract(x, omega));
    return result;
}

Multivector lie_derivative(const Multivector& x, const Multivector& t)
{
    check_same_dim(x.dim(), t.dim(), "lie_derivative");
    if (x.grade() != 1)
        throw GradeError("lie_derivative needs a vector field");
    return schouten(x, t);
}

PoissonStructure::PoissonStructure(Multivector bivector) : bivector_(std::move(bivector))
{
    if (bivector_.grade() != 2)
        throw GradeError("a Poisson structure is a bivector, got grade " + std::to_string(bivector_.grade()));
}

PoissonStructure PoissonStructure::checked(Multivector bivector)
{
    PoissonStructure pi(std::move(bivector));
    jacobi_check(pi);
    return pi;
}

void PoissonStructure::require_verified(std::string_view operation) const
{
    if (status_ == JacobiStatus::verified)
        return;
    throw NotPoissonError(std::string(operation) + " requires a bivector with verified [pi,pi] = 0"
                          + (status_ == JacobiStatus::failed ? " (Jacobi check failed)" : " (not checked)"));
}

bool jacobi_check(const Multivector& bivector)
{
    if (bivector.grade() != 2)
        throw GradeError("jacobi_check needs a bivector");
    return schouten(bivector, bivector).is_zero();
}

bool jacobi_check(PoissonStructure& pi)
{
    const bool ok = jacobi_check(pi.bivector_);
    pi.status_ = ok ? JacobiStatus::verified : JacobiStatus::failed;
    return ok;
}

Multivector lichnerowicz_d(const PoissonStructure& pi, const Multivector& v)
{
    pi.require_verified("lichnerowicz_d");
    return schouten(pi.bivector(), v);
}

Multivector sharp(const Multivector& bivector, const Form& omega)
{
    check_same_dim(bivector.dim(), omega.dim(), "sharp");
    if (bivector.grade() != 2)
        throw GradeError("sharp needs a bivector");
    const std::size_t n = omega.dim();
    if (omega.grade() == 0)
        return Multivector::scalar(omega.scalar_value());

    std::vector<Multivector> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        images.push_back(contract(coordinate_differential(n, i), bivector));

    Multivector result(n, omega.grade());
    for (const auto& [idx, c] : omega.coeffs()) {
        Multivector term = Multivector::scalar(c);
        for (std::size_t i : idx) {
            term = wedge(term, images[i]);
            if (term.is_zero())
                break;
        }
        if (!term.is_zero())
            result += term;
    }
    return result;
}

Multivector sharp(const PoissonStructure& pi, const Form& omega)
{
    return sharp(pi.bivector(), omega);
}

Polynomial pair(const Multivector& bivector, const Form& alpha, const Form& beta)
{
    if (alpha.grade() != 1 || beta.grade() != 1)
        throw GradeError("pairing needs two 1-forms");
    return contract(beta, sharp(bivector, alpha)).scalar_value();
}

Multivector hamiltonian_vector_field(const Multivector& bivector, const Polynomial& f)
{
    return sharp(bivector, de_rham_d(Form::scalar(f)));
}

Form koszul_bracket(const PoissonStructure& pi, const Form& a, const Form& b)
{
    pi.require_verified("koszul_bracket");
    if (a.grade() != 1 || b.grade() != 1)
        throw GradeError("koszul_bracket needs two 1-forms");
    const Multivector& bv = pi.bivector();
    Form result = lie_derivative(sharp(bv, a), b);
    result -= lie_derivative(sharp(bv, b), a);
    result -= de_rham_d(Form::scalar(pair(bv, a, b)));
    return result;
}

Multivector euler_vector_field(std::size_t dim)
{
    Multivector e(dim, 1);
    for (std::size_t i = 0; i < dim; ++i)
        e.add_term({i}, Polynomial::variable(dim, i));
    return e;
}

std::optional<int> euler_homogeneity(const PoissonStructure& pi)
{
    const Multivector& bv = pi.bivector();
    if (bv.is_zero())
        return 0;
    const auto p = bv.homogeneous_degree();
    if (!p)
        return std::nullopt;
    const int s = static_cast<int>(*p) - 2;
    const Multivector lie = lie_derivative(euler_vector_field(bv.dim()), bv);
    if (lie != Rational(s) * bv)
        throw ConsistencyError("L_E pi differs from (p-2) pi for a homogeneous bivector");
    return s;
}

} // namespace poisson
