#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "poisson/polynomial.hpp"

namespace poisson {

// Strictly increasing 0-based basis indices.
using IndexSet = std::vector<std::size_t>;

// Sorts indices in place and returns the sign of the sorting permutation,
// or 0 when an index repeats.
int sort_with_sign(std::vector<std::size_t>& indices);

enum class TensorKind { multivector, form };

// Alternating k-tensor with polynomial coefficients, stored only in canonical
// (strictly increasing) index order. Grade 0 keeps a single coefficient under {}.
template <TensorKind Kind>
class Alternating {
public:
    using CoeffMap = std::map<IndexSet, Polynomial>;

    Alternating(std::size_t dim, std::size_t grade) : dim_(dim), grade_(grade) {}

    static Alternating scalar(const Polynomial& p)
    {
        Alternating t(p.dim(), 0);
        t.add_term({}, p);
        return t;
    }

    // coeff * e_{i1} ^ ... ^ e_{ik}; indices in any order, the sorting sign is applied.
    static Alternating basis(std::size_t dim, std::vector<std::size_t> indices, const Polynomial& coeff)
    {
        Alternating t(dim, indices.size());
        t.add_term(std::move(indices), coeff);
        return t;
    }

    static Alternating basis(std::size_t dim, std::vector<std::size_t> indices)
    {
        return basis(dim, std::move(indices), Polynomial::constant(dim, 1));
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t grade() const noexcept { return grade_; }
    const CoeffMap& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Polynomial coefficient(const IndexSet& indices) const;
    // Grade-0 value.
    Polynomial scalar_value() const { return coefficient({}); }

    // Adds coeff * e_{indices}, sorting the indices with sign.
    void add_term(std::vector<std::size_t> indices, const Polynomial& coeff);

    Alternating& operator+=(const Alternating& other);
    Alternating& operator-=(const Alternating& other);
    Alternating operator-() const;
    friend Alternating operator+(Alternating a, const Alternating& b) { return a += b; }
    friend Alternating operator-(Alternating a, const Alternating& b) { return a -= b; }
    friend Alternating operator*(const Polynomial& f, const Alternating& t) { return t.multiplied(f); }
    friend Alternating operator*(const Rational& c, const Alternating& t)
    {
        return t.multiplied(Polynomial::constant(t.dim(), c));
    }

    friend bool operator==(const Alternating& a, const Alternating& b) = default;

    // Coefficient-wise derivative d/dx_i.
    Alternating derivative(std::size_t index) const;

    // Largest coefficient degree, -1 for zero.
    int coefficient_degree() const;
    // Common degree of all coefficients; nullopt when zero or mixed.
    std::optional<unsigned> homogeneous_degree() const;

private:
    Alternating multiplied(const Polynomial& f) const;
    void check_compatible(const Alternating& other) const;

    std::size_t dim_;
    std::size_t grade_;
    CoeffMap coeffs_;
};

using Multivector = Alternating<TensorKind::multivector>;
using Form = Alternating<TensorKind::form>;

template <TensorKind Kind>
Alternating<Kind> wedge(const Alternating<Kind>& a, const Alternating<Kind>& b);

// Interior product in the first slot. Both are graded derivations of wedge.
Multivector contract(const Form& alpha, const Multivector& v);
Form contract(const Multivector& x, const Form& omega);

// Coordinate basis vector field / 1-form.
Multivector coordinate_vector(std::size_t dim, std::size_t index);
Form coordinate_differential(std::size_t dim, std::size_t index);

// All strictly increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> index_sets(std::size_t n, std::size_t k);

extern template class Alternating<TensorKind::multivector>;
extern template class Alternating<TensorKind::form>;
extern template Multivector wedge(const Multivector&, const Multivector&);
extern template Form wedge(const Form&, const Form&);

} // namespace poisson
