#include "poisson/tensor.hpp"

#include <algorithm>
#include <string>

#include "poisson/errors.hpp"

namespace poisson {

int sort_with_sign(std::vector<std::size_t>& indices)
{
    int sign = 1;
    // Insertion sort: counts transpositions exactly.
    for (std::size_t i = 1; i < indices.size(); ++i) {
        for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
            if (indices[j - 1] == indices[j])
                return 0;
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i - 1] == indices[i])
            return 0;
    return sign;
}

template <TensorKind Kind>
Polynomial Alternating<Kind>::coefficient(const IndexSet& indices) const
{
    const auto it = coeffs_.find(indices);
    return it == coeffs_.end() ? Polynomial(dim_) : it->second;
}

template <TensorKind Kind>
void Alternating<Kind>::add_term(std::vector<std::size_t> indices, const Polynomial& coeff)
{
    if (indices.size() != grade_)
        throw GradeError("term of grade " + std::to_string(indices.size()) + " added to grade "
                         + std::to_string(grade_) + " tensor");
    if (coeff.dim() != dim_)
        throw DimensionError("coefficient dimension " + std::to_string(coeff.dim()) + " does not match "
                             + std::to_string(dim_));
    for (std::size_t i : indices)
        if (i >= dim_)
            throw DimensionError("basis index " + std::to_string(i) + " out of range");
    if (coeff.is_zero())
        return;
    const int sign = sort_with_sign(indices);
    if (sign == 0)
        return;
    auto it = coeffs_.find(indices);
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::move(indices), sign > 0 ? coeff : -coeff);
        return;
    }
    if (sign > 0)
        it->second += coeff;
    else
        it->second -= coeff;
    if (it->second.is_zero())
        coeffs_.erase(it);
}

template <TensorKind Kind>
void Alternating<Kind>::check_compatible(const Alternating& other) const
{
    if (other.dim_ != dim_)
        throw DimensionError("tensor dimension mismatch: " + std::to_string(dim_) + " vs "
                             + std::to_string(other.dim_));
    if (other.grade_ != grade_)
        throw GradeError("tensor grade mismatch: " + std::to_string(grade_) + " vs " + std::to_string(other.grade_));
}

template <TensorKind Kind>
Alternating<Kind>& Alternating<Kind>::operator+=(const Alternating& other)
{
    check_compatible(other);
    for (const auto& [idx, c] : other.coeffs_) {
        auto it = coeffs_.find(idx);
        if (it == coeffs_.end()) {
            coeffs_.emplace(idx, c);
            continue;
        }
        it->second += c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
    return *this;
}

template <TensorKind Kind>
Alternating<Kind>& Alternating<Kind>::operator-=(const Alternating& other)
{
    return *this += -other;
}

template <TensorKind Kind>
Alternating<Kind> Alternating<Kind>::operator-() const
{
    Alternating r = *this;
    for (auto& [idx, c] : r.coeffs_)
        c = -c;
    return r;
}

template <TensorKind Kind>
Alternating<Kind> Alternating<Kind>::multiplied(const Polynomial& f) const
{
    if (f.dim() != dim_)
        throw DimensionError("scalar factor has wrong dimension");
    Alternating r(dim_, grade_);
    if (f.is_zero())
        return r;
    for (const auto& [idx, c] : coeffs_) {
        Polynomial p = f * c;
        if (!p.is_zero())
            r.coeffs_.emplace(idx, std::move(p));
    }
    return r;
}

template <TensorKind Kind>
Alternating<Kind> Alternating<Kind>::derivative(std::size_t index) const
{
    Alternating r(dim_, grade_);
    for (const auto& [idx, c] : coeffs_) {
        Polynomial p = c.derivative(index);
        if (!p.is_zero())
            r.coeffs_.emplace(idx, std::move(p));
    }
    return r;
}

template <TensorKind Kind>
int Alternating<Kind>::coefficient_degree() const
{
    int d = -1;
    for (const auto& [idx, c] : coeffs_)
        d = std::max(d, c.degree());
    return d;
}

template <TensorKind Kind>
std::optional<unsigned> Alternating<Kind>::homogeneous_degree() const
{
    std::optional<unsigned> d;
    for (const auto& [idx, c] : coeffs_) {
        const auto cd = c.homogeneous_degree();
        if (!cd || (d && *d != *cd))
            return std::nullopt;
        d = cd;
    }
    return d;
}

template <TensorKind Kind>
Alternating<Kind> wedge(const Alternating<Kind>& a, const Alternating<Kind>& b)
{
    if (a.dim() != b.dim())
        throw DimensionError("wedge of tensors with different dimensions");
    Alternating<Kind> r(a.dim(), a.grade() + b.grade());
    std::vector<std::size_t> merged;
    for (const auto& [ia, ca] : a.coeffs()) {
        for (const auto& [ib, cb] : b.coeffs()) {
            merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            r.add_term(merged, ca * cb);
        }
    }
    return r;
}

template class Alternating<TensorKind::multivector>;
template class Alternating<TensorKind::form>;
template Multivector wedge(const Multivector&, const Multivector&);
template Form wedge(const Form&, const Form&);

namespace {

// i_a t where a has grade 1 and t is of the dual kind: sum over slots m of
// (-1)^m <a, e_{i_m}> e_{I without i_m}.
template <TensorKind Out, TensorKind A, TensorKind T>
Alternating<Out> contract_first_slot(const Alternating<A>& a, const Alternating<T>& t)
{
    if (a.dim() != t.dim())
        throw DimensionError("contraction of tensors with different dimensions");
    if (a.grade() != 1)
        throw GradeError("contraction needs a grade-1 argument");
    if (t.grade() == 0)
        throw GradeError("cannot contract into a grade-0 tensor");
    Alternating<Out> r(t.dim(), t.grade() - 1);
    for (const auto& [ia, ca] : a.coeffs()) {
        const std::size_t j = ia.front();
        for (const auto& [it, ct] : t.coeffs()) {
            for (std::size_t m = 0; m < it.size(); ++m) {
                if (it[m] != j)
                    continue;
                IndexSet rest;
                rest.reserve(it.size() - 1);
                for (std::size_t q = 0; q < it.size(); ++q)
                    if (q != m)
                        rest.push_back(it[q]);
                Polynomial c = ca * ct;
                if (m % 2 == 1)
                    c = -c;
                r.add_term(std::move(rest), c);
            }
        }
    }
    return r;
}

} // namespace

Multivector contract(const Form& alpha, const Multivector& v)
{
    return contract_first_slot<TensorKind::multivector>(alpha, v);
}

Form contract(const Multivector& x, const Form& omega)
{
    return contract_first_slot<TensorKind::form>(x, omega);
}

Multivector coordinate_vector(std::size_t dim, std::size_t index)
{
    return Multivector::basis(dim, {index});
}

Form coordinate_differential(std::size_t dim, std::size_t index)
{
    return Form::basis(dim, {index});
}

namespace {

void fill_index_sets(std::size_t n, std::size_t k, std::size_t start, IndexSet& cur, std::vector<IndexSet>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        fill_index_sets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<IndexSet> index_sets(std::size_t n, std::size_t k)
{
    std::vector<IndexSet> out;
    if (k > n)
        return out;
    IndexSet cur;
    fill_index_sets(n, k, 0, cur, out);
    return out;
}

} // namespace poisson
