#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "poisson/calculus.hpp"

namespace poisson {

// [e_i, e_j] = sum_k c(i, j, k) e_k, 0-based.
class StructureConstants {
public:
    // Throws std::invalid_argument unless c(i,j,k) = -c(j,i,k).
    StructureConstants(std::size_t dim, std::vector<Rational> values);

    struct Bracket {
        std::size_t i;
        std::size_t j;
        std::vector<std::pair<std::size_t, Rational>> terms;
    };
    // Only i < j is given; the rest follows by antisymmetry.
    static StructureConstants from_brackets(std::size_t dim, const std::vector<Bracket>& brackets);

    std::size_t dim() const noexcept { return dim_; }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const
    {
        return values_[(i * dim_ + j) * dim_ + k];
    }

    // Nonzero brackets with i < j, in (i, j) order.
    std::vector<Bracket> brackets() const;

    // sum_m c(i,j,m) c(m,k,l) + c(j,k,m) c(m,i,l) + c(k,i,m) c(m,j,l) = 0
    bool satisfies_jacobi() const;

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    std::size_t dim_;
    std::vector<Rational> values_;
};

// pi = sum_{i<j} (sum_k c(i,j,k) x_k) d/dx_i ^ d/dx_j with its Jacobi status checked.
PoissonStructure linear_poisson(const StructureConstants& c);

// abelian(n), heisenberg3, aff1, so3, sl2 (basis h, e, f), se2. Throws UnknownNameError.
StructureConstants builtin(std::string_view name);
std::vector<std::string> builtin_names();

// dim H^k(g, S^d g) for the adjoint action on degree-d polynomial functions on g*,
// computed on Lambda^k g* (x) S^d g. Throws NotPoissonError when Jacobi fails.
std::size_t ce_cohomology(const StructureConstants& c, int k, unsigned d);

} // namespace poisson
