#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "poisson/calculus.hpp"
#include "poisson/gauge.hpp"
#include "poisson/linalg.hpp"

namespace poisson {

enum class ComplexKind { de_rham, lichnerowicz, basic, cone };

std::string_view to_string(ComplexKind kind);
std::optional<ComplexKind> parse_complex_kind(std::string_view name);

// Weight of a grade-k tensor whose coefficients have degree d:
//   forms         d + k
//   multivectors  d + k (1 - p)
// where p is the coefficient degree of pi. d, d_pi and pi# all preserve it.
struct WeightGrading {
    unsigned p = 0;

    long form_weight(std::size_t k, long d) const { return d + static_cast<long>(k); }
    long multivector_weight(std::size_t k, long d) const
    {
        return d + static_cast<long>(k) * (1 - static_cast<long>(p));
    }
    // Coefficient degree of the weight-w grade-k slice, nullopt when negative.
    std::optional<unsigned> form_degree(std::size_t k, long w) const;
    std::optional<unsigned> multivector_degree(std::size_t k, long w) const;

    // p = coefficient degree of pi (0 for pi = 0). Throws NotHomogeneousError.
    static WeightGrading for_structure(const PoissonStructure& pi);
    // Explicit p; must match pi unless pi = 0.
    static WeightGrading with_degree(const PoissonStructure& pi, unsigned p);

    friend bool operator==(const WeightGrading&, const WeightGrading&) = default;
};

// Throws NotHomogeneousError unless pi = 0 or its coefficients all have degree grading.p.
void require_compatible(const PoissonStructure& pi, const WeightGrading& grading);

// A monomial cochain: x^exponent times the basis tensor on `indices`.
struct BasisElement {
    enum class Part { form, multivector };
    Part part;
    IndexSet indices;
    Exponent exponent;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
    friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

// A cochain of any of the complexes. Cone cochains in degree k carry a (k+1)-form
// and a k-vector field; the others carry only one of the two.
struct Cochain {
    std::optional<Form> form;
    std::optional<Multivector> field;
};

// Monomial basis of the weight-w, degree-k slice, in graded-lex order within each grade
// and forms before fields for the cone (C^k = Omega^{k+1} + X^k). The basic complex is a
// subspace of the de Rham slice; its enumerated basis is the ambient one.
std::vector<BasisElement> enumerate_basis(ComplexKind complex, int k, long w, const PoissonStructure& pi,
                                          const WeightGrading& grading);

// Matrix of the differential from slice (k, w) into slice (k + 1, w). The cone uses
// d(a, b) = (da, pi# a - eps d_pi b) with eps the chain-map sign. The basic complex
// uses the ambient de Rham matrix.
SparseMatrix differential_matrix(ComplexKind complex, int k, long w, const PoissonStructure& pi,
                                 const WeightGrading& grading);

// Constraint matrix cutting the basic k-forms out of the de Rham slice: rows collect
// i_{X_i} t (k >= 1) and L_{X_i} t for every coordinate Hamiltonian X_i.
SparseMatrix basic_constraint_matrix(int k, long w, const PoissonStructure& pi, const WeightGrading& grading);

Cochain to_cochain(const std::vector<BasisElement>& basis, const DenseVector& coords, ComplexKind complex, int k,
                   std::size_t dim);

struct SliceCohomology {
    ComplexKind complex;
    int k;
    long weight;
    std::size_t cochains;
    std::size_t kernel;
    std::size_t image;
    std::size_t dim;
    // Cocycles spanning a complement of the image; filled only on request.
    std::vector<Cochain> representatives;
};

struct CohomologyReport {
    // Sorted by (k, weight).
    std::vector<SliceCohomology> slices;
};

struct CohomologyOptions {
    bool witnesses = false;
    std::size_t max_slice_dim = 5000;
    unsigned threads = 1;
};

// Slices for every k in [k_lo, k_hi] and w in [w_lo, w_hi]. Throws SliceTooLargeError
// when a needed slice exceeds max_slice_dim.
CohomologyReport cohomology_dims(ComplexKind complex, const PoissonStructure& pi, const WeightGrading& grading,
                                 int k_lo, int k_hi, long w_lo, long w_hi, const CohomologyOptions& options = {});

struct PicSlice {
    long weight;
    std::size_t cochains;
    std::size_t kernel;
    std::size_t image;
    std::size_t dim;
    std::vector<InfGaugePair> representatives;
};

// Cone H^1 per weight. Representatives are (Z, beta) pairs that pass inf_pair_check.
std::vector<PicSlice> pic_dims(const PoissonStructure& pi, const WeightGrading& grading, long w_lo, long w_hi,
                               const CohomologyOptions& options = {});

// Solves Z = pi# eta, beta = d eta with eta in the weight-w slice of 1-forms. Returns a
// witness eta when the class is trivial. Throws InvalidPairError for invalid pairs and
// NotHomogeneousError when the pair is not of weight w.
std::optional<Form> class_is_trivial(const InfGaugePair& p, const PoissonStructure& pi, const WeightGrading& grading,
                                     long w);

// H^1_dR -> H^1_pi -> pic -> H^2_dR -> H^2_pi at one weight.
struct LesReport {
    long weight;
    std::size_t h1_de_rham;
    std::size_t h1_poisson;
    std::size_t pic;
    std::size_t h2_de_rham;
    std::size_t h2_poisson;
    // Ranks of the induced maps pi#, b -> (0, b), (beta, Z) -> beta, pi#.
    std::size_t rank_sharp1;
    std::size_t rank_inclusion;
    std::size_t rank_projection;
    std::size_t rank_sharp2;
    bool compositions_zero;
    bool exact_at_h1_poisson;
    bool exact_at_pic;
    bool exact_at_h2_de_rham;
    // pic = h1_pi - rank_sharp1 + (h2_dR - rank_sharp2)
    bool dimension_formula;
    // pic = H^1_pi / pi#(H^1_dR), checked only when h2_de_rham = 0.
    bool quotient_applicable;
    bool quotient_formula;

    bool consistent() const
    {
        return compositions_zero && exact_at_h1_poisson && exact_at_pic && exact_at_h2_de_rham && dimension_formula
            && (!quotient_applicable || quotient_formula);
    }
};

LesReport les_consistency(const PoissonStructure& pi, const WeightGrading& grading, long w);

struct BasicCohomology {
    std::size_t closed;  // closed basic k-forms of weight w
    std::size_t exact;   // d of basic (k-1)-forms
    std::size_t dim;
};

// k in {1, 2}.
BasicCohomology basic_cohomology_dim(const PoissonStructure& pi, const WeightGrading& grading, int k, long w);

} // namespace poisson
