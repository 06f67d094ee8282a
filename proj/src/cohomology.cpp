#include "poisson/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "poisson/errors.hpp"

namespace poisson {

std::string_view to_string(ComplexKind kind)
{
    switch (kind) {
    case ComplexKind::de_rham: return "de_rham";
    case ComplexKind::lichnerowicz: return "lichnerowicz";
    case ComplexKind::basic: return "basic";
    case ComplexKind::cone: return "cone";
    }
    return "unknown";
}

std::optional<ComplexKind> parse_complex_kind(std::string_view name)
{
    if (name == "de_rham" || name == "derham")
        return ComplexKind::de_rham;
    if (name == "lichnerowicz")
        return ComplexKind::lichnerowicz;
    if (name == "basic")
        return ComplexKind::basic;
    if (name == "cone" || name == "pic")
        return ComplexKind::cone;
    return std::nullopt;
}

std::optional<unsigned> WeightGrading::form_degree(std::size_t k, long w) const
{
    const long d = w - static_cast<long>(k);
    if (d < 0)
        return std::nullopt;
    return static_cast<unsigned>(d);
}

std::optional<unsigned> WeightGrading::multivector_degree(std::size_t k, long w) const
{
    const long d = w - static_cast<long>(k) * (1 - static_cast<long>(p));
    if (d < 0)
        return std::nullopt;
    return static_cast<unsigned>(d);
}

WeightGrading WeightGrading::for_structure(const PoissonStructure& pi)
{
    const Multivector& bv = pi.bivector();
    if (bv.is_zero())
        return WeightGrading{0};
    const auto p = bv.homogeneous_degree();
    if (!p)
        throw NotHomogeneousError("the coefficients of pi do not share one degree; no weight grading splits its complexes");
    return WeightGrading{*p};
}

WeightGrading WeightGrading::with_degree(const PoissonStructure& pi, unsigned p)
{
    WeightGrading g{p};
    require_compatible(pi, g);
    return g;
}

void require_compatible(const PoissonStructure& pi, const WeightGrading& grading)
{
    const Multivector& bv = pi.bivector();
    if (bv.is_zero())
        return;
    const auto p = bv.homogeneous_degree();
    if (!p)
        throw NotHomogeneousError("the coefficients of pi do not share one degree; no weight grading splits its complexes");
    if (*p != grading.p)
        throw NotHomogeneousError("pi has coefficient degree " + std::to_string(*p) + ", grading assumes "
                                  + std::to_string(grading.p));
}

namespace {

using Part = BasisElement::Part;

std::vector<BasisElement> grade_basis(Part part, std::size_t n, int k, std::optional<unsigned> degree)
{
    std::vector<BasisElement> out;
    if (k < 0 || static_cast<std::size_t>(k) > n || !degree)
        return out;
    const auto monomials = monomials_of_degree(n, *degree);
    for (auto& idx : index_sets(n, static_cast<std::size_t>(k)))
        for (const auto& e : monomials)
            out.push_back({part, idx, e});
    return out;
}

std::vector<BasisElement> forms_of_weight(std::size_t n, int k, long w, const WeightGrading& g)
{
    if (k < 0)
        return {};
    return grade_basis(Part::form, n, k, g.form_degree(static_cast<std::size_t>(k), w));
}

std::vector<BasisElement> fields_of_weight(std::size_t n, int k, long w, const WeightGrading& g)
{
    if (k < 0)
        return {};
    return grade_basis(Part::multivector, n, k, g.multivector_degree(static_cast<std::size_t>(k), w));
}

Form form_of(const BasisElement& e, std::size_t n)
{
    return Form::basis(n, e.indices, Polynomial::monomial(e.exponent));
}

Multivector field_of(const BasisElement& e, std::size_t n)
{
    return Multivector::basis(n, e.indices, Polynomial::monomial(e.exponent));
}

class BasisIndex {
public:
    explicit BasisIndex(const std::vector<BasisElement>& basis)
    {
        for (std::size_t i = 0; i < basis.size(); ++i)
            index_.emplace(basis[i], i);
    }

    // False when some term lies outside the basis.
    template <TensorKind Kind>
    bool accumulate(const Alternating<Kind>& t, std::map<std::size_t, Rational>& acc) const
    {
        const Part part = Kind == TensorKind::form ? Part::form : Part::multivector;
        for (const auto& [idx, c] : t.coeffs())
            for (const auto& [e, v] : c.terms()) {
                auto it = index_.find(BasisElement{part, idx, e});
                if (it == index_.end())
                    return false;
                acc[it->second] += v;
            }
        return true;
    }

    std::optional<SparseVector> coordinates(const Cochain& c) const
    {
        std::map<std::size_t, Rational> acc;
        if (c.form && !accumulate(*c.form, acc))
            return std::nullopt;
        if (c.field && !accumulate(*c.field, acc))
            return std::nullopt;
        SparseVector v;
        for (auto& [i, x] : acc)
            if (!x.is_zero())
                v.emplace_back(i, std::move(x));
        return v;
    }

    SparseVector checked_coordinates(const Cochain& c, const char* what) const
    {
        auto v = coordinates(c);
        if (!v)
            throw ConsistencyError(std::string(what) + " left its weight slice");
        return *std::move(v);
    }

private:
    std::map<BasisElement, std::size_t> index_;
};

// Image of one basis cochain under the differential of the given complex.
Cochain apply_differential(ComplexKind complex, const BasisElement& e, const PoissonStructure& pi)
{
    const std::size_t n = pi.dim();
    switch (complex) {
    case ComplexKind::de_rham:
    case ComplexKind::basic: return {de_rham_d(form_of(e, n)), std::nullopt};
    case ComplexKind::lichnerowicz: return {std::nullopt, lichnerowicz_d(pi, field_of(e, n))};
    case ComplexKind::cone:
        if (e.part == Part::form) {
            const Form a = form_of(e, n);
            return {de_rham_d(a), sharp(pi, a)};
        } else {
            const Multivector b = field_of(e, n);
            const Rational minus_eps = -Rational(SignConvention::chain_map_sign);
            return {Form(n, b.grade() + 2), minus_eps * lichnerowicz_d(pi, b)};
        }
    }
    throw ConsistencyError("unknown complex");
}

void check_preconditions(ComplexKind complex, const PoissonStructure& pi, const WeightGrading& grading)
{
    if (complex == ComplexKind::de_rham)
        return;
    pi.require_verified(std::string(to_string(complex)) + " cohomology");
    require_compatible(pi, grading);
}

std::vector<BasisElement> basis_unchecked(ComplexKind complex, int k, long w, std::size_t n, const WeightGrading& g)
{
    switch (complex) {
    case ComplexKind::de_rham:
    case ComplexKind::basic: return forms_of_weight(n, k, w, g);
    case ComplexKind::lichnerowicz: return fields_of_weight(n, k, w, g);
    case ComplexKind::cone: {
        auto out = forms_of_weight(n, k + 1, w, g);
        auto fields = fields_of_weight(n, k, w, g);
        out.insert(out.end(), fields.begin(), fields.end());
        return out;
    }
    }
    return {};
}

SparseMatrix matrix_of(const std::vector<BasisElement>& source, const std::vector<BasisElement>& target,
                       const std::function<Cochain(const BasisElement&)>& map, const char* what)
{
    const BasisIndex index(target);
    std::vector<SparseVector> columns;
    columns.reserve(source.size());
    for (const auto& e : source)
        columns.push_back(index.checked_coordinates(map(e), what));
    return SparseMatrix::from_columns(target.size(), columns);
}

SparseMatrix differential_unchecked(ComplexKind complex, int k, long w, const PoissonStructure& pi,
                                    const WeightGrading& g)
{
    const auto source = basis_unchecked(complex, k, w, pi.dim(), g);
    const auto target = basis_unchecked(complex, k + 1, w, pi.dim(), g);
    return matrix_of(source, target, [&](const BasisElement& e) { return apply_differential(complex, e, pi); },
                     "differential");
}

std::vector<SparseVector> columns_of(const SparseMatrix& m)
{
    return m.transposed().row_data();
}

SparseMatrix matrix_from_dense(std::size_t rows, const std::vector<DenseVector>& columns)
{
    std::vector<SparseVector> cols;
    cols.reserve(columns.size());
    for (const auto& c : columns)
        cols.push_back(to_sparse(c));
    return SparseMatrix::from_columns(rows, cols);
}

// Stacks a over b (same column count).
SparseMatrix stack(const SparseMatrix& a, const SparseMatrix& b)
{
    auto ca = columns_of(a);
    const auto cb = columns_of(b);
    for (std::size_t j = 0; j < ca.size(); ++j)
        for (const auto& [i, v] : cb[j])
            ca[j].emplace_back(a.rows() + i, v);
    return SparseMatrix::from_columns(a.rows() + b.rows(), ca);
}

// Kernel vectors of `out` that are independent modulo the span of `image`.
std::vector<DenseVector> complement_representatives(const SparseMatrix& out, const std::vector<SparseVector>& image,
                                                    std::size_t size)
{
    RowReducer reducer(size);
    for (const auto& v : image)
        reducer.insert(v);
    std::vector<DenseVector> reps;
    for (const auto& z : kernel_basis(out)) {
        SparseVector r = reducer.reduce(to_sparse(z));
        if (r.empty())
            continue;
        reducer.insert(r);
        reps.push_back(to_dense(r, size));
    }
    return reps;
}

void guard(std::size_t size, const CohomologyOptions& options, ComplexKind complex, int k, long w)
{
    if (size > options.max_slice_dim)
        throw SliceTooLargeError(std::string(to_string(complex)) + " slice k=" + std::to_string(k) + " w="
                                 + std::to_string(w) + " has dimension " + std::to_string(size) + " > "
                                 + std::to_string(options.max_slice_dim));
}

SliceCohomology basic_slice(const PoissonStructure& pi, const WeightGrading& g, int k, long w,
                            const CohomologyOptions& options)
{
    const std::size_t n = pi.dim();
    const auto here = forms_of_weight(n, k, w, g);
    const auto below = forms_of_weight(n, k - 1, w, g);
    for (std::size_t s : {here.size(), below.size(), forms_of_weight(n, k + 1, w, g).size()})
        guard(s, options, ComplexKind::basic, k, w);

    SliceCohomology out{ComplexKind::basic, k, w, 0, 0, 0, 0, {}};
    const SparseMatrix c_here = basic_constraint_matrix(k, w, pi, g);
    const SparseMatrix d_here = differential_unchecked(ComplexKind::de_rham, k, w, pi, g);
    const SparseMatrix closed_basic = stack(c_here, d_here);
    out.cochains = here.size() - rank(c_here);
    out.kernel = here.size() - rank(closed_basic);

    std::vector<SparseVector> image;
    if (!below.empty()) {
        const auto basic_below = kernel_basis(basic_constraint_matrix(k - 1, w, pi, g));
        const SparseMatrix d_below = differential_unchecked(ComplexKind::de_rham, k - 1, w, pi, g);
        const SparseMatrix restricted = d_below * matrix_from_dense(below.size(), basic_below);
        out.image = rank(restricted);
        if (options.witnesses)
            image = columns_of(restricted);
    }
    out.dim = out.kernel - out.image;
    if (options.witnesses) {
        for (const auto& r : complement_representatives(closed_basic, image, here.size()))
            out.representatives.push_back(to_cochain(here, r, ComplexKind::basic, k, n));
        if (out.representatives.size() != out.dim)
            throw ConsistencyError("basic representatives disagree with the rank count");
    }
    return out;
}

SliceCohomology compute_slice(ComplexKind complex, const PoissonStructure& pi, const WeightGrading& g, int k, long w,
                              const CohomologyOptions& options)
{
    if (complex == ComplexKind::basic)
        return basic_slice(pi, g, k, w, options);
    const std::size_t n = pi.dim();
    const auto here = basis_unchecked(complex, k, w, n, g);
    guard(here.size(), options, complex, k, w);
    guard(basis_unchecked(complex, k - 1, w, n, g).size(), options, complex, k - 1, w);
    guard(basis_unchecked(complex, k + 1, w, n, g).size(), options, complex, k + 1, w);

    const SparseMatrix in = differential_unchecked(complex, k - 1, w, pi, g);
    const SparseMatrix out = differential_unchecked(complex, k, w, pi, g);
    SliceCohomology s{complex, k, w, here.size(), 0, 0, 0, {}};
    s.kernel = here.size() - rank(out);
    s.image = rank(in);
    if (s.image > s.kernel)
        throw ConsistencyError("image larger than kernel; d^2 != 0 in slice " + std::string(to_string(complex)));
    s.dim = s.kernel - s.image;
    if (options.witnesses) {
        for (const auto& r : complement_representatives(out, columns_of(in), here.size()))
            s.representatives.push_back(to_cochain(here, r, complex, k, n));
        if (s.representatives.size() != s.dim)
            throw ConsistencyError("representatives disagree with the rank count");
    }
    return s;
}

// Runs tasks [0, count) on up to `threads` workers. Results are written by index, so the
// outcome does not depend on scheduling; the first failing task (by index) is rethrown.
template <typename Result>
std::vector<Result> run_parallel(std::size_t count, unsigned threads, const std::function<Result(std::size_t)>& task)
{
    std::vector<std::optional<Result>> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(worker);
    }
    std::vector<Result> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        out.push_back(*std::move(results[i]));
    }
    return out;
}

struct SliceSpaces {
    std::size_t size = 0;
    std::vector<SparseVector> cocycles;
    std::vector<SparseVector> coboundaries;
    std::size_t dim = 0;
};

SliceSpaces spaces(ComplexKind complex, const PoissonStructure& pi, const WeightGrading& g, int k, long w)
{
    SliceSpaces s;
    s.size = basis_unchecked(complex, k, w, pi.dim(), g).size();
    const SparseMatrix out = differential_unchecked(complex, k, w, pi, g);
    const SparseMatrix in = differential_unchecked(complex, k - 1, w, pi, g);
    for (const auto& z : kernel_basis(out))
        s.cocycles.push_back(to_sparse(z));
    s.coboundaries = columns_of(in);
    s.dim = s.size - rank(out) - rank(in);
    return s;
}

// Rank of the map induced on cohomology by the cochain map m.
std::size_t induced_rank(const std::vector<SparseVector>& cocycles, const std::vector<const SparseMatrix*>& maps,
                         const SliceSpaces& target)
{
    RowReducer reducer(target.size);
    for (const auto& b : target.coboundaries)
        reducer.insert(b);
    const std::size_t base = reducer.rank();
    for (SparseVector v : cocycles) {
        for (const SparseMatrix* m : maps)
            v = m->apply(v);
        reducer.insert(std::move(v));
    }
    return reducer.rank() - base;
}

} // namespace

std::vector<BasisElement> enumerate_basis(ComplexKind complex, int k, long w, const PoissonStructure& pi,
                                          const WeightGrading& grading)
{
    check_preconditions(complex, pi, grading);
    return basis_unchecked(complex, k, w, pi.dim(), grading);
}

SparseMatrix differential_matrix(ComplexKind complex, int k, long w, const PoissonStructure& pi,
                                 const WeightGrading& grading)
{
    check_preconditions(complex, pi, grading);
    return differential_unchecked(complex, k, w, pi, grading);
}

SparseMatrix basic_constraint_matrix(int k, long w, const PoissonStructure& pi, const WeightGrading& grading)
{
    check_preconditions(ComplexKind::basic, pi, grading);
    const std::size_t n = pi.dim();
    const auto basis = forms_of_weight(n, k, w, grading);
    std::vector<Multivector> hamiltonians;
    for (std::size_t i = 0; i < n; ++i)
        hamiltonians.push_back(sharp(pi, coordinate_differential(n, i)));

    // Rows are numbered on first appearance of (constraint, grade tensor, monomial).
    std::map<std::pair<std::size_t, BasisElement>, std::size_t> rows;
    std::vector<SparseVector> columns;
    for (const auto& e : basis) {
        const Form t = form_of(e, n);
        std::map<std::size_t, Rational> acc;
        auto add = [&](std::size_t block, const Form& value) {
            for (const auto& [idx, c] : value.coeffs())
                for (const auto& [ex, v] : c.terms()) {
                    auto key = std::make_pair(block, BasisElement{Part::form, idx, ex});
                    auto [it, inserted] = rows.emplace(std::move(key), rows.size());
                    acc[it->second] += v;
                }
        };
        for (std::size_t i = 0; i < n; ++i) {
            if (t.grade() > 0)
                add(2 * i, contract(hamiltonians[i], t));
            add(2 * i + 1, lie_derivative(hamiltonians[i], t));
        }
        SparseVector col;
        for (auto& [r, v] : acc)
            if (!v.is_zero())
                col.emplace_back(r, std::move(v));
        columns.push_back(std::move(col));
    }
    return SparseMatrix::from_columns(rows.size(), columns);
}

Cochain to_cochain(const std::vector<BasisElement>& basis, const DenseVector& coords, ComplexKind complex, int k,
                   std::size_t dim)
{
    if (coords.size() != basis.size())
        throw DimensionError("coordinate vector does not match the basis");
    Cochain c;
    const bool has_form = complex != ComplexKind::lichnerowicz;
    const bool has_field = complex == ComplexKind::lichnerowicz || complex == ComplexKind::cone;
    const int form_grade = complex == ComplexKind::cone ? k + 1 : k;
    if (has_form && form_grade >= 0)
        c.form = Form(dim, static_cast<std::size_t>(form_grade));
    if (has_field && k >= 0)
        c.field = Multivector(dim, static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coords[i].is_zero())
            continue;
        const auto& e = basis[i];
        const Polynomial coeff = Polynomial::monomial(e.exponent, coords[i]);
        if (e.part == Part::form)
            c.form->add_term(e.indices, coeff);
        else
            c.field->add_term(e.indices, coeff);
    }
    return c;
}

CohomologyReport cohomology_dims(ComplexKind complex, const PoissonStructure& pi, const WeightGrading& grading,
                                 int k_lo, int k_hi, long w_lo, long w_hi, const CohomologyOptions& options)
{
    check_preconditions(complex, pi, grading);
    const int k_min = complex == ComplexKind::cone ? -1 : 0;
    if (k_lo < k_min || k_hi < k_lo || w_hi < w_lo)
        throw std::invalid_argument("empty or invalid cohomology range");
    std::vector<std::pair<int, long>> keys;
    for (int k = k_lo; k <= k_hi; ++k)
        for (long w = w_lo; w <= w_hi; ++w)
            keys.emplace_back(k, w);
    CohomologyReport report;
    report.slices = run_parallel<SliceCohomology>(keys.size(), options.threads, [&](std::size_t i) {
        return compute_slice(complex, pi, grading, keys[i].first, keys[i].second, options);
    });
    return report;
}

std::vector<PicSlice> pic_dims(const PoissonStructure& pi, const WeightGrading& grading, long w_lo, long w_hi,
                               const CohomologyOptions& options)
{
    const CohomologyReport report = cohomology_dims(ComplexKind::cone, pi, grading, 1, 1, w_lo, w_hi, options);
    std::vector<PicSlice> out;
    for (const auto& s : report.slices) {
        PicSlice p{s.weight, s.cochains, s.kernel, s.image, s.dim, {}};
        for (const auto& rep : s.representatives) {
            // A cone 1-cocycle (a, b) is the pair Z = b, beta = a.
            InfGaugePair pair{*rep.field, *rep.form};
            if (!inf_pair_check(pair, pi))
                throw ConsistencyError("a pic representative fails L_Z pi = pi#(beta)");
            p.representatives.push_back(std::move(pair));
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::optional<Form> class_is_trivial(const InfGaugePair& p, const PoissonStructure& pi, const WeightGrading& grading,
                                     long w)
{
    check_preconditions(ComplexKind::cone, pi, grading);
    if (!inf_pair_check(p, pi))
        throw InvalidPairError("class_is_trivial needs a pair with d beta = 0 and L_Z pi = pi#(beta)");
    const std::size_t n = pi.dim();
    const auto source = forms_of_weight(n, 1, w, grading);
    const auto target = basis_unchecked(ComplexKind::cone, 1, w, n, grading);
    const BasisIndex index(target);
    const auto rhs = index.coordinates(Cochain{p.beta, p.z});
    if (!rhs)
        throw NotHomogeneousError("pair is not of weight " + std::to_string(w));
    const SparseMatrix m = matrix_of(source, target,
                                     [&](const BasisElement& e) {
                                         const Form eta = form_of(e, n);
                                         return Cochain{de_rham_d(eta), sharp(pi, eta)};
                                     },
                                     "triviality system");
    const auto x = solve(m, to_dense(*rhs, target.size()));
    if (!x)
        return std::nullopt;
    return *to_cochain(source, *x, ComplexKind::de_rham, 1, n).form;
}

LesReport les_consistency(const PoissonStructure& pi, const WeightGrading& grading, long w)
{
    check_preconditions(ComplexKind::cone, pi, grading);
    const std::size_t n = pi.dim();
    const SliceSpaces dr1 = spaces(ComplexKind::de_rham, pi, grading, 1, w);
    const SliceSpaces dr2 = spaces(ComplexKind::de_rham, pi, grading, 2, w);
    const SliceSpaces lp1 = spaces(ComplexKind::lichnerowicz, pi, grading, 1, w);
    const SliceSpaces lp2 = spaces(ComplexKind::lichnerowicz, pi, grading, 2, w);
    const SliceSpaces cone = spaces(ComplexKind::cone, pi, grading, 1, w);

    const auto omega1 = forms_of_weight(n, 1, w, grading);
    const auto omega2 = forms_of_weight(n, 2, w, grading);
    const auto fields1 = fields_of_weight(n, 1, w, grading);
    const auto fields2 = fields_of_weight(n, 2, w, grading);
    const auto cone1 = basis_unchecked(ComplexKind::cone, 1, w, n, grading);

    auto sharp_map = [&](const BasisElement& e) { return Cochain{std::nullopt, sharp(pi, form_of(e, n))}; };
    const SparseMatrix sharp1 = matrix_of(omega1, fields1, sharp_map, "pi#");
    const SparseMatrix sharp2 = matrix_of(omega2, fields2, sharp_map, "pi#");
    SparseMatrix inclusion = SparseMatrix::from_columns(cone1.size(), [&] {
        std::vector<SparseVector> cols;
        for (std::size_t j = 0; j < fields1.size(); ++j)
            cols.push_back({{omega2.size() + j, Rational(1)}});
        return cols;
    }());
    SparseMatrix projection = SparseMatrix::from_columns(omega2.size(), [&] {
        std::vector<SparseVector> cols(cone1.size());
        for (std::size_t j = 0; j < omega2.size(); ++j)
            cols[j] = {{j, Rational(1)}};
        return cols;
    }());

    LesReport r{};
    r.weight = w;
    r.h1_de_rham = dr1.dim;
    r.h2_de_rham = dr2.dim;
    r.h1_poisson = lp1.dim;
    r.h2_poisson = lp2.dim;
    r.pic = cone.dim;
    r.rank_sharp1 = induced_rank(dr1.cocycles, {&sharp1}, lp1);
    r.rank_inclusion = induced_rank(lp1.cocycles, {&inclusion}, cone);
    r.rank_projection = induced_rank(cone.cocycles, {&projection}, dr2);
    r.rank_sharp2 = induced_rank(dr2.cocycles, {&sharp2}, lp2);
    r.compositions_zero = induced_rank(dr1.cocycles, {&sharp1, &inclusion}, cone) == 0
        && induced_rank(lp1.cocycles, {&inclusion, &projection}, dr2) == 0
        && induced_rank(cone.cocycles, {&projection, &sharp2}, lp2) == 0;
    r.exact_at_h1_poisson = r.h1_poisson == r.rank_sharp1 + r.rank_inclusion;
    r.exact_at_pic = r.pic == r.rank_inclusion + r.rank_projection;
    r.exact_at_h2_de_rham = r.h2_de_rham == r.rank_projection + r.rank_sharp2;
    r.dimension_formula = r.pic + r.rank_sharp1 + r.rank_sharp2 == r.h1_poisson + r.h2_de_rham;
    r.quotient_applicable = r.h2_de_rham == 0;
    r.quotient_formula = r.pic + r.rank_sharp1 == r.h1_poisson;
    return r;
}

BasicCohomology basic_cohomology_dim(const PoissonStructure& pi, const WeightGrading& grading, int k, long w)
{
    if (k != 1 && k != 2)
        throw GradeError("basic cohomology is computed in degrees 1 and 2");
    check_preconditions(ComplexKind::basic, pi, grading);
    const SliceCohomology s = basic_slice(pi, grading, k, w, CohomologyOptions{});
    return {s.kernel, s.image, s.dim};
}

} // namespace poisson
