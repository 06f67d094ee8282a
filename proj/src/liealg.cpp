#include "poisson/liealg.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

#include "poisson/errors.hpp"
#include "poisson/linalg.hpp"

namespace poisson {

StructureConstants::StructureConstants(std::size_t dim, std::vector<Rational> values)
    : dim_(dim), values_(std::move(values))
{
    if (dim_ == 0)
        throw DimensionError("a Lie algebra needs dimension at least 1");
    if (values_.size() != dim_ * dim_ * dim_)
        throw DimensionError("structure constants need dim^3 entries");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if ((*this)(i, j, k) != -(*this)(j, i, k))
                    throw std::invalid_argument("structure constants are not antisymmetric at (" + std::to_string(i + 1)
                                                + ", " + std::to_string(j + 1) + ", " + std::to_string(k + 1) + ")");
}

StructureConstants StructureConstants::from_brackets(std::size_t dim, const std::vector<Bracket>& brackets)
{
    std::vector<Rational> values(dim * dim * dim);
    for (const auto& b : brackets) {
        if (b.i >= dim || b.j >= dim)
            throw DimensionError("bracket index out of range");
        if (b.i >= b.j)
            throw std::invalid_argument("brackets are given for i < j only");
        for (const auto& [k, c] : b.terms) {
            if (k >= dim)
                throw DimensionError("bracket index out of range");
            values[(b.i * dim + b.j) * dim + k] += c;
            values[(b.j * dim + b.i) * dim + k] -= c;
        }
    }
    return StructureConstants(dim, std::move(values));
}

std::vector<StructureConstants::Bracket> StructureConstants::brackets() const
{
    std::vector<Bracket> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            Bracket b{i, j, {}};
            for (std::size_t k = 0; k < dim_; ++k)
                if (!(*this)(i, j, k).is_zero())
                    b.terms.emplace_back(k, (*this)(i, j, k));
            if (!b.terms.empty())
                out.push_back(std::move(b));
        }
    return out;
}

bool StructureConstants::satisfies_jacobi() const
{
    const auto& c = *this;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k)
                for (std::size_t l = 0; l < dim_; ++l) {
                    Rational sum;
                    for (std::size_t m = 0; m < dim_; ++m)
                        sum += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
                    if (!sum.is_zero())
                        return false;
                }
    return true;
}

PoissonStructure linear_poisson(const StructureConstants& c)
{
    const std::size_t n = c.dim();
    Multivector pi(n, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Polynomial coeff(n);
            for (std::size_t k = 0; k < n; ++k)
                if (!c(i, j, k).is_zero())
                    coeff += Polynomial::variable(n, k) * c(i, j, k);
            if (!coeff.is_zero())
                pi.add_term({i, j}, coeff);
        }
    return PoissonStructure::checked(std::move(pi));
}

namespace {

using Terms = std::vector<std::pair<std::size_t, Rational>>;

StructureConstants make(std::size_t dim, std::initializer_list<std::tuple<std::size_t, std::size_t, Terms>> brackets)
{
    std::vector<StructureConstants::Bracket> list;
    for (const auto& [i, j, terms] : brackets)
        list.push_back({i, j, terms});
    return StructureConstants::from_brackets(dim, list);
}

} // namespace

StructureConstants builtin(std::string_view name)
{
    if (name == "heisenberg3")
        return make(3, {{0, 1, {{2, 1}}}});
    if (name == "aff1")
        return make(2, {{0, 1, {{1, 1}}}});
    if (name == "so3")
        return make(3, {{0, 1, {{2, 1}}}, {1, 2, {{0, 1}}}, {0, 2, {{1, -1}}}});
    if (name == "sl2") // h, e, f
        return make(3, {{0, 1, {{1, 2}}}, {0, 2, {{2, -2}}}, {1, 2, {{0, 1}}}});
    if (name == "se2")
        return make(3, {{0, 1, {{2, 1}}}, {0, 2, {{1, -1}}}});
    constexpr std::string_view prefix = "abelian(";
    if (name.starts_with(prefix) && name.ends_with(")")) {
        const std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        std::size_t n = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc{} && end == digits.data() + digits.size() && n >= 1 && n <= 16)
            return StructureConstants(n, std::vector<Rational>(n * n * n));
    }
    throw UnknownNameError("unknown Lie algebra '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names()
{
    return {"abelian(n)", "aff1", "heisenberg3", "se2", "sl2", "so3"};
}

// The Chevalley-Eilenberg complex below is deliberately self-contained: it enumerates its
// own bases and never touches the tensor or calculus code.
namespace {

using Monomial = std::vector<unsigned>;
using Subset = std::vector<std::size_t>;

void monomials_rec(std::size_t n, unsigned d, std::size_t pos, Monomial& cur, std::vector<Monomial>& out)
{
    if (pos + 1 == n) {
        cur[pos] = d;
        out.push_back(cur);
        return;
    }
    for (unsigned a = d + 1; a-- > 0;) {
        cur[pos] = a;
        monomials_rec(n, d - a, pos + 1, cur, out);
    }
}

std::vector<Monomial> symmetric_basis(std::size_t n, unsigned d)
{
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    monomials_rec(n, d, 0, cur, out);
    return out;
}

void subsets_rec(std::size_t n, std::size_t k, std::size_t start, Subset& cur, std::vector<Subset>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets_rec(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Subset> exterior_basis(std::size_t n, int k)
{
    std::vector<Subset> out;
    if (k < 0 || static_cast<std::size_t>(k) > n)
        return out;
    Subset cur;
    subsets_rec(n, static_cast<std::size_t>(k), 0, cur, out);
    return out;
}

// Sorts s by bubble sort; returns the permutation sign, 0 on a repeat.
int sort_sign(Subset& s)
{
    int sign = 1;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b + 1 < s.size() - a; ++b) {
            if (s[b] == s[b + 1])
                return 0;
            if (s[b] > s[b + 1]) {
                std::swap(s[b], s[b + 1]);
                sign = -sign;
            }
        }
    for (std::size_t b = 0; b + 1 < s.size(); ++b)
        if (s[b] == s[b + 1])
            return 0;
    return sign;
}

// e_i acting on x^m as the derivation with e_i . x_j = sum_k c(i,j,k) x_k.
std::map<Monomial, Rational> act(const StructureConstants& c, std::size_t i, const Monomial& m)
{
    std::map<Monomial, Rational> out;
    const std::size_t n = c.dim();
    for (std::size_t j = 0; j < n; ++j) {
        if (m[j] == 0)
            continue;
        for (std::size_t k = 0; k < n; ++k) {
            if (c(i, j, k).is_zero())
                continue;
            Monomial r = m;
            --r[j];
            ++r[k];
            out[r] += Rational(static_cast<long>(m[j])) * c(i, j, k);
        }
    }
    return out;
}

// Matrix of d: C^k -> C^{k+1}, C^k = Hom(Lambda^k g, S^d g).
SparseMatrix ce_differential(const StructureConstants& c, int k, unsigned d)
{
    const std::size_t n = c.dim();
    const auto sym = symmetric_basis(n, d);
    std::map<Monomial, std::size_t> sym_index;
    for (std::size_t i = 0; i < sym.size(); ++i)
        sym_index.emplace(sym[i], i);
    const auto source = exterior_basis(n, k);
    const auto target = exterior_basis(n, k + 1);
    std::map<Subset, std::size_t> source_index;
    for (std::size_t i = 0; i < source.size(); ++i)
        source_index.emplace(source[i], i);

    // rows: (target subset, monomial); columns: (source subset, monomial)
    std::vector<std::map<std::size_t, Rational>> columns(source.size() * sym.size());
    for (std::size_t t = 0; t < target.size(); ++t) {
        const Subset& in = target[t];
        const std::size_t len = in.size();
        for (std::size_t s = 0; s < len; ++s) {
            Subset rest;
            for (std::size_t q = 0; q < len; ++q)
                if (q != s)
                    rest.push_back(in[q]);
            const std::size_t src = source_index.at(rest);
            const int sign = s % 2 == 0 ? 1 : -1;
            for (std::size_t mi = 0; mi < sym.size(); ++mi)
                for (const auto& [mono, v] : act(c, in[s], sym[mi]))
                    columns[src * sym.size() + mi][t * sym.size() + sym_index.at(mono)] += Rational(sign) * v;
        }
        for (std::size_t s = 0; s < len; ++s)
            for (std::size_t u = s + 1; u < len; ++u) {
                const int outer = (s + u) % 2 == 0 ? 1 : -1;
                for (std::size_t l = 0; l < n; ++l) {
                    const Rational& coeff = c(in[s], in[u], l);
                    if (coeff.is_zero())
                        continue;
                    Subset args{l};
                    for (std::size_t q = 0; q < len; ++q)
                        if (q != s && q != u)
                            args.push_back(in[q]);
                    const int sign = sort_sign(args);
                    if (sign == 0)
                        continue;
                    const std::size_t src = source_index.at(args);
                    for (std::size_t mi = 0; mi < sym.size(); ++mi)
                        columns[src * sym.size() + mi][t * sym.size() + mi] += Rational(outer * sign) * coeff;
                }
            }
    }
    std::vector<SparseVector> cols;
    cols.reserve(columns.size());
    for (auto& col : columns) {
        SparseVector v;
        for (auto& [r, x] : col)
            if (!x.is_zero())
                v.emplace_back(r, std::move(x));
        cols.push_back(std::move(v));
    }
    return SparseMatrix::from_columns(target.size() * sym.size(), cols);
}

// Rank through incremental row reduction, a different route from the fraction-free
// elimination used by the cohomology slices.
std::size_t reduced_rank(const SparseMatrix& m)
{
    RowReducer r(m.cols());
    for (const auto& row : m.row_data())
        r.insert(row);
    return r.rank();
}

} // namespace

std::size_t ce_cohomology(const StructureConstants& c, int k, unsigned d)
{
    if (!c.satisfies_jacobi())
        throw NotPoissonError("structure constants violate the Jacobi identity");
    if (k < 0 || static_cast<std::size_t>(k) > c.dim())
        return 0;
    const std::size_t n = c.dim();
    const std::size_t cochains = exterior_basis(n, k).size() * symmetric_basis(n, d).size();
    const std::size_t out = reduced_rank(ce_differential(c, k, d));
    const std::size_t in = k > 0 ? reduced_rank(ce_differential(c, k - 1, d)) : 0;
    return cochains - out - in;
}

} // namespace poisson
