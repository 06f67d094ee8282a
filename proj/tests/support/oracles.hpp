#pragma once

// Component-formula oracles. They work on full antisymmetric components and share no
// code with calculus.cpp, so agreement between the two is evidence rather than tautology.

#include <vector>

#include "poisson/linalg.hpp"
#include "poisson/tensor.hpp"

namespace poisson::oracle {

// t(i1, ..., ik) for an arbitrary index tuple.
template <TensorKind Kind>
Polynomial component(const Alternating<Kind>& t, std::vector<std::size_t> idx)
{
    const int sign = sort_with_sign(idx);
    if (sign == 0)
        return Polynomial(t.dim());
    const Polynomial c = t.coefficient(idx);
    return sign > 0 ? c : -c;
}

// {f, g} = sum_{i,j} pi^{ij} d_i f d_j g
inline Polynomial bracket(const Multivector& pi, const Polynomial& f, const Polynomial& g)
{
    const std::size_t n = pi.dim();
    Polynomial out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                out += component(pi, {i, j}) * f.derivative(i) * g.derivative(j);
    return out;
}

// {x_i, {x_j, x_k}} + cyclic vanishes for all coordinate triples.
inline bool jacobiator_vanishes(const Multivector& pi)
{
    const std::size_t n = pi.dim();
    std::vector<Polynomial> x;
    for (std::size_t i = 0; i < n; ++i)
        x.push_back(Polynomial::variable(n, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Polynomial s = bracket(pi, x[i], bracket(pi, x[j], x[k]))
                    + bracket(pi, x[j], bracket(pi, x[k], x[i])) + bracket(pi, x[k], bracket(pi, x[i], x[j]));
                if (!s.is_zero())
                    return false;
            }
    return true;
}

inline Polynomial vector_component(const Multivector& x, std::size_t j)
{
    return x.coefficient({j});
}

// [X, Y]^k = X^j d_j Y^k - Y^j d_j X^k
inline Multivector lie_bracket(const Multivector& x, const Multivector& y)
{
    const std::size_t n = x.dim();
    Multivector out(n, 1);
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial c(n);
        for (std::size_t j = 0; j < n; ++j)
            c += vector_component(x, j) * vector_component(y, k).derivative(j)
                - vector_component(y, j) * vector_component(x, k).derivative(j);
        out.add_term({k}, c);
    }
    return out;
}

// (L_X w)_I = X^j d_j w_I + sum_s sum_j (d_{i_s} X^j) w_{i_1 .. j .. i_k}
inline Form lie_derivative(const Multivector& x, const Form& w)
{
    const std::size_t n = x.dim();
    Form out(n, w.grade());
    for (const auto& idx : index_sets(n, w.grade())) {
        Polynomial c(n);
        for (std::size_t j = 0; j < n; ++j)
            c += vector_component(x, j) * w.coefficient(idx).derivative(j);
        for (std::size_t s = 0; s < idx.size(); ++s)
            for (std::size_t j = 0; j < n; ++j) {
                auto replaced = idx;
                replaced[s] = j;
                c += vector_component(x, j).derivative(idx[s]) * component(w, replaced);
            }
        out.add_term(idx, c);
    }
    return out;
}

// (i_X w)_J = sum_j X^j w_{j J}
inline Form contraction(const Multivector& x, const Form& w)
{
    const std::size_t n = x.dim();
    Form out(n, w.grade() - 1);
    for (const auto& idx : index_sets(n, w.grade() - 1)) {
        Polynomial c(n);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> full{j};
            full.insert(full.end(), idx.begin(), idx.end());
            c += vector_component(x, j) * component(w, full);
        }
        out.add_term(idx, c);
    }
    return out;
}

// (pi# a)^j = sum_i a_i pi^{ij}
inline Multivector sharp1(const Multivector& pi, const Form& a)
{
    const std::size_t n = pi.dim();
    Multivector out(n, 1);
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial c(n);
        for (std::size_t i = 0; i < n; ++i)
            if (i != j)
                c += a.coefficient({i}) * component(pi, {i, j});
        out.add_term({j}, c);
    }
    return out;
}

// Dense Gaussian elimination over Q.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero())
                continue;
            const Rational f = m[r][c] / m[rank][c];
            for (std::size_t q = c; q < cols; ++q)
                m[r][q] -= f * m[rank][q];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<Rational>> dense(const SparseMatrix& m)
{
    std::vector<std::vector<Rational>> d(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i))
            d[i][j] = v;
    return d;
}

} // namespace poisson::oracle
