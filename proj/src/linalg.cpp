#include "poisson/linalg.hpp"

#include <algorithm>
#include <string>

#include "poisson/errors.hpp"

namespace poisson {

SparseVector to_sparse(const DenseVector& v)
{
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            out.emplace_back(i, v[i]);
    return out;
}

DenseVector to_dense(const SparseVector& v, std::size_t size)
{
    DenseVector out(size);
    for (const auto& [i, x] : v)
        out.at(i) = x;
    return out;
}

namespace {

// a - c * b
SparseVector axpy(const SparseVector& a, const Rational& c, const SparseVector& b)
{
    SparseVector out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(c * b[j].second));
            ++j;
        } else {
            Rational v = a[i].second - c * b[j].second;
            if (!v.is_zero())
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

Rational find(const SparseVector& v, std::size_t index)
{
    const auto it = std::lower_bound(v.begin(), v.end(), index,
                                     [](const auto& entry, std::size_t k) { return entry.first < k; });
    return (it != v.end() && it->first == index) ? it->second : Rational();
}

} // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& columns)
{
    SparseMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (const auto& [i, x] : columns[j]) {
            if (i >= rows)
                throw DimensionError("column entry out of range");
            if (!x.is_zero())
                m.data_[i].emplace_back(j, x);
        }
    }
    // Columns are visited in increasing order, so every row is already sorted.
    return m;
}

Rational SparseMatrix::at(std::size_t i, std::size_t j) const
{
    return find(data_.at(i), j);
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& r : data_)
        n += r.size();
    return n;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const SparseVector& r) { return r.empty(); });
}

SparseMatrix SparseMatrix::transposed() const
{
    SparseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, x] : data_[i])
            t.data_[j].emplace_back(i, x);
    return t;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const
{
    SparseVector out;
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational sum;
        const auto& r = data_[i];
        std::size_t a = 0, b = 0;
        while (a < r.size() && b < x.size()) {
            if (r[a].first < x[b].first)
                ++a;
            else if (x[b].first < r[a].first)
                ++b;
            else
                sum += r[a++].second * x[b++].second;
        }
        if (!sum.is_zero())
            out.emplace_back(i, std::move(sum));
    }
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product shape mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [k, x] : a.data_[i])
            for (const auto& [j, y] : b.data_[k])
                acc[j] += x * y;
        for (auto& [j, v] : acc)
            if (!v.is_zero())
                out.data_[i].emplace_back(j, std::move(v));
    }
    return out;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

void make_primitive(IntRow& row)
{
    if (row.empty())
        return;
    mpz_class g = 0;
    for (const auto& [j, x] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            break;
    }
    if (row.front().second < 0)
        g = -g;
    if (g != 1)
        for (auto& [j, x] : row)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(const SparseVector& row)
{
    mpz_class l = 1;
    for (const auto& [j, x] : row)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& [j, x] : row)
        out.emplace_back(j, mpz_class(x.numerator() * (l / x.denominator())));
    make_primitive(out);
    return out;
}

// a_lead * r - r_lead * p, with both leading entries in the same column.
IntRow cross_eliminate(const IntRow& r, const IntRow& p)
{
    const mpz_class& rl = r.front().second;
    const mpz_class& pl = p.front().second;
    IntRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 1, j = 1;
    mpz_class v;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, pl * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -(rl * p[j].second));
            ++j;
        } else {
            v = pl * r[i].second - rl * p[j].second;
            if (v != 0)
                out.emplace_back(r[i].first, v);
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

} // namespace

std::size_t rank(const SparseMatrix& m)
{
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    for (const auto& r : m.row_data())
        if (!r.empty())
            rows.push_back(integer_row(r));
    // Sparse rows first keeps fill-in down.
    std::stable_sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });

    std::map<std::size_t, IntRow> pivots;
    for (auto& row : rows) {
        while (!row.empty()) {
            const auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                const std::size_t lead = row.front().first;
                pivots.emplace(lead, std::move(row));
                break;
            }
            row = cross_eliminate(row, it->second);
        }
    }
    return pivots.size();
}

SparseVector RowReducer::reduce(SparseVector v) const
{
    // Pivot rows are zero in every other pivot column, so one pass in increasing
    // column order suffices.
    for (const auto& [col, prow] : pivots_) {
        const Rational c = find(v, col);
        if (!c.is_zero())
            v = axpy(v, c, prow);
    }
    return v;
}

bool RowReducer::insert(SparseVector v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    const std::size_t lead = v.front().first;
    const Rational inv = Rational(1) / v.front().second;
    for (auto& [j, x] : v)
        x *= inv;
    for (auto& [col, prow] : pivots_) {
        const Rational c = find(prow, lead);
        if (!c.is_zero())
            prow = axpy(prow, c, v);
    }
    pivots_.emplace(lead, std::move(v));
    return true;
}

RowReducer row_reduce(const SparseMatrix& m)
{
    RowReducer r(m.cols());
    for (const auto& row : m.row_data())
        if (!row.empty())
            r.insert(row);
    return r;
}

std::vector<DenseVector> kernel_basis(const SparseMatrix& m)
{
    const RowReducer r = row_reduce(m);
    std::vector<DenseVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (r.pivots().count(f))
            continue;
        DenseVector v(m.cols());
        v[f] = 1;
        for (const auto& [col, prow] : r.pivots())
            v[col] = -find(prow, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<DenseVector> solve(const SparseMatrix& m, const DenseVector& b)
{
    if (b.size() != m.rows())
        throw DimensionError("right-hand side length mismatch");
    const std::size_t n = m.cols();
    RowReducer r(n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SparseVector row = m.row(i);
        if (!b[i].is_zero())
            row.emplace_back(n, b[i]);
        if (!row.empty())
            r.insert(std::move(row));
    }
    if (r.pivots().count(n))
        return std::nullopt;
    DenseVector x(n);
    for (const auto& [col, prow] : r.pivots())
        x[col] = find(prow, n);
    return x;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product shape mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Rational RationalMatrix::determinant() const
{
    if (rows_ != cols_)
        throw DimensionError("determinant of a non-square matrix");
    RationalMatrix a = *this;
    Rational det = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t p = c;
        while (p < rows_ && a(p, c).is_zero())
            ++p;
        if (p == rows_)
            return Rational();
        if (p != c) {
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (a(i, c).is_zero())
                continue;
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < cols_; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

RationalMatrix RationalMatrix::inverse() const
{
    if (rows_ != cols_)
        throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero())
            ++p;
        if (p == n)
            throw NotInvertibleError("matrix is singular");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(p, j), a(c, j));
            std::swap(inv(p, j), inv(c, j));
        }
        const Rational s = Rational(1) / a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) *= s;
            inv(c, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero())
                continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

RationalMatrix RationalMatrix::transposed() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

} // namespace poisson
