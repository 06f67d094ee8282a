#include "poisson/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "poisson/errors.hpp"

namespace poisson {

unsigned total_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool GradedLexOrder::operator()(const Exponent& a, const Exponent& b) const
{
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db)
        return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void fill_monomials(std::size_t index, unsigned remaining, Exponent& current, std::vector<Exponent>& out)
{
    if (index + 1 == current.size()) {
        current[index] = remaining;
        out.push_back(current);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        current[index] = e;
        fill_monomials(index + 1, remaining - e, current, out);
    }
    current[index] = 0;
}

} // namespace

std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned d)
{
    std::vector<Exponent> out;
    if (n == 0) {
        if (d == 0)
            out.emplace_back();
        return out;
    }
    Exponent current(n, 0);
    fill_monomials(0, d, current, out);
    return out;
}

Polynomial::Polynomial(std::size_t dim) : dim_(dim) {}

Polynomial Polynomial::constant(std::size_t dim, const Rational& c)
{
    Polynomial p(dim);
    p.add_term(Exponent(dim, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t index)
{
    if (index >= dim)
        throw DimensionError("variable index " + std::to_string(index) + " out of range");
    Exponent e(dim, 0);
    e[index] = 1;
    Polynomial p(dim);
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::monomial(Exponent exponent, const Rational& c)
{
    Polynomial p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const
{
    if (terms_.empty())
        return -1;
    // Largest term comes first under GradedLexOrder.
    return static_cast<int>(total_degree(terms_.begin()->first));
}

std::optional<unsigned> Polynomial::homogeneous_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    const unsigned d = total_degree(terms_.begin()->first);
    if (total_degree(terms_.rbegin()->first) != d)
        return std::nullopt;
    return d;
}

Rational Polynomial::coefficient(const Exponent& e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

Rational Polynomial::constant_term() const
{
    return coefficient(Exponent(dim_, 0));
}

void Polynomial::add_term(const Exponent& e, const Rational& c)
{
    if (e.size() != dim_)
        throw DimensionError("exponent length " + std::to_string(e.size()) + " does not match dimension "
                             + std::to_string(dim_));
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Polynomial::check_dim(const Polynomial& other) const
{
    if (other.dim_ != dim_)
        throw DimensionError("polynomial dimension mismatch: " + std::to_string(dim_) + " vs "
                             + std::to_string(other.dim_));
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    check_dim(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    check_dim(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [e, coeff] : r.terms_)
        coeff = -coeff;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_dim(b);
    Polynomial r(a.dim_);
    Exponent e(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result = constant(dim_, 1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t index) const
{
    if (index >= dim_)
        throw DimensionError("derivative index " + std::to_string(index) + " out of range");
    Polynomial r(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0)
            continue;
        Exponent de = e;
        --de[index];
        r.terms_.emplace(std::move(de), c * Rational(static_cast<long>(e[index])));
    }
    return r;
}

Polynomial Polynomial::homogeneous_part(unsigned degree) const
{
    Polynomial r(dim_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == degree)
            r.terms_.emplace(e, c);
    return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const
{
    if (images.size() != dim_)
        throw DimensionError("substitution needs one image per variable");
    if (dim_ == 0)
        return *this;
    const std::size_t target = images.front().dim();
    for (const auto& im : images)
        if (im.dim() != target)
            throw DimensionError("substitution images have mixed dimensions");

    // Cache powers of each image; exponents are small in practice.
    std::vector<std::vector<Polynomial>> powers(dim_);
    Polynomial result(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(target, c);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (e[i] == 0)
                continue;
            auto& cache = powers[i];
            if (cache.empty())
                cache.push_back(constant(target, 1));
            while (cache.size() <= e[i])
                cache.push_back(cache.back() * images[i]);
            term = term * cache[e[i]];
        }
        result += term;
    }
    return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
    if (point.size() != dim_)
        throw DimensionError("evaluation point has wrong dimension");
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < dim_; ++i)
            for (unsigned k = 0; k < e[i]; ++k)
                t *= point[i];
        sum += t;
    }
    return sum;
}

} // namespace poisson
