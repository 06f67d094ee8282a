#pragma once

// Identities of the bracket calculus, each checked on one random draw. Shared by the unit
// tests and the acceptance runner.

#include <algorithm>

#include "poisson/calculus.hpp"
#include "random.hpp"

namespace poisson::identities {

inline int sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

inline Multivector signed_(int s, const Multivector& t) { return s > 0 ? t : -t; }

inline std::size_t random_dim(test::Rng& rng) { return static_cast<std::size_t>(rng.uniform(2, 4)); }

inline bool d_squared(test::Rng& rng)
{
    const std::size_t n = random_dim(rng);
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n)));
    return de_rham_d(de_rham_d(rng.form(n, k))).is_zero();
}

inline bool d_pi_squared(test::Rng& rng)
{
    const std::size_t n = random_dim(rng);
    const PoissonStructure pi = rng.poisson(n);
    const auto k = static_cast<std::size_t>(rng.uniform(0, 2));
    return lichnerowicz_d(pi, lichnerowicz_d(pi, rng.field(n, k))).is_zero();
}

// [a,b] = -(-1)^{(p-1)(q-1)} [b,a]
inline bool schouten_antisymmetry(test::Rng& rng)
{
    const std::size_t n = random_dim(rng);
    const int top = static_cast<int>(std::min<std::size_t>(n, 3));
    const long p = rng.uniform(0, top), q = rng.uniform(p == 0 ? 1 : 0, top);
    const Multivector a = rng.field(n, static_cast<std::size_t>(p)), b = rng.field(n, static_cast<std::size_t>(q));
    return schouten(a, b) == signed_(-sign_of((p - 1) * (q - 1)), schouten(b, a));
}

// [P, Q^R] = [P,Q]^R + (-1)^{(p-1)q} Q^[P,R]
inline bool schouten_leibniz(test::Rng& rng)
{
    const std::size_t n = random_dim(rng);
    const long p = rng.uniform(1, 2), q = rng.uniform(0, 2), r = rng.uniform(0, 2);
    const Multivector a = rng.field(n, static_cast<std::size_t>(p));
    const Multivector b = rng.field(n, static_cast<std::size_t>(q));
    const Multivector c = rng.field(n, static_cast<std::size_t>(r));
    return schouten(a, wedge(b, c)) == wedge(schouten(a, b), c) + signed_(sign_of((p - 1) * q), wedge(b, schouten(a, c)));
}

// (-1)^{(p-1)(r-1)} [P,[Q,R]] + cyclic = 0
inline bool schouten_jacobi(test::Rng& rng)
{
    const std::size_t n = random_dim(rng);
    const long p = rng.uniform(1, 2), q = rng.uniform(1, 2), r = rng.uniform(1, 2);
    const Multivector a = rng.field(n, static_cast<std::size_t>(p), 2);
    const Multivector b = rng.field(n, static_cast<std::size_t>(q), 2);
    const Multivector c = rng.field(n, static_cast<std::size_t>(r), 2);
    const Multivector sum = signed_(sign_of((p - 1) * (r - 1)), schouten(a, schouten(b, c)))
        + signed_(sign_of((q - 1) * (p - 1)), schouten(b, schouten(c, a)))
        + signed_(sign_of((r - 1) * (q - 1)), schouten(c, schouten(a, b)));
    return sum.is_zero();
}

// pi#(d w) = eps d_pi(pi# w)
inline bool chain_map(test::Rng& rng)
{
    const std::size_t n = random_dim(rng);
    const PoissonStructure pi = rng.poisson(n);
    const Form w = rng.form(n, static_cast<std::size_t>(rng.uniform(0, 2)));
    return sharp(pi, de_rham_d(w)) == Rational(SignConvention::chain_map_sign) * lichnerowicz_d(pi, sharp(pi, w));
}

// pi#[a,b]_pi = [pi#a, pi#b]
inline bool koszul_to_lie(test::Rng& rng)
{
    const std::size_t n = random_dim(rng);
    const PoissonStructure pi = rng.poisson(n);
    const Form a = rng.form(n, 1), b = rng.form(n, 1);
    return sharp(pi, koszul_bracket(pi, a, b)) == schouten(sharp(pi, a), sharp(pi, b));
}

// d[a,b]_pi = L_{pi#a} db - L_{pi#b} da
inline bool d_of_koszul(test::Rng& rng)
{
    const std::size_t n = random_dim(rng);
    const PoissonStructure pi = rng.poisson(n);
    const Form a = rng.form(n, 1), b = rng.form(n, 1);
    return de_rham_d(koszul_bracket(pi, a, b))
        == lie_derivative(sharp(pi, a), de_rham_d(b)) - lie_derivative(sharp(pi, b), de_rham_d(a));
}

// L_{pi# eta} pi = pi#(d eta)
inline bool hamiltonian_flow(test::Rng& rng)
{
    const std::size_t n = random_dim(rng);
    const PoissonStructure pi = rng.poisson(n);
    const Form eta = rng.form(n, 1);
    return lie_derivative(sharp(pi, eta), pi.bivector()) == sharp(pi, de_rham_d(eta));
}

} // namespace poisson::identities
