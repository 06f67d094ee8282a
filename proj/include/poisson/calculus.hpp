#pragma once

#include <optional>
#include <string_view>

#include "poisson/tensor.hpp"

namespace poisson {

// Every sign-sensitive formula in the engine reads from this record; the
// property suite asserts the identities it promises.
//
//  * Schouten bracket: [P,Q] = sum_i (P <d/dtheta_i)(d/dx_i Q)
//                               - (-1)^{(p-1)(q-1)} (Q <d/dtheta_i)(d/dx_i P),
//    right derivatives in the odd variables theta_i = d/dx_i. Then [X,f] = X(f),
//    [X,Y] is the Lie bracket and [P,Q] = -(-1)^{(p-1)(q-1)}[Q,P].
//  * Contraction acts on the first slot: i_{dx}(d/dx ^ d/dy) = d/dy.
//  * pi#(alpha) = i_alpha pi, so <beta, pi#alpha> = pi(alpha, beta), extended to
//    k-forms multiplicatively; X_f = pi#(df) = {f, .}.
//  * Chain map: pi# o d_dR = chain_map_sign * d_pi o pi# with d_pi = [pi, .].
//    Consequently d_pi f = -X_f and d_pi Z = -L_Z pi; the Poisson differential
//    delta = chain_map_sign * d_pi satisfies delta f = X_f and delta Z = L_Z pi.
struct SignConvention {
    static constexpr std::string_view schouten = "right-odd-derivative; [X,f]=X(f); [P,Q]=-(-1)^((p-1)(q-1))[Q,P]";
    static constexpr std::string_view contraction = "first-slot; i_dx(dx^dy)=dy";
    static constexpr std::string_view sharp = "pi#(alpha)=i_alpha(pi); <beta,pi#alpha>=pi(alpha,beta); multiplicative on k-forms";
    static constexpr std::string_view lichnerowicz = "d_pi(V)=[pi,V]";
    static constexpr int chain_map_sign = -1;
};

inline constexpr SignConvention sign_convention{};

Multivector schouten(const Multivector& a, const Multivector& b);

Form de_rham_d(const Form& omega);

// Cartan formula on forms; Schouten bracket [X, t] on multivectors.
Form lie_derivative(const Multivector& x, const Form& omega);
Multivector lie_derivative(const Multivector& x, const Multivector& t);

enum class JacobiStatus { unknown, verified, failed };

// A bivector with a cached verdict on [pi, pi] = 0.
class PoissonStructure {
public:
    explicit PoissonStructure(Multivector bivector);

    // Constructs and runs the Jacobi check immediately.
    static PoissonStructure checked(Multivector bivector);

    const Multivector& bivector() const noexcept { return bivector_; }
    std::size_t dim() const noexcept { return bivector_.dim(); }
    JacobiStatus status() const noexcept { return status_; }
    bool is_verified() const noexcept { return status_ == JacobiStatus::verified; }

    // Throws NotPoissonError unless verified.
    void require_verified(std::string_view operation) const;

    friend bool operator==(const PoissonStructure& a, const PoissonStructure& b)
    {
        return a.bivector_ == b.bivector_;
    }

private:
    friend bool jacobi_check(PoissonStructure& pi);

    Multivector bivector_;
    JacobiStatus status_ = JacobiStatus::unknown;
};

bool jacobi_check(const Multivector& bivector);
// Runs the check and caches the verdict on pi.
bool jacobi_check(PoissonStructure& pi);

// d_pi V = [pi, V]. Requires a verified structure.
Multivector lichnerowicz_d(const PoissonStructure& pi, const Multivector& v);

Multivector sharp(const Multivector& bivector, const Form& omega);
Multivector sharp(const PoissonStructure& pi, const Form& omega);

// pi(alpha, beta) = <beta, pi# alpha>.
Polynomial pair(const Multivector& bivector, const Form& alpha, const Form& beta);

// X_f = pi#(df).
Multivector hamiltonian_vector_field(const Multivector& bivector, const Polynomial& f);

// [a,b]_pi = L_{pi#a} b - L_{pi#b} a - d(pi(a,b)). Requires a verified structure.
Form koszul_bracket(const PoissonStructure& pi, const Form& a, const Form& b);

// E = sum x_i d/dx_i
Multivector euler_vector_field(std::size_t dim);

// s with L_E pi = s pi when the coefficients of pi share one degree p (then s = p - 2);
// nullopt when they do not. The zero bivector reports 0.
std::optional<int> euler_homogeneity(const PoissonStructure& pi);

} // namespace poisson
