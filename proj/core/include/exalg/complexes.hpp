#pragma once

#include "exalg/forms.hpp"
#include "exalg/graded.hpp"
#include "exalg/report.hpp"

namespace exalg {

/// A finite-dimensional complex: odd differential with Q^2 = 0.
struct Complex {
    SpacePtr space;
    GradedMap Q;
};

CheckReport validate_complex(const Complex& c);

/// Contraction data onto a residual subcomplex: V = V_r (+) V_c with the odd
/// homotopy h inverting Q on the contractible part and the side conditions
/// h h = h i = pi h = 0,  {Q, h} = id - i pi,  Q i = i Q_r,  pi Q = Q_r pi.
struct Sdr {
    Complex total;   // (V, Q)
    Complex reduced; // (V_r, Q_r)
    GradedMap incl;  // i : V_r -> V, even
    GradedMap proj;  // pi : V -> V_r, even
    GradedMap h;     // V -> V, odd

    /// Projector onto the contractible part, id - i pi = {Q, h}.
    GradedMap proj_contractible() const;
};

CheckReport validate_sdr(const Sdr& s);

enum class EvolutionMode { IdempotentClosedForm, Truncated };

/// The interval evolution I(t, dt) = exp(-t H)(1 - dt G), stored as the body
/// and the dt-coefficient -body G. In closed form the body is id - (1-u) H
/// with u = e^{-t}, valid exactly for idempotent H; otherwise the body is the
/// truncated exponential series in a formal length t.
struct EvolutionForm {
    EvolutionMode mode;
    std::string var;    // "u" symbol (closed form) or "t" symbol (truncated)
    GradedMap body;     // even
    GradedMap one_form; // odd: -body G
    int order = 0;      // truncation order (Truncated mode)

    FormCtxPtr form_ctx() const;
    FormOp as_form() const;
};

EvolutionForm evolution_form_idempotent(const GradedMap& H, const GradedMap& G,
                                        const std::string& u_var);
EvolutionForm evolution_form_truncated(const GradedMap& H, const GradedMap& G,
                                       const std::string& t_var, int order);

/// Residual of (d + Q) I = 0. In truncated mode the identity holds through
/// order-1 below the truncation; the returned residual is cut there.
FormOp closure_residual(const EvolutionForm& ev, const GradedMap& Q);

/// Exact length integral of the evolution's dt-part over (0, inf) in the
/// closed form representation: integral of u^m dt is 1/m. The u^0 coefficient
/// must vanish (it does whenever the side conditions hold).
GradedMap integrate_length_to_infinity(const GradedMap& one_form, const std::string& u_var);

/// integral over R_+ of exp(-t Proj_c - dt h) = -h.
GradedMap edge_integral(const Sdr& s, const std::string& u_var = "u");

/// u -> 0 limit of the closed-form body: the projector i pi onto V_r in V.
GradedMap limit_at_infinity(const Sdr& s);

} // namespace exalg
