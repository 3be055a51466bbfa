#pragma once

#include "exalg/complexes.hpp"
#include "exalg/forms.hpp"
#include "exalg/report.hpp"

namespace exalg {

/// Z/2-graded bicomplex with differentials Q, G_minus, a homotopy G
/// contracting onto the cohomology model W, and the strong Hodge identities
///   G_minus i_W = 0,  pi_W G_minus = 0,  {G, G_minus} = 0
/// on top of the contraction identities.
struct HodgeData {
    Complex c; // (V, Q)
    GradedMap G;
    GradedMap G_minus;
    SpacePtr W;
    GradedMap i_W;
    GradedMap pi_W;

    /// The contraction (V, Q) -> (W, 0) with homotopy G.
    Sdr as_sdr() const;
};

CheckReport validate_strong_hodge(const HodgeData& h);

enum class FamilyMode { Simplified, Full };

/// Even End(V)-valued series U(t) with U(0) = 0 whose coefficient operators
/// pairwise commute; simplified mode demands [Q,U] = 0 and [[G-,U],U] = 0,
/// full mode demands [Q,U] + [[G-,U],U] = 0.
struct CommFamily {
    FamilyMode mode = FamilyMode::Simplified;
    std::vector<std::string> params;
    GradedMap U; // over a ring containing the params
};

FormCtxPtr family_ctx(const CommFamily& fam);

CheckReport validate_comm_family(const HodgeData& h, const CommFamily& fam, int order);

/// A = d( sum_k pi_W (U (-G G_minus U)^k) i_W ), truncated; exact by
/// construction, so dA = 0 holds identically.
FormOp build_A(const HodgeData& h, const CommFamily& fam, int order);

/// The perturbing differential phi = dU + [G_minus, U] of the bicomplex route.
FormOp transferred_phi(const HodgeData& h, const CommFamily& fam);

/// One-form part of the operator transferred from phi onto W along (i_W,
/// pi_W, G);  A_1 = sum_k pi phi (-G phi)^k i.
FormOp transferred_one_form(const HodgeData& h, const CommFamily& fam, int order);

/// Full inhomogeneous transferred operator (all form degrees).
FormOp transferred_operator(const HodgeData& h, const CommFamily& fam, int order);

struct CommutativityReport {
    FormOp wedge; // A ^ A, the commutator two-form
    FormOp dA;
    bool pass() const { return wedge.is_zero() && dA.is_zero(); }
};

CommutativityReport check_commutativity(const FormOp& A, int order);

/// (Q + z G_minus)^2 as a map over a ring with the Laurent variable z; zero
/// exactly when the bicomplex identities hold.
GradedMap saito_differential_square(const HodgeData& h, const std::string& z_var = "z");

/// {A, B} in the form algebra.
FormOp supercommutator(const FormOp& a, const FormOp& b);

} // namespace exalg
