#pragma once

#include "exalg/commutativity.hpp"
#include "exalg/graded.hpp"

namespace exalg {

/// Polyvector-field model of a univariate singularity with derivative W':
/// basis {x^j : j < cutoff} u {x^j th : j < cutoff - deg W'},
///   Q   = multiplication by W' after contracting th,
///   G   = division by W' into the th-part,
///   G_- = d/dx d/dth,
/// cohomology model W = Milnor ring, reps {x^j : j < deg W'}.
struct PolyvectorModel {
    HodgeData hodge;
    MultiOp product; // truncated supercommutative associative product on B
    std::size_t unit = 0;
    int milnor_dim = 0; // deg W'
};

/// wprime[k] is the coefficient of x^k; the leading coefficient must be
/// nonzero and cutoff must leave room for the th-part (cutoff > deg W'),
/// otherwise the operators do not close on the basis.
PolyvectorModel polyvector_model(const std::vector<Scalar>& wprime, int cutoff,
                                 const RingPtr& ring);

/// Left multiplication operator b -> element * b for an algebra product.
GradedMap left_multiplication(const MultiOp& product, const std::vector<Series>& element);
/// Right multiplication b -> b * element (with the Koszul sign of moving the
/// operator past b; for even elements this is plain).
GradedMap right_multiplication(const MultiOp& product, const std::vector<Series>& element);

/// The family U = sum_a t_a * (multiplication by the Milnor representative
/// Phi_a), for params t_1..t_mu already present in the model's ring.
CommFamily monomial_family(const PolyvectorModel& model,
                           const std::vector<std::string>& params);

} // namespace exalg
