#pragma once

#include "exalg/complexes.hpp"
#include "exalg/forms.hpp"
#include "exalg/transfer.hpp"
#include "exalg/trees.hpp"

namespace exalg {

/// Evolution data for quantum mechanics on a graph; every edge of length t
/// carries I(t, dt) = exp(-t H)(1 - dt G).
struct TqmModel {
    GradedMap H;
    GradedMap G;
    EvolutionMode mode = EvolutionMode::IdempotentClosedForm;
    int order = 0; // truncation order of exp(-tH) in Truncated mode
};

/// Ring carrying one length variable per edge symbol: u_<sym> free variables
/// in closed form, bounded t_<sym> variables in truncated mode. Extra bounded
/// variables may be appended (e.g. a deformation parameter).
RingPtr tqm_ring(const std::vector<std::string>& symbols, EvolutionMode mode, int order,
                 std::vector<std::string> extra_bounded = {});

/// The form-direction context of a symbol list (one dt per edge).
FormCtxPtr tqm_ctx(const std::vector<std::string>& symbols, EvolutionMode mode);

/// Evolution operator of one edge as a FormOp in the given context.
FormOp edge_evolution(const TqmModel& model, const FormCtxPtr& ctx, const std::string& symbol);

/// Amplitude of a decorated tree-or-chain: every edge (leaf edges, internal
/// edges and the root edge) carries the evolution of its length symbol;
/// internal vertices carry operations by arity. Edge symbols are assigned in
/// depth-first order: root edge first, then for each vertex its children left
/// to right (edge to the child before the child's own subtree).
FormOp graph_amplitude(const RootedTree& shape, const std::vector<std::string>& edge_symbols,
                       const TqmModel& model, const OperationSet& ops);

/// Preamplitude: external edges replaced by their infinite-length limits
/// (inclusion at the leaves, projection at the root); internal edges keep
/// their evolution forms. Closed-form mode only. Symbols decorate internal
/// edges in depth-first order.
FormOp preamplitude(const RootedTree& shape, const std::vector<std::string>& edge_symbols,
                    const Sdr& sdr, const OperationSet& ops);

/// Two-sided correlator exp(-t1 H - dt1 G) O exp(-t2 H - dt2 G).
FormOp observable_correlator(const GradedMap& O, const TqmModel& model,
                             const std::string& left_symbol, const std::string& right_symbol);

/// Response of the interval evolution to a deformation Q -> Q + deltaQ,
/// evaluated symbolically order by order in the length t:
///   point_part    = int_0^t E(s) deltaQ E(t-s) ds   (the 0-form convolution)
///   descent_part  = -int_0^t (E(s) G deltaQ E(t-s) + E(s) deltaQ E(t-s) G) ds
/// (the fiber integral of the ds-component; it matches the first-order
/// variation of the body under H -> H + {deltaQ, G} whenever [G, H] = 0).
struct DeformationResponse {
    GradedMap point_part;
    GradedMap descent_part;
};

DeformationResponse deformation_response(const GradedMap& deltaQ, const GradedMap& H,
                                         const GradedMap& G, const std::string& t_var,
                                         int order);

/// d + ad_Q of a graph amplitude (zero for Q-closed decorations).
FormOp amplitude_closure_residual(const FormOp& amplitude, const GradedMap& Q);

} // namespace exalg
