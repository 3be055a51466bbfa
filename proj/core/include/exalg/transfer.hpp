#pragma once

#include "exalg/complexes.hpp"
#include "exalg/contract.hpp"
#include "exalg/report.hpp"
#include "exalg/trees.hpp"

#include <map>

namespace exalg {

/// A family of odd graded-symmetric multilinear operations m_n on one space,
/// each of order >= 1 in the formal parameter, so that every tree sum is
/// finite order by order.
struct OperationSet {
    SpacePtr space;
    RingPtr ring;
    std::string eps = "eps";
    std::map<int, MultiOp> ops; // arity -> operation

    const MultiOp* op(int arity) const {
        auto it = ops.find(arity);
        return it == ops.end() ? nullptr : &it->second;
    }
    std::set<int> arities() const {
        std::set<int> a;
        for (const auto& [k, v] : ops) a.insert(k);
        return a;
    }
};

CheckReport validate_operation_set(const OperationSet& s);

/// Contribution of a single decorated tree: leaves carry the inclusion,
/// internal edges carry -h, the root carries the projection. No symmetry
/// factor, inputs routed to the leaves in left-to-right order.
MultiOp tree_amplitude(const Sdr& sdr, const OperationSet& ops, const RootedTree& tree);

enum class SumMode {
    UnlabeledShapes,    // sum over shapes, weight 1/n_gamma, all input routings
    LabeledPartitions,  // sum over set-labeled trees via the partition recursion
};

/// Transferred operations on the residual complex through the given arity and
/// parameter order. Both modes compute the same object (tested); the labeled
/// recursion is the default implementation.
std::map<int, MultiOp> transferred_operations(const Sdr& sdr, const OperationSet& ops,
                                              int max_arity, int eps_order,
                                              SumMode mode = SumMode::LabeledPartitions);

/// {Q, phi} + phi^2, truncated.
GradedMap mc_residual(const GradedMap& Q, const GradedMap& phi, int eps_order);

/// One-leaf transferred operator A_1 = pi phi i - pi phi h phi i + ...
GradedMap one_leaf_transfer(const Sdr& sdr, const GradedMap& phi, int eps_order);

/// {Q_r, A_1} + A_1^2 on the residual complex.
GradedMap transferred_mc_residual(const Sdr& sdr, const GradedMap& phi, int eps_order);

/// Residuals of the quadratic relations of the symmetric (shifted) infinity
/// structure b = Q + sum m_n: for each arity n <= max_arity,
///   R_n = sum_{k} sum_{(k, n-k) unshuffles s} eps(s)
///         b_{n-k+1}( b_k(x_{s(1..k)}), x_{s(k+1..n)} ).
struct RelationReport {
    int max_arity = 0;
    std::map<int, MultiOp> residuals;
    bool pass() const {
        for (const auto& [n, r] : residuals)
            if (!r.is_zero()) return false;
        return true;
    }
};

RelationReport check_linfty(const Complex& c, const OperationSet& ops, int max_arity);

/// Enumerates (k, n-k) unshuffle permutations of {0..n-1}.
std::vector<std::vector<int>> unshuffles(int k, int n);

} // namespace exalg
