#pragma once

#include "exalg/graded.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace exalg {

/// Tensor-contraction network in tree form. The wiring is the tree incidence
/// (each node's output feeds one input slot of its parent); evaluation order
/// is fixed once and for all: depth-first, inputs left to right. Every Koszul
/// sign in the system is produced here or in tensor()/permutation_op().
class ContractionTree {
  public:
    static ContractionTree leaf(SpacePtr s);
    static ContractionTree node(MultiOp op, std::vector<ContractionTree> children);
    static ContractionTree unary(GradedMap op, ContractionTree child);

    bool is_leaf() const { return !op_.has_value(); }
    int leaf_count() const { return leaves_; }
    int op_parity() const { return parity_; }
    const SpacePtr& slot_space() const { return slot_; }
    const SpacePtr& output_space() const;

    /// Value on one basis tuple of the leaf slots (depth-first traversal).
    std::vector<Series> apply_basis(const std::vector<std::size_t>& tuple,
                                    const RingPtr& ring) const;

    /// The contraction as a multilinear operation (column-by-column).
    MultiOp contract() const;

  private:
    ContractionTree() = default;
    std::vector<Series> eval(const std::vector<std::size_t>& tuple, std::size_t offset,
                             const RingPtr& ring) const;

    SpacePtr slot_;
    std::optional<MultiOp> op_;
    std::vector<std::shared_ptr<const ContractionTree>> children_;
    int leaves_ = 1;
    int parity_ = 0;
};

} // namespace exalg
