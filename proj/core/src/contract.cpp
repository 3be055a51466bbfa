#include "exalg/contract.hpp"

namespace exalg {

ContractionTree ContractionTree::leaf(SpacePtr s) {
    ContractionTree t;
    t.slot_ = std::move(s);
    t.leaves_ = 1;
    t.parity_ = 0;
    return t;
}

ContractionTree ContractionTree::node(MultiOp op, std::vector<ContractionTree> children) {
    if (static_cast<int>(children.size()) != op.arity)
        throw StructuralError("ContractionTree: child count != operation arity");
    ContractionTree t;
    t.leaves_ = 0;
    t.parity_ = op.parity();
    for (auto& c : children) {
        if (!c.output_space()->same(*op.slot))
            throw StructuralError("ContractionTree: child output does not match input slot");
        if (!t.slot_)
            t.slot_ = c.slot_space();
        else if (!t.slot_->same(*c.slot_space()))
            throw StructuralError("ContractionTree: leaf slots range over different spaces");
        t.leaves_ += c.leaf_count();
        t.parity_ = (t.parity_ + c.op_parity()) % 2;
        t.children_.push_back(std::make_shared<const ContractionTree>(std::move(c)));
    }
    t.op_ = std::move(op);
    return t;
}

ContractionTree ContractionTree::unary(GradedMap op, ContractionTree child) {
    SpacePtr slot = op.source();
    return node(MultiOp(1, std::move(slot), std::move(op)), {std::move(child)});
}

const SpacePtr& ContractionTree::output_space() const {
    if (is_leaf()) return slot_;
    return op_->map.target();
}

std::vector<Series> ContractionTree::apply_basis(const std::vector<std::size_t>& tuple,
                                                 const RingPtr& ring) const {
    if (static_cast<int>(tuple.size()) != leaves_)
        throw StructuralError("ContractionTree: tuple size != leaf count");
    return eval(tuple, 0, ring);
}

std::vector<Series> ContractionTree::eval(const std::vector<std::size_t>& tuple,
                                          std::size_t offset, const RingPtr& ring) const {
    if (is_leaf()) {
        std::vector<Series> v(slot_->dim(), Series(ring));
        v[tuple[offset]] = Series(ring, Scalar(1));
        return v;
    }
    // Koszul rule for a tensor product of maps applied to a split basis
    // tensor: child l's operator crosses the inputs of children 1..l-1.
    int sign_exp = 0;
    int left_inputs_parity = 0;
    std::size_t pos = offset;
    std::vector<std::vector<Series>> vals;
    vals.reserve(children_.size());
    for (const auto& child : children_) {
        sign_exp += child->op_parity() * left_inputs_parity;
        std::size_t w = child->leaf_count();
        for (std::size_t j = 0; j < w; ++j)
            left_inputs_parity = (left_inputs_parity + slot_->parity(tuple[pos + j])) % 2;
        vals.push_back(child->eval(tuple, pos, ring));
        pos += w;
    }
    // Tensor the child value vectors and apply this node's operation.
    std::size_t total = 1;
    for (const auto& v : vals) total *= v.size();
    std::vector<Series> arg(total, Series(ring));
    std::vector<std::size_t> idx(vals.size(), 0);
    for (std::size_t f = 0; f < total; ++f) {
        std::size_t rem = f;
        for (std::size_t j = vals.size(); j-- > 0;) {
            idx[j] = rem % vals[j].size();
            rem /= vals[j].size();
        }
        bool zero = false;
        Series prod(ring, Scalar(1));
        for (std::size_t j = 0; j < vals.size(); ++j) {
            const Series& c = vals[j][idx[j]];
            if (c.is_zero()) {
                zero = true;
                break;
            }
            prod *= c;
        }
        if (!zero) arg[f] = std::move(prod);
    }
    std::vector<Series> out = op_->map.apply(arg);
    if (sign_exp % 2 != 0)
        for (auto& s : out) s = -s;
    return out;
}

MultiOp ContractionTree::contract() const {
    if (is_leaf()) throw StructuralError("ContractionTree: cannot contract a bare slot");
    const RingPtr& ring = op_->map.ring();
    const std::size_t d = slot_->dim();
    std::size_t total = 1;
    for (int i = 0; i < leaves_; ++i) total *= d;
    GradedMap m = GradedMap::zero(tensor_power(slot_, leaves_), op_->map.target(), parity_, ring);
    for (std::size_t c = 0; c < total; ++c) {
        auto tup = tuple_index(c, d, leaves_);
        auto col = apply_basis(tup, ring);
        for (std::size_t r = 0; r < col.size(); ++r)
            if (!col[r].is_zero()) m.set(r, c, col[r]);
    }
    return MultiOp(leaves_, slot_, std::move(m));
}

} // namespace exalg
