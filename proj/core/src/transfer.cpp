#include "exalg/transfer.hpp"

#include <algorithm>
#include <numeric>

namespace exalg {

CheckReport validate_operation_set(const OperationSet& s) {
    CheckReport r;
    for (const auto& [n, op] : s.ops) {
        std::string tag = "m" + std::to_string(n);
        r.add("transfer", tag + " arity positive", n >= 1);
        r.add("transfer", tag + " odd parity", op.parity() == 1);
        r.add("transfer", tag + " graded symmetric", is_symmetric(op));
        int ord = op.map.is_zero() ? 1 : [&] {
            int best = 1 << 20;
            for (std::size_t i = 0; i < op.map.rows(); ++i)
                for (std::size_t j = 0; j < op.map.cols(); ++j)
                    if (!op.map.at(i, j).is_zero())
                        best = std::min(best, op.map.at(i, j).bounded_order());
            return best;
        }();
        r.add("transfer", tag + " parameter order >= 1", ord >= 1,
              ord >= 1 ? "" : "order " + std::to_string(ord));
    }
    return r;
}

namespace {

ContractionTree build_tree(const RootedTree& t, const Sdr& sdr, const OperationSet& ops,
                           const GradedMap& minus_h) {
    if (t.is_leaf()) return ContractionTree::unary(sdr.incl, ContractionTree::leaf(sdr.reduced.space));
    const MultiOp* op = ops.op(t.op_arity);
    if (!op)
        throw StructuralError("tree_amplitude: no operation of arity " +
                              std::to_string(t.op_arity));
    std::vector<ContractionTree> kids;
    kids.reserve(t.children.size());
    for (const auto& c : t.children) {
        if (c.is_leaf())
            kids.push_back(build_tree(c, sdr, ops, minus_h));
        else
            kids.push_back(ContractionTree::unary(minus_h, build_tree(c, sdr, ops, minus_h)));
    }
    return ContractionTree::node(*op, std::move(kids));
}

} // namespace

MultiOp tree_amplitude(const Sdr& sdr, const OperationSet& ops, const RootedTree& tree) {
    if (tree.is_leaf()) throw StructuralError("tree_amplitude: bare wire is not a tree");
    GradedMap minus_h = -sdr.h;
    ContractionTree net =
        ContractionTree::unary(sdr.proj, build_tree(tree, sdr, ops, minus_h));
    return net.contract();
}

namespace {

// --- labeled mode: set-partition recursion -------------------------------

std::vector<std::vector<std::vector<int>>> partitions_into(int n, int k) {
    // All partitions of {0..n-1} into exactly k nonempty blocks, blocks
    // ordered by minimum, elements sorted. Restricted-growth strings.
    std::vector<std::vector<std::vector<int>>> out;
    if (n < 1 || k < 1 || k > n) return out;
    std::vector<int> assign(n, 0);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            if (used != k) return;
            std::vector<std::vector<int>> part(k);
            for (int j = 0; j < n; ++j) part[assign[j]].push_back(j);
            out.push_back(std::move(part));
            return;
        }
        for (int b = 0; b < std::min(used + 1, k); ++b) {
            assign[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 1, 1); // element 0 sits in block 0
    return out;
}

struct PartitionTransfer {
    const Sdr& sdr;
    const OperationSet& ops;
    GradedMap minus_h;
    std::map<std::pair<int, int>, GradedMap> memo_T; // (size, budget) -> map

    PartitionTransfer(const Sdr& s, const OperationSet& o) : sdr(s), ops(o), minus_h(-s.h) {}

    // Sum over set-labeled trees on a size-s leaf set, with no operator on
    // the root edge: V_r^{(x)s} -> V.
    GradedMap T(int s, int v) {
        auto key = std::make_pair(s, v);
        auto it = memo_T.find(key);
        if (it != memo_T.end()) return it->second;
        GradedMap acc = GradedMap::zero(tensor_power(sdr.reduced.space, s), sdr.total.space, 1,
                                        ops.ring);
        if (v >= 1) {
            for (int k : ops.arities()) {
                if (k > s) continue;
                const MultiOp& m = *ops.op(k);
                for (const auto& part : partitions_into(s, k)) {
                    // factor for each block
                    GradedMap prod = child_factor(part[0], v);
                    for (int b = 1; b < k; ++b) prod = tensor(prod, child_factor(part[b], v));
                    // route sorted inputs into block-concatenation order
                    std::vector<int> perm;
                    for (const auto& blk : part)
                        for (int e : blk) perm.push_back(e);
                    GradedMap routed =
                        compose(prod, permutation_op(sdr.reduced.space, ops.ring, perm));
                    acc += compose(m.map, routed);
                }
            }
        }
        memo_T.emplace(key, acc);
        return acc;
    }

    // Block factor: bare leaf wire (singletons only) plus edged subtrees.
    GradedMap child_factor(const std::vector<int>& block, int v) {
        int s = static_cast<int>(block.size());
        GradedMap f = compose(minus_h, T(s, v - 1));
        if (s == 1) f += sdr.incl;
        return f;
    }
};

} // namespace

std::map<int, MultiOp> transferred_operations(const Sdr& sdr, const OperationSet& ops,
                                              int max_arity, int eps_order, SumMode mode) {
    std::map<int, MultiOp> out;
    auto truncate = [&](GradedMap m) {
        return m.transform([&](const Series& s) { return s.truncated(eps_order); });
    };
    if (mode == SumMode::LabeledPartitions) {
        PartitionTransfer pt(sdr, ops);
        for (int n = 1; n <= max_arity; ++n) {
            GradedMap a = truncate(compose(sdr.proj, pt.T(n, eps_order)));
            out.emplace(n, MultiOp(n, sdr.reduced.space, std::move(a)));
        }
        return out;
    }
    for (int n = 1; n <= max_arity; ++n) {
        GradedMap acc = GradedMap::zero(tensor_power(sdr.reduced.space, n), sdr.reduced.space,
                                        1, ops.ring);
        for (const auto& shape : enumerate_trees(n, ops.arities(), eps_order)) {
            MultiOp pa = tree_amplitude(sdr, ops, shape);
            GradedMap sym = GradedMap::zero(pa.map.source(), pa.map.target(), pa.map.parity(),
                                            ops.ring);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                sym += permuted(pa, perm).map;
            } while (std::next_permutation(perm.begin(), perm.end()));
            BigInt ng = automorphism_order(shape);
            acc += sym.scaled(Scalar(Rational(BigInt(1), ng)));
        }
        out.emplace(n, MultiOp(n, sdr.reduced.space, truncate(acc)));
    }
    return out;
}

GradedMap mc_residual(const GradedMap& Q, const GradedMap& phi, int eps_order) {
    if (phi.parity() != 1) throw ParityError("mc_residual: phi must be odd");
    GradedMap r = supercommutator(Q, phi) + compose(phi, phi);
    return r.transform([&](const Series& s) { return s.truncated(eps_order); });
}

GradedMap one_leaf_transfer(const Sdr& sdr, const GradedMap& phi, int eps_order) {
    // A_1 = sum_k pi phi (-h phi)^k i, finite by the parameter grading.
    GradedMap chain = sdr.incl; // (-h phi)^k i
    GradedMap acc = GradedMap::zero(sdr.reduced.space, sdr.reduced.space, 1, phi.ring());
    GradedMap minus_h = -sdr.h;
    for (int k = 0; k <= eps_order; ++k) {
        acc += compose(sdr.proj, compose(phi, chain));
        chain = compose(minus_h, compose(phi, chain));
        if (chain.is_zero()) break;
    }
    return acc.transform([&](const Series& s) { return s.truncated(eps_order); });
}

GradedMap transferred_mc_residual(const Sdr& sdr, const GradedMap& phi, int eps_order) {
    GradedMap a1 = one_leaf_transfer(sdr, phi, eps_order);
    return mc_residual(sdr.reduced.Q, a1, eps_order);
}

std::vector<std::vector<int>> unshuffles(int k, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(k);
    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (depth == k) {
            std::vector<int> perm = pick;
            for (int j = 0; j < n; ++j)
                if (std::find(pick.begin(), pick.end(), j) == pick.end()) perm.push_back(j);
            out.push_back(std::move(perm));
            return;
        }
        for (int j = from; j < n; ++j) {
            pick[depth] = j;
            self(self, j + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

RelationReport check_linfty(const Complex& c, const OperationSet& ops, int max_arity) {
    RelationReport rep;
    rep.max_arity = max_arity;
    const SpacePtr& v = c.space;
    const RingPtr& ring = ops.ring;

    auto b = [&](int k) -> std::optional<MultiOp> {
        const MultiOp* m = ops.op(k);
        if (k == 1) {
            GradedMap q = reringed(c.Q, ring);
            if (m) q += m->map;
            return MultiOp(1, v, q);
        }
        if (!m) return std::nullopt;
        return *m;
    };

    for (int n = 1; n <= max_arity; ++n) {
        GradedMap acc = GradedMap::zero(tensor_power(v, n), v, 0, ring);
        for (int k = 1; k <= n; ++k) {
            auto inner = b(k);
            auto outer = b(n - k + 1);
            if (!inner || !outer) continue;
            GradedMap core = inner->map;
            if (n - k > 0)
                core = tensor(core, GradedMap::identity(tensor_power(v, n - k), ring));
            core = compose(outer->map, core);
            for (const auto& perm : unshuffles(k, n))
                acc += compose(core, permutation_op(v, ring, perm));
        }
        rep.residuals.emplace(n, MultiOp(n, v, std::move(acc)));
    }
    return rep;
}

} // namespace exalg
