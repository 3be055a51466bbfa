#pragma once

#include "exalg/scalar.hpp"

#include <set>
#include <string>
#include <vector>

namespace exalg {

/// Rooted oriented tree, leaves at the bottom, one root edge at the top.
/// Internal vertices carry an operation tag determined by their arity
/// (m1, m2, ...). Children are unordered; the canonical form keeps them
/// sorted by key. Internal edges (between two internal vertices) number
/// vertex_count() - 1; leaf edges and the root edge are external.
struct RootedTree {
    int op_arity = 0; // 0 marks a leaf slot
    std::vector<RootedTree> children;

    bool is_leaf() const { return op_arity == 0; }
    int leaf_count() const;
    int vertex_count() const;          // internal vertices
    int internal_edge_count() const {  // n_e
        return vertex_count() - 1;
    }
    /// Sign (-1)^{n_e} carried by the length integrals.
    int edge_sign() const { return internal_edge_count() % 2 == 0 ? 1 : -1; }

    /// Canonical comparison key (children sorted recursively).
    std::string key() const;
    /// Children sorted by key at every level.
    RootedTree canonical() const;

    /// Nested-list text form, e.g. "(m2 (m1 L1) L2)"; leaves are numbered
    /// left to right.
    std::string serialize() const;
    static RootedTree parse(const std::string& text);

    friend bool operator==(const RootedTree& a, const RootedTree& b) {
        return a.key() == b.key();
    }
    friend bool operator<(const RootedTree& a, const RootedTree& b) {
        return a.key() < b.key();
    }
};

RootedTree leaf_tree();
RootedTree corolla(int arity, std::vector<RootedTree> children);

/// All isomorphism classes of decorated rooted trees with the given number of
/// leaves, vertex arities drawn from `arities`, and at most `max_vertices`
/// internal vertices. Deterministic (key-sorted) order; at least one internal
/// vertex (the bare wire is not a tree here).
std::vector<RootedTree> enumerate_trees(int n_leaves, const std::set<int>& arities,
                                        int max_vertices);

/// Order of the decoration- and root-preserving automorphism group.
BigInt automorphism_order(const RootedTree& t);

/// Number of distinct leaf labelings: n_l! / n_gamma.
BigInt distinct_leaf_labelings(const RootedTree& t);

struct TreeWeight {
    RootedTree tree;
    BigInt n_gamma;
    int sign; // (-1)^{n_e}
};

TreeWeight tree_weight(const RootedTree& t);

} // namespace exalg
