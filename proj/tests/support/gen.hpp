#pragma once

#include "exalg/commutativity.hpp"
#include "exalg/complexes.hpp"
#include "exalg/linalg.hpp"
#include "exalg/transfer.hpp"

#include <optional>
#include <random>

namespace exalg::testgen {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
    /// Small nonzero rational.
    Scalar small() {
        int n = uniform(-3, 3);
        if (n == 0) n = 1;
        int d = uniform(1, 3);
        return Scalar(n, d);
    }
    Scalar small_or_zero() { return uniform(0, 2) == 0 ? Scalar(0) : small(); }
};

/// Invertible even map with random unit-triangular factors (exact inverse).
GradedMap random_even_automorphism(Rng& rng, const SpacePtr& v, const RingPtr& ring);

/// Exact inverse of a constant-entried invertible map.
GradedMap invert_constant(const GradedMap& m);

/// SDR with the requested reduced content (free generators and Q_r-pairs) and
/// `pairs` contractible pairs, conjugated by random automorphisms on both
/// levels so nothing looks block diagonal.
Sdr random_sdr(Rng& rng, int reduced_even, int reduced_odd, int reduced_pairs, int pairs,
               const RingPtr& ring);

/// Exact Maurer-Cartan solution phi = g Q g^{-1} - Q with
/// g = id + sum_k eps^k rho_k, random even rho_k; exact through the ring
/// truncation.
GradedMap conjugation_mc(Rng& rng, const Complex& c, const std::string& eps, int order);

/// Homotopy-lifting step: solve {Q, phi_m} = -R_m exactly (h-preferred
/// particular solution when the obstruction vanishes, otherwise a linear
/// solve); returns nullopt when the order is obstructed.
std::optional<GradedMap> lift_mc_order(const Sdr& sdr, const GradedMap& phi_lower,
                                       const std::string& eps, int m);

/// Matrix superalgebra gl(p|q) as a graded space (basis E_{ab}).
SpacePtr gl_space(int p, int q);
/// Its product as a MultiOp (for commutator construction).
MultiOp gl_product(const SpacePtr& gl, int p, int q, const RingPtr& ring);

/// Parity-shifted dg Lie structure: space Pi gl(p|q), b1 = ad(q0) for a random
/// odd square-zero q0, b2(x, y) = (-1)^{|x|_gl} eps [x, y]. A genuine infinity
/// structure (relations hold exactly), used as the validated input of the
/// transfer tests. With deform_order > 0 the differential acquires formal
/// corrections ad(eps^k xi_k) with xi_k in the same square-zero block; they
/// enter the operation set as m1 and make the higher transferred operations
/// nontrivial.
struct ShiftedLie {
    Complex complex;  // (Pi gl, ad q0)
    OperationSet ops; // m1 (optional) and b2
};
ShiftedLie shifted_gl_structure(Rng& rng, int p, int q, const RingPtr& ring,
                                const std::string& eps, bool sparse_q0 = false,
                                int deform_order = 0);

/// Conjugate a structure by a random even automorphism; an isomorphic datum
/// whose generic splitting has nontrivial higher transferred operations.
ShiftedLie conjugated(Rng& rng, const ShiftedLie& lie);

/// Deterministic SDR for any constant-coefficient complex: representatives,
/// image preimages and the homotopy are produced by exact row reduction.
Sdr sdr_from_complex(const Complex& c);

/// Reference evaluator for tree amplitudes: explicit elementary-tensor sums
/// with a hand-rolled Koszul sign walk, operators applied bottom-up by depth
/// level -- an evaluation strategy independent of the production contraction.
MultiOp tree_amplitude_reference(const Sdr& sdr, const OperationSet& ops,
                                 const RootedTree& tree);

/// Strong-Hodge positive-control model: W free even generators plus
/// contraction blocks {r, v = Q r, s, w = Q s} with G_minus: v -> w, r -> -s;
/// every strong Hodge identity holds exactly.
HodgeData block_hodge_model(int w_dim, int blocks, const RingPtr& ring);

} // namespace exalg::testgen
