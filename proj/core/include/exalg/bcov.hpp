#pragma once

#include "exalg/commutativity.hpp"
#include "exalg/models.hpp"
#include "exalg/report.hpp"

namespace exalg {

/// Supercommutative associative differential algebra with a second-order odd
/// operator and a contraction onto cohomology; the tree-level data.
struct BCOVData {
    HodgeData h;
    MultiOp product; // even, binary
    std::size_t unit = 0;
};

CheckReport validate_bcov(const BCOVData& b);

/// Which composite sits on internal edges.
enum class EdgeOperator {
    GGminus, // -G G_minus (contract, then divide)
    GminusG, // -G_minus G
};

GradedMap edge_operator(const BCOVData& b, EdgeOperator which);

/// Formal vector field on W from the binary tree sum: the fixed point
///   P = xi + E( m(P, P) / 2 ),   xi = sum_a T^a i_W(e_a),
/// and v = pi_W( m(P, P) / 2 ), computed through total T-order max_order.
/// Components are series in the coordinates named in `coords`.
struct VectorField {
    std::vector<std::string> coords;
    std::vector<Series> components; // one per basis element of W
};

VectorField bcov_vector_field(const BCOVData& b, const std::vector<std::string>& coords,
                              int max_order, EdgeOperator edge = EdgeOperator::GGminus);

/// f^a_bc = d^2 v^a / dT^b dT^c, exact formal derivatives.
struct StructureConstants {
    std::vector<std::string> coords;
    std::size_t mu = 0;
    std::vector<Series> f; // index a*mu*mu + b*mu + c

    const Series& at(std::size_t a, std::size_t b, std::size_t c) const {
        return f[(a * mu + b) * mu + c];
    }
};

StructureConstants structure_constants(const VectorField& v);

/// Residual of sum_a f^a_bc f^e_ad - sum_a f^a_cd f^e_ba, truncated.
struct OaResidual {
    std::size_t mu = 0;
    std::vector<Series> r; // index ((e*mu + b)*mu + c)*mu + d
    bool pass() const {
        for (const auto& s : r)
            if (!s.is_zero()) return false;
        return true;
    }
    std::string detail(std::size_t max_entries = 4) const;
};

OaResidual check_oa(const StructureConstants& f, int order);

/// Structure constants of multiplication at T = 0 (for the cross check with
/// the Milnor table): f^a_bc(0).
std::vector<Scalar> structure_constants_at_zero(const StructureConstants& f);

/// Leaf-to-root family: X(T) = multiplication by the tree sum P(T), returned
/// as a commutative family for the commutativity pipeline.
CommFamily leaf_to_root_family(const BCOVData& b, const std::vector<std::string>& coords,
                               int order, EdgeOperator edge = EdgeOperator::GGminus,
                               bool insert_right = false);

/// Potentiality: with a nondegenerate pairing eta on W, checks
/// d_b (eta v)_c = d_c (eta v)_b.
CheckReport check_potentiality(const VectorField& v, const std::vector<std::vector<Scalar>>& eta);

} // namespace exalg
