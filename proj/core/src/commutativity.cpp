#include "exalg/commutativity.hpp"

#include <set>

namespace exalg {

Sdr HodgeData::as_sdr() const {
    Complex reduced{W, GradedMap::zero(W, W, 1, c.Q.ring())};
    return Sdr{c, reduced, i_W, pi_W, G};
}

CheckReport validate_strong_hodge(const HodgeData& h) {
    CheckReport r;
    r.merge(validate_sdr(h.as_sdr()));
    r.add("commutativity", "G_minus parity odd", h.G_minus.parity() == 1);
    r.add_residual("commutativity", "G_minus^2 = 0", compose(h.G_minus, h.G_minus));
    r.add_residual("commutativity", "{Q, G_minus} = 0", supercommutator(h.c.Q, h.G_minus));
    r.add_residual("commutativity", "G_minus i_W = 0", compose(h.G_minus, h.i_W));
    r.add_residual("commutativity", "pi_W G_minus = 0", compose(h.pi_W, h.G_minus));
    r.add_residual("commutativity", "{G, G_minus} = 0", supercommutator(h.G, h.G_minus));
    return r;
}

FormCtxPtr family_ctx(const CommFamily& fam) {
    std::vector<FormParam> params;
    for (const auto& p : fam.params) params.push_back({p, p, DerivRule::Plain});
    return FormContext::make(params);
}

namespace {

std::vector<GradedMap> coefficient_operators(const GradedMap& U) {
    std::set<std::vector<int>> monomials;
    for (std::size_t r = 0; r < U.rows(); ++r)
        for (std::size_t c = 0; c < U.cols(); ++c)
            for (const auto& [e, v] : U.at(r, c).terms()) monomials.insert(e);
    std::vector<GradedMap> coeffs;
    for (const auto& e : monomials) {
        GradedMap m = GradedMap::zero(U.source(), U.target(), U.parity(), U.ring());
        for (std::size_t r = 0; r < U.rows(); ++r)
            for (std::size_t c = 0; c < U.cols(); ++c) {
                Scalar s = U.at(r, c).coeff(e);
                if (!s.is_zero()) m.set(r, c, Series(U.ring(), s));
            }
        coeffs.push_back(std::move(m));
    }
    return coeffs;
}

GradedMap truncate_map(const GradedMap& m, int order) {
    return m.transform([&](const Series& s) { return s.truncated(order); });
}

FormOp truncate_form(const FormOp& f, int order) {
    FormOp out(f.ctx(), f.source(), f.target(), f.total_parity(), f.ring());
    for (const auto& [mask, m] : f.components()) out.add_component(mask, truncate_map(m, order));
    return out;
}

} // namespace

CheckReport validate_comm_family(const HodgeData& h, const CommFamily& fam, int order) {
    CheckReport r;
    r.add("commutativity", "U even", fam.U.parity() == 0);
    bool vanishes_at_zero = true;
    for (std::size_t i = 0; i < fam.U.rows() && vanishes_at_zero; ++i)
        for (std::size_t j = 0; j < fam.U.cols(); ++j)
            if (!fam.U.at(i, j).truncated(0).is_zero()) {
                vanishes_at_zero = false;
                break;
            }
    r.add("commutativity", "U(0) = 0", vanishes_at_zero);

    GradedMap qu = truncate_map(supercommutator(h.c.Q, fam.U), order);
    GradedMap gmu = supercommutator(h.G_minus, fam.U);
    GradedMap nested = truncate_map(supercommutator(gmu, fam.U), order);
    if (fam.mode == FamilyMode::Simplified) {
        r.add_residual("commutativity", "[Q, U] = 0", qu);
        r.add_residual("commutativity", "[[G_minus, U], U] = 0", nested);
    } else {
        r.add_residual("commutativity", "[Q, U] + [[G_minus, U], U] = 0", qu + nested);
    }

    auto coeffs = coefficient_operators(fam.U);
    GradedMap commacc = GradedMap::zero(fam.U.source(), fam.U.target(), 0, fam.U.ring());
    for (std::size_t a = 0; a < coeffs.size(); ++a)
        for (std::size_t b = a + 1; b < coeffs.size(); ++b)
            commacc += compose(coeffs[a], coeffs[b]) - compose(coeffs[b], coeffs[a]);
    r.add_residual("commutativity", "family coefficients commute", commacc);

    // Derived identity {dU, [G_minus, U]} = 0.
    FormOp phi_d = truncate_form(d(FormOp::from_map(family_ctx(fam), fam.U)), order);
    FormOp phi_g = FormOp::from_map(family_ctx(fam), gmu);
    r.add_residual("commutativity", "{dU, [G_minus, U]} = 0",
                   truncate_form(supercommutator(phi_d, phi_g), order));
    return r;
}

FormOp build_A(const HodgeData& h, const CommFamily& fam, int order) {
    GradedMap edge = -compose(h.G, h.G_minus); // -G G_minus
    GradedMap chain = h.i_W;                   // (-G G_minus U)^k i_W
    GradedMap total = GradedMap::zero(h.W, h.W, 0, fam.U.ring());
    for (int k = 0; k <= order; ++k) {
        chain = compose(fam.U, chain);
        total += truncate_map(compose(h.pi_W, chain), order);
        chain = compose(edge, chain);
        if (truncate_map(chain, order).is_zero()) break;
        chain = truncate_map(chain, order);
    }
    return d(FormOp::from_map(family_ctx(fam), total));
}

FormOp transferred_phi(const HodgeData& h, const CommFamily& fam) {
    FormCtxPtr ctx = family_ctx(fam);
    FormOp phi = d(FormOp::from_map(ctx, fam.U));
    phi += FormOp::from_map(ctx, supercommutator(h.G_minus, fam.U));
    return phi;
}

FormOp transferred_operator(const HodgeData& h, const CommFamily& fam, int order) {
    FormCtxPtr ctx = family_ctx(fam);
    FormOp phi = truncate_form(transferred_phi(h, fam), order);
    FormOp incl = FormOp::from_map(ctx, h.i_W);
    FormOp proj = FormOp::from_map(ctx, h.pi_W);
    FormOp minus_g_phi = compose(FormOp::from_map(ctx, -h.G), phi);
    FormOp chain = incl; // (-G phi)^k i
    FormOp acc = FormOp::zero(ctx, h.W, h.W, 1, fam.U.ring());
    int max_iters = order + static_cast<int>(fam.params.size()) + 1;
    for (int k = 0; k <= max_iters; ++k) {
        acc += truncate_form(compose(proj, compose(phi, chain)), order);
        chain = truncate_form(compose(minus_g_phi, chain), order);
        if (chain.is_zero()) break;
    }
    return acc;
}

FormOp transferred_one_form(const HodgeData& h, const CommFamily& fam, int order) {
    return transferred_operator(h, fam, order).degree_part(1);
}

CommutativityReport check_commutativity(const FormOp& A, int order) {
    CommutativityReport rep{truncate_form(compose(A, A), order), truncate_form(d(A), order)};
    return rep;
}

GradedMap saito_differential_square(const HodgeData& h, const std::string& z_var) {
    const RingPtr& ring = h.c.Q.ring();
    std::vector<VarSpec> vars = ring->vars();
    bool has_z = false;
    for (const auto& v : vars) has_z = has_z || v.name == z_var;
    RingPtr ext = ring;
    if (!has_z) {
        vars.push_back({z_var, VarKind::Free});
        ext = SeriesRing::make(std::move(vars), ring->max_total(), ring->z_min(), ring->z_max());
    }
    GradedMap qs = reringed(h.c.Q, ext) +
                   reringed(h.G_minus, ext).scaled(Series::var(ext, z_var));
    return compose(qs, qs);
}

FormOp supercommutator(const FormOp& a, const FormOp& b) {
    FormOp left = compose(a, b);
    FormOp right = compose(b, a);
    if ((a.total_parity() * b.total_parity()) % 2 == 0) return left -= right;
    return left += right;
}

} // namespace exalg
