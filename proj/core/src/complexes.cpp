#include "exalg/complexes.hpp"

namespace exalg {

CheckReport validate_complex(const Complex& c) {
    CheckReport r;
    r.add("complexes", "Q parity odd", c.Q.parity() == 1);
    r.add_residual("complexes", "Q^2 = 0", compose(c.Q, c.Q));
    return r;
}

GradedMap Sdr::proj_contractible() const {
    GradedMap id = GradedMap::identity(total.space, total.Q.ring());
    return id - compose(incl, proj);
}

CheckReport validate_sdr(const Sdr& s) {
    CheckReport r;
    r.merge(validate_complex(s.total));
    r.merge(validate_complex(s.reduced));
    r.add("complexes", "i parity even", s.incl.parity() == 0);
    r.add("complexes", "pi parity even", s.proj.parity() == 0);
    r.add("complexes", "h parity odd", s.h.parity() == 1);
    GradedMap idr = GradedMap::identity(s.reduced.space, s.reduced.Q.ring());
    r.add_residual("complexes", "pi i = id", compose(s.proj, s.incl) - idr);
    r.add_residual("complexes", "h h = 0", compose(s.h, s.h));
    r.add_residual("complexes", "h i = 0", compose(s.h, s.incl));
    r.add_residual("complexes", "pi h = 0", compose(s.proj, s.h));
    r.add_residual("complexes", "{Q,h} = id - i pi",
                   supercommutator(s.total.Q, s.h) - s.proj_contractible());
    r.add_residual("complexes", "Q i = i Q_r",
                   compose(s.total.Q, s.incl) - compose(s.incl, s.reduced.Q));
    r.add_residual("complexes", "pi Q = Q_r pi",
                   compose(s.proj, s.total.Q) - compose(s.reduced.Q, s.proj));
    return r;
}

FormCtxPtr EvolutionForm::form_ctx() const {
    DerivRule rule =
        mode == EvolutionMode::IdempotentClosedForm ? DerivRule::ExpLength : DerivRule::Plain;
    return FormContext::make({{var, var, rule}});
}

FormOp EvolutionForm::as_form() const {
    FormOp f = FormOp::from_map(form_ctx(), body);
    f.add_component(1u, one_form);
    return f;
}

EvolutionForm evolution_form_idempotent(const GradedMap& H, const GradedMap& G,
                                        const std::string& u_var) {
    if (H.parity() != 0) throw ParityError("evolution_form: H must be even");
    if (G.parity() != 1) throw ParityError("evolution_form: G must be odd");
    if (!(compose(H, H) == H))
        throw StructuralError("evolution_form: closed form requested for non-idempotent H");
    const RingPtr& ring = H.ring();
    GradedMap id = GradedMap::identity(H.source(), ring);
    Series one_minus_u = Series(ring, Scalar(1)) - Series::var(ring, u_var);
    GradedMap body = id - H.scaled(one_minus_u);
    return EvolutionForm{EvolutionMode::IdempotentClosedForm, u_var, body,
                         -compose(body, G), 0};
}

EvolutionForm evolution_form_truncated(const GradedMap& H, const GradedMap& G,
                                       const std::string& t_var, int order) {
    if (H.parity() != 0) throw ParityError("evolution_form: H must be even");
    if (G.parity() != 1) throw ParityError("evolution_form: G must be odd");
    GradedMap body = exp_truncated(H, t_var, order);
    return EvolutionForm{EvolutionMode::Truncated, t_var, body, -compose(body, G), order};
}

FormOp closure_residual(const EvolutionForm& ev, const GradedMap& Q) {
    FormOp I = ev.as_form();
    FormOp res = d(I) + ad_q(Q, I);
    if (ev.mode == EvolutionMode::Truncated) {
        FormOp cut(res.ctx(), res.source(), res.target(), res.total_parity(), res.ring());
        for (const auto& [mask, m] : res.components())
            cut.add_component(mask, m.transform([&](const Series& s) {
                return s.truncated(ev.order - 1);
            }));
        return cut;
    }
    return res;
}

GradedMap integrate_length_to_infinity(const GradedMap& one_form, const std::string& u_var) {
    const RingPtr& ring = one_form.ring();
    return one_form.transform([&](const Series& s) {
        Series out(ring);
        for (const auto& [e, c] : s.terms()) {
            int m = e[ring->index_of(u_var)];
            if (m == 0)
                throw StructuralError(
                    "integrate_length_to_infinity: u^0 term present, integral diverges");
            std::vector<int> e2 = e;
            e2[ring->index_of(u_var)] = 0;
            out += Series::monomial(ring, std::move(e2), c * Scalar(1, m));
        }
        return out;
    });
}

GradedMap edge_integral(const Sdr& s, const std::string& u_var) {
    // Work in the SDR's ring extended by the length symbol when absent.
    RingPtr ring = s.total.Q.ring();
    bool has_u = false;
    for (const auto& v : ring->vars()) has_u = has_u || v.name == u_var;
    RingPtr ext = ring;
    if (!has_u) {
        auto vars = ring->vars();
        vars.push_back({u_var, VarKind::Free});
        ext = SeriesRing::make(std::move(vars), ring->max_total(), ring->z_min(), ring->z_max());
    }
    GradedMap H = reringed(s.proj_contractible(), ext);
    GradedMap h = reringed(s.h, ext);
    EvolutionForm ev = evolution_form_idempotent(H, h, u_var);
    return reringed(integrate_length_to_infinity(ev.one_form, u_var), ring);
}

GradedMap limit_at_infinity(const Sdr& s) {
    return compose(s.incl, s.proj);
}

} // namespace exalg
