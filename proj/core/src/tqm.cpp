#include "exalg/tqm.hpp"

namespace exalg {

RingPtr tqm_ring(const std::vector<std::string>& symbols, EvolutionMode mode, int order,
                 std::vector<std::string> extra_bounded) {
    std::vector<VarSpec> vars;
    for (const auto& s : symbols)
        vars.push_back({s, mode == EvolutionMode::IdempotentClosedForm ? VarKind::Free
                                                                       : VarKind::Bounded});
    bool extras = !extra_bounded.empty();
    for (auto& s : extra_bounded) vars.push_back({std::move(s), VarKind::Bounded});
    int max_total = mode == EvolutionMode::IdempotentClosedForm
                        ? (extras ? order : 0)
                        : order * (static_cast<int>(symbols.size()) + 1);
    return SeriesRing::make(std::move(vars), max_total);
}

FormCtxPtr tqm_ctx(const std::vector<std::string>& symbols, EvolutionMode mode) {
    std::vector<FormParam> params;
    DerivRule rule = mode == EvolutionMode::IdempotentClosedForm ? DerivRule::ExpLength
                                                                 : DerivRule::Plain;
    for (const auto& s : symbols) params.push_back({s, s, rule});
    return FormContext::make(params);
}

FormOp edge_evolution(const TqmModel& model, const FormCtxPtr& ctx, const std::string& symbol) {
    EvolutionForm ev = model.mode == EvolutionMode::IdempotentClosedForm
                           ? evolution_form_idempotent(model.H, model.G, symbol)
                           : evolution_form_truncated(model.H, model.G, symbol, model.order);
    std::optional<std::uint32_t> bit;
    for (std::size_t i = 0; i < ctx->size(); ++i)
        if (ctx->param(i).symbol == symbol) bit = 1u << i;
    if (!bit) throw StructuralError("edge_evolution: symbol " + symbol + " not in context");
    FormOp f = FormOp::from_map(ctx, ev.body);
    f.add_component(*bit, ev.one_form);
    return f;
}

namespace {

struct SymbolWalk {
    const std::vector<std::string>& symbols;
    std::size_t next = 0;
    const std::string& take() {
        if (next >= symbols.size())
            throw StructuralError("graph amplitude: not enough edge symbols");
        return symbols[next++];
    }
    void done() const {
        if (next != symbols.size())
            throw StructuralError("graph amplitude: unused edge symbols");
    }
};

// Subtree below an internal vertex; the edge above it is handled by the
// caller. Leaves consume an edge symbol (amplitude) or become inclusions
// (preamplitude limit).
FormOp vertex_form(const RootedTree& t, SymbolWalk& walk, const FormCtxPtr& ctx,
                   const TqmModel& model, const OperationSet& ops, const Sdr* limits) {
    const MultiOp* op = ops.op(t.op_arity);
    if (!op)
        throw StructuralError("graph amplitude: no operation of arity " +
                              std::to_string(t.op_arity));
    std::optional<FormOp> arg;
    for (const auto& c : t.children) {
        FormOp piece = [&]() -> FormOp {
            if (c.is_leaf()) {
                if (limits) return FormOp::from_map(ctx, limits->incl);
                return edge_evolution(model, ctx, walk.take());
            }
            const std::string& sym = walk.take();
            FormOp inner = vertex_form(c, walk, ctx, model, ops, limits);
            return compose(edge_evolution(model, ctx, sym), inner);
        }();
        if (!arg)
            arg = std::move(piece);
        else
            arg = tensor(*arg, piece);
    }
    return compose(FormOp::from_map(ctx, op->map), *arg);
}

} // namespace

FormOp graph_amplitude(const RootedTree& shape, const std::vector<std::string>& edge_symbols,
                       const TqmModel& model, const OperationSet& ops) {
    FormCtxPtr ctx = tqm_ctx(edge_symbols, model.mode);
    SymbolWalk walk{edge_symbols};
    if (shape.is_leaf()) {
        FormOp out = edge_evolution(model, ctx, walk.take());
        walk.done();
        return out;
    }
    const std::string& root_sym = walk.take();
    FormOp top = vertex_form(shape, walk, ctx, model, ops, nullptr);
    FormOp out = compose(edge_evolution(model, ctx, root_sym), top);
    walk.done();
    return out;
}

FormOp preamplitude(const RootedTree& shape, const std::vector<std::string>& edge_symbols,
                    const Sdr& sdr, const OperationSet& ops) {
    if (shape.is_leaf())
        throw StructuralError("preamplitude: bare wire has no internal vertex");
    TqmModel model{sdr.proj_contractible(), sdr.h, EvolutionMode::IdempotentClosedForm, 0};
    FormCtxPtr ctx = tqm_ctx(edge_symbols, model.mode);
    SymbolWalk walk{edge_symbols};
    FormOp top = vertex_form(shape, walk, ctx, model, ops, &sdr);
    FormOp out = compose(FormOp::from_map(ctx, sdr.proj), top);
    walk.done();
    return out;
}

FormOp observable_correlator(const GradedMap& O, const TqmModel& model,
                             const std::string& left_symbol, const std::string& right_symbol) {
    FormCtxPtr ctx = tqm_ctx({left_symbol, right_symbol}, model.mode);
    FormOp left = edge_evolution(model, ctx, left_symbol);
    FormOp right = edge_evolution(model, ctx, right_symbol);
    return compose(left, compose(FormOp::from_map(ctx, O), right));
}

DeformationResponse deformation_response(const GradedMap& deltaQ, const GradedMap& H,
                                         const GradedMap& G, const std::string& t_var,
                                         int order) {
    // Work ring with enough headroom that nothing truncates before the final
    // cut at `order`; inputs must have constant entries.
    RingPtr work = SeriesRing::bounded({"s*", "x*", t_var}, 2 * order + 1);
    RingPtr out_ring = SeriesRing::bounded({t_var}, order);
    GradedMap Hw = reringed(H, work);
    GradedMap Gw = reringed(G, work);
    GradedMap Dw = reringed(deltaQ, work);
    GradedMap E1 = exp_truncated(Hw, "s*", order);
    GradedMap Ex = exp_truncated(Hw, "x*", order);
    Series t_minus_s = Series::var(work, t_var) - Series::var(work, "s*");
    GradedMap E2 =
        Ex.transform([&](const Series& v) { return v.substitute_series("x*", t_minus_s); });
    Series upper = Series::var(work, t_var);
    auto simplex_integral = [&](const GradedMap& integrand) {
        GradedMap g = integrand.transform([&](const Series& v) {
            return v.integrate("s*", upper).truncated(order);
        });
        return reringed(g, out_ring);
    };
    GradedMap point = simplex_integral(compose(E1, compose(Dw, E2)));
    GradedMap descent = simplex_integral(compose(E1, compose(Gw, compose(Dw, E2))) +
                                         compose(E1, compose(Dw, compose(E2, Gw))));
    return DeformationResponse{point, -descent};
}

FormOp amplitude_closure_residual(const FormOp& amplitude, const GradedMap& Q) {
    return d(amplitude) + ad_q(Q, amplitude);
}

} // namespace exalg
