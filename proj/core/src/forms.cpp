#include "exalg/forms.hpp"

#include <bit>
#include <sstream>

namespace exalg {

FormOp::FormOp(FormCtxPtr ctx, SpacePtr src, SpacePtr dst, int total_parity, RingPtr ring)
    : ctx_(std::move(ctx)), src_(std::move(src)), dst_(std::move(dst)),
      parity_(((total_parity % 2) + 2) % 2), ring_(std::move(ring)) {}

FormOp FormOp::from_map(FormCtxPtr ctx, const GradedMap& m) {
    FormOp f(std::move(ctx), m.source(), m.target(), m.parity(), m.ring());
    if (!m.is_zero()) f.comps_.emplace(0u, m);
    return f;
}

FormOp FormOp::zero(FormCtxPtr ctx, SpacePtr src, SpacePtr dst, int total_parity, RingPtr ring) {
    return FormOp(std::move(ctx), std::move(src), std::move(dst), total_parity, std::move(ring));
}

bool FormOp::is_zero() const {
    for (const auto& [mask, m] : comps_)
        if (!m.is_zero()) return false;
    return true;
}

GradedMap FormOp::component(std::uint32_t mask) const {
    auto it = comps_.find(mask);
    if (it != comps_.end()) return it->second;
    int deg = std::popcount(mask);
    return GradedMap::zero(src_, dst_, (parity_ + deg) % 2, ring_);
}

void FormOp::set_component(std::uint32_t mask, GradedMap m) {
    int deg = std::popcount(mask);
    if (m.parity() != (parity_ + deg) % 2)
        throw ParityError("FormOp: component parity inconsistent with total parity");
    if (m.is_zero())
        comps_.erase(mask);
    else
        comps_.insert_or_assign(mask, std::move(m));
}

void FormOp::add_component(std::uint32_t mask, const GradedMap& m) {
    if (m.is_zero()) return;
    auto it = comps_.find(mask);
    if (it == comps_.end()) {
        set_component(mask, m);
    } else {
        GradedMap s = it->second;
        s += m;
        if (s.is_zero())
            comps_.erase(it);
        else
            it->second = std::move(s);
    }
}

FormOp FormOp::operator-() const {
    FormOp f = *this;
    for (auto& [mask, m] : f.comps_) m = -m;
    return f;
}

static void check_form_compat(const FormOp& a, const FormOp& b) {
    if (!a.ctx()->same(*b.ctx())) throw StructuralError("FormOp: direction context mismatch");
    if (!a.source()->same(*b.source()) || !a.target()->same(*b.target()))
        throw StructuralError("FormOp: space mismatch");
    if (a.total_parity() != b.total_parity())
        throw ParityError("FormOp: total parity mismatch in sum");
}

FormOp& FormOp::operator+=(const FormOp& o) {
    check_form_compat(*this, o);
    for (const auto& [mask, m] : o.comps_) add_component(mask, m);
    return *this;
}

FormOp& FormOp::operator-=(const FormOp& o) {
    check_form_compat(*this, o);
    for (const auto& [mask, m] : o.comps_) add_component(mask, -m);
    return *this;
}

bool operator==(const FormOp& a, const FormOp& b) {
    if (!a.ctx_->same(*b.ctx_)) return false;
    FormOp diff = a;
    diff -= b;
    return diff.is_zero();
}

FormOp FormOp::scaled(const Series& c) const {
    FormOp f = *this;
    for (auto& [mask, m] : f.comps_) m = m.scaled(c);
    return f;
}

FormOp FormOp::scaled(const Scalar& c) const {
    FormOp f = *this;
    for (auto& [mask, m] : f.comps_) m = m.scaled(c);
    return f;
}

FormOp FormOp::degree_part(int k) const {
    FormOp f(ctx_, src_, dst_, parity_, ring_);
    for (const auto& [mask, m] : comps_)
        if (std::popcount(mask) == k) f.comps_.emplace(mask, m);
    return f;
}

int FormOp::max_degree() const {
    int deg = 0;
    for (const auto& [mask, m] : comps_)
        if (!m.is_zero()) deg = std::max(deg, std::popcount(mask));
    return deg;
}

std::string FormOp::str() const {
    std::ostringstream os;
    for (const auto& [mask, m] : comps_) {
        os << "[";
        bool first = true;
        for (std::size_t i = 0; i < ctx_->size(); ++i)
            if (mask & (1u << i)) {
                if (!first) os << "^";
                first = false;
                os << "d" << ctx_->param(i).symbol;
            }
        if (first) os << "1";
        os << "]\n" << m.str();
    }
    return os.str();
}

int merge_sign(std::uint32_t left, std::uint32_t right) {
    // Count inversions: pairs (l in left, r in right) with l > r.
    int inv = 0;
    for (int r = 0; r < 32; ++r) {
        if (!(right & (1u << r))) continue;
        std::uint32_t higher = left & ~((1u << (r + 1)) - 1);
        inv += std::popcount(higher);
    }
    return inv % 2 == 0 ? 1 : -1;
}

FormOp compose(const FormOp& a, const FormOp& b) {
    if (!a.ctx()->same(*b.ctx())) throw StructuralError("FormOp compose: context mismatch");
    FormOp f(a.ctx(), b.source(), a.target(), (a.total_parity() + b.total_parity()) % 2,
             a.ring());
    for (const auto& [ma, va] : a.components()) {
        for (const auto& [mb, vb] : b.components()) {
            if (ma & mb) continue; // dt^2 = 0
            // dt_A Va dt_B Vb = (-1)^{|Va| |B|} merge(A,B) dt_{A u B} Va Vb
            int sign = merge_sign(ma, mb);
            if ((va.parity() * std::popcount(mb)) % 2) sign = -sign;
            GradedMap prod = compose(va, vb);
            if (sign < 0) prod = -prod;
            f.add_component(ma | mb, prod);
        }
    }
    return f;
}

FormOp tensor(const FormOp& a, const FormOp& b) {
    if (!a.ctx()->same(*b.ctx())) throw StructuralError("FormOp tensor: context mismatch");
    FormOp f(a.ctx(), tensor_space(a.source(), b.source()), tensor_space(a.target(), b.target()),
             (a.total_parity() + b.total_parity()) % 2, a.ring());
    for (const auto& [ma, va] : a.components())
        for (const auto& [mb, vb] : b.components()) {
            if (ma & mb) continue;
            int sign = merge_sign(ma, mb);
            if ((va.parity() * std::popcount(mb)) % 2) sign = -sign;
            GradedMap prod = tensor(va, vb);
            if (sign < 0) prod = -prod;
            f.add_component(ma | mb, prod);
        }
    return f;
}

FormOp d(const FormOp& f) {
    FormOp out(f.ctx(), f.source(), f.target(), (f.total_parity() + 1) % 2, f.ring());
    for (const auto& [mask, m] : f.components()) {
        for (std::size_t i = 0; i < f.ctx()->size(); ++i) {
            std::uint32_t bit = 1u << i;
            if (mask & bit) continue;
            const FormParam& p = f.ctx()->param(i);
            GradedMap dm = m.transform([&](const Series& s) {
                Series der = s.derivative(p.var);
                if (p.rule == DerivRule::ExpLength) {
                    // d/dt = -u d/du
                    der = -(der.shifted(p.var, 1));
                }
                return der;
            });
            if (dm.is_zero()) continue;
            // dt_i wedge dt_mask: insert in front, then sort into position.
            int sign = merge_sign(bit, mask);
            if (sign < 0) dm = -dm;
            out.add_component(mask | bit, dm);
        }
    }
    return out;
}

FormOp ad_q(const GradedMap& Q, const FormOp& f) {
    FormOp out(f.ctx(), f.source(), f.target(), (f.total_parity() + Q.parity()) % 2, f.ring());
    for (const auto& [mask, m] : f.components()) {
        GradedMap c = supercommutator(Q, m);
        if ((Q.parity() * std::popcount(mask)) % 2) c = -c;
        out.add_component(mask, c);
    }
    return out;
}

FormOp supercommutator(const GradedMap& a, const FormOp& b) {
    FormOp left = compose(FormOp::from_map(b.ctx(), a), b);
    FormOp right = compose(b, FormOp::from_map(b.ctx(), a));
    if ((a.parity() * b.total_parity()) % 2 == 0) return left -= right;
    return left += right;
}

} // namespace exalg
