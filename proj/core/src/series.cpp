#include "exalg/series.hpp"

#include <algorithm>
#include <sstream>

namespace exalg {

SeriesRing::SeriesRing(std::vector<VarSpec> vars, int max_total, int z_min, int z_max)
    : vars_(std::move(vars)), max_total_(max_total), z_min_(z_min), z_max_(z_max) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].kind == VarKind::Laurent) {
            if (laurent_) throw StructuralError("SeriesRing: at most one Laurent variable");
            laurent_ = static_cast<int>(i);
        }
    }
    if (laurent_ && z_min_ > z_max_)
        throw StructuralError("SeriesRing: empty Laurent window");
}

std::shared_ptr<const SeriesRing> SeriesRing::bounded(std::vector<std::string> names, int max_total) {
    std::vector<VarSpec> vs;
    vs.reserve(names.size());
    for (auto& n : names) vs.push_back({std::move(n), VarKind::Bounded});
    return make(std::move(vs), max_total);
}

std::shared_ptr<const SeriesRing> SeriesRing::trivial() {
    static const auto r = make({}, 0);
    return r;
}

int SeriesRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return static_cast<int>(i);
    throw StructuralError("SeriesRing: unknown variable " + name);
}

bool SeriesRing::same(const SeriesRing& o) const {
    return vars_ == o.vars_ && max_total_ == o.max_total_ && z_min_ == o.z_min_ &&
           z_max_ == o.z_max_;
}

Series::Series(RingPtr ring, Scalar c) : ring_(std::move(ring)) {
    insert(std::vector<int>(ring_->arity(), 0), std::move(c));
}

Series Series::var(RingPtr ring, const std::string& name, int power) {
    std::vector<int> e(ring->arity(), 0);
    e[ring->index_of(name)] = power;
    return monomial(std::move(ring), std::move(e), Scalar(1));
}

Series Series::monomial(RingPtr ring, std::vector<int> exps, Scalar c) {
    Series s(std::move(ring));
    if (exps.size() != s.ring_->arity())
        throw StructuralError("Series::monomial: exponent arity mismatch");
    s.insert(std::move(exps), std::move(c));
    return s;
}

bool Series::is_constant() const {
    if (coeffs_.empty()) return true;
    if (coeffs_.size() > 1) return false;
    const auto& e = coeffs_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Scalar Series::constant_term() const {
    return coeff(std::vector<int>(ring_->arity(), 0));
}

Scalar Series::coeff(const std::vector<int>& exps) const {
    auto it = coeffs_.find(exps);
    return it == coeffs_.end() ? Scalar() : it->second;
}

void Series::insert(std::vector<int> exps, Scalar c) {
    if (c.is_zero()) return;
    int total = 0;
    const auto& vars = ring_->vars();
    for (std::size_t i = 0; i < exps.size(); ++i) {
        switch (vars[i].kind) {
        case VarKind::Bounded:
            if (exps[i] < 0) throw StructuralError("Series: negative exponent of " + vars[i].name);
            total += exps[i];
            break;
        case VarKind::Free:
            if (exps[i] < 0) throw StructuralError("Series: negative exponent of " + vars[i].name);
            break;
        case VarKind::Laurent:
            if (exps[i] < ring_->z_min() || exps[i] > ring_->z_max())
                throw TruncationError("Series: " + vars[i].name + "^" + std::to_string(exps[i]) +
                                      " outside the window [" + std::to_string(ring_->z_min()) +
                                      "," + std::to_string(ring_->z_max()) +
                                      "]; increase the window");
            break;
        }
    }
    if (total > ring_->max_total()) return; // eager truncation
    auto it = coeffs_.find(exps);
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::move(exps), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void Series::check_ring(const Series& o) const {
    if (ring_ == o.ring_) return;
    if (!ring_->same(*o.ring_)) throw StructuralError("Series: ring mismatch");
}

Series Series::operator-() const {
    Series r(ring_);
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

Series& Series::operator+=(const Series& o) {
    check_ring(o);
    for (const auto& [e, c] : o.coeffs_) insert(e, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    check_ring(o);
    for (const auto& [e, c] : o.coeffs_) insert(e, -c);
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    a.check_ring(b);
    Series r(a.ring_);
    std::vector<int> e(a.ring_->arity());
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insert(e, ca * cb);
        }
    return r;
}

Series& Series::operator*=(const Series& o) {
    *this = *this * o;
    return *this;
}

Series& Series::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, v] : coeffs_) v *= c;
    return *this;
}

bool operator==(const Series& a, const Series& b) {
    a.check_ring(b);
    return a.coeffs_ == b.coeffs_;
}

Series Series::derivative(const std::string& var) const {
    int idx = ring_->index_of(var);
    Series r(ring_);
    for (const auto& [e, c] : coeffs_) {
        if (e[idx] == 0) continue;
        std::vector<int> e2 = e;
        e2[idx] -= 1;
        r.insert(std::move(e2), c * Scalar(e[idx]));
    }
    return r;
}

Series Series::substitute(const std::string& var, const Scalar& value) const {
    int idx = ring_->index_of(var);
    Series r(ring_);
    for (const auto& [e, c] : coeffs_) {
        int k = e[idx];
        Scalar f = c;
        if (k < 0) {
            if (value.is_zero())
                throw StructuralError("Series::substitute: zero at a pole of " + var);
            Scalar inv = Scalar(1) / value;
            for (int j = 0; j < -k; ++j) f *= inv;
        } else {
            for (int j = 0; j < k; ++j) f *= value;
        }
        std::vector<int> e2 = e;
        e2[idx] = 0;
        r.insert(std::move(e2), std::move(f));
    }
    return r;
}

Series Series::substitute_series(const std::string& var, const Series& value) const {
    check_ring(value);
    int idx = ring_->index_of(var);
    Series r(ring_);
    for (const auto& [e, c] : coeffs_) {
        int k = e[idx];
        if (k < 0) throw StructuralError("Series::substitute_series: negative power of " + var);
        std::vector<int> e2 = e;
        e2[idx] = 0;
        Series term = Series::monomial(ring_, std::move(e2), c);
        for (int j = 0; j < k; ++j) term *= value;
        r += term;
    }
    return r;
}

Series Series::slice(const std::string& var, int k) const {
    int idx = ring_->index_of(var);
    Series r(ring_);
    for (const auto& [e, c] : coeffs_) {
        if (e[idx] != k) continue;
        std::vector<int> e2 = e;
        e2[idx] = 0;
        r.insert(std::move(e2), c);
    }
    return r;
}

Series Series::shifted(const std::string& var, int k) const {
    int idx = ring_->index_of(var);
    Series r(ring_);
    for (const auto& [e, c] : coeffs_) {
        std::vector<int> e2 = e;
        e2[idx] += k;
        r.insert(std::move(e2), c);
    }
    return r;
}

Series Series::integrate(const std::string& var, const Series& upper) const {
    check_ring(upper);
    int idx = ring_->index_of(var);
    Series r(ring_);
    for (const auto& [e, c] : coeffs_) {
        int k = e[idx];
        if (k < 0) throw StructuralError("Series::integrate: negative power of " + var);
        std::vector<int> e2 = e;
        e2[idx] = 0;
        Series term = Series::monomial(ring_, std::move(e2), c * Scalar(1, k + 1));
        Series up(ring_, Scalar(1));
        for (int j = 0; j < k + 1; ++j) up *= upper;
        r += term * up;
    }
    return r;
}

int Series::bounded_degree() const {
    int best = 0;
    const auto& vars = ring_->vars();
    for (const auto& [e, c] : coeffs_) {
        int total = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (vars[i].kind == VarKind::Bounded) total += e[i];
        best = std::max(best, total);
    }
    return best;
}

int Series::bounded_order() const {
    if (coeffs_.empty()) return -1;
    int best = ring_->max_total() + 1;
    const auto& vars = ring_->vars();
    for (const auto& [e, c] : coeffs_) {
        int total = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (vars[i].kind == VarKind::Bounded) total += e[i];
        best = std::min(best, total);
    }
    return best;
}

Series Series::truncated(int order) const {
    Series r(ring_);
    const auto& vars = ring_->vars();
    for (const auto& [e, c] : coeffs_) {
        int total = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (vars[i].kind == VarKind::Bounded) total += e[i];
        if (total <= order) r.coeffs_.emplace(e, c);
    }
    return r;
}

Series Series::reringed(const RingPtr& target) const {
    if (target == ring_ || target->same(*ring_)) {
        Series r = *this;
        return r;
    }
    std::vector<int> where(ring_->arity(), -1);
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
        const auto& name = ring_->vars()[i].name;
        for (std::size_t j = 0; j < target->arity(); ++j)
            if (target->vars()[j].name == name) where[i] = static_cast<int>(j);
    }
    Series r(target);
    for (const auto& [e, c] : coeffs_) {
        std::vector<int> e2(target->arity(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0)
                throw StructuralError("Series::reringed: variable " + ring_->vars()[i].name +
                                      " absent from target ring");
            e2[where[i]] = e[i];
        }
        r.insert(std::move(e2), c);
    }
    return r;
}

std::string Series::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << ring_->vars()[i].name;
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace exalg
