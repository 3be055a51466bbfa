#include "exalg/graded.hpp"

#include <numeric>
#include <sstream>

namespace exalg {

GradedSpace::GradedSpace(std::vector<std::string> labels, std::vector<int> parity,
                         std::vector<int> degree)
    : labels_(std::move(labels)), parity_(std::move(parity)), degree_(std::move(degree)) {
    if (labels_.size() != parity_.size())
        throw StructuralError("GradedSpace: labels/parity size mismatch");
    for (int p : parity_)
        if (p != 0 && p != 1) throw StructuralError("GradedSpace: parity must be 0 or 1");
    if (!degree_.empty()) {
        if (degree_.size() != labels_.size())
            throw StructuralError("GradedSpace: degree size mismatch");
        for (std::size_t i = 0; i < degree_.size(); ++i)
            if (((degree_[i] % 2) + 2) % 2 != parity_[i])
                throw StructuralError("GradedSpace: parity != degree mod 2 at " + labels_[i]);
    }
}

SpacePtr tensor_space(const SpacePtr& a, const SpacePtr& b) {
    std::vector<std::string> labels;
    std::vector<int> parity;
    labels.reserve(a->dim() * b->dim());
    parity.reserve(a->dim() * b->dim());
    for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < b->dim(); ++j) {
            labels.push_back(a->label(i) + "|" + b->label(j));
            parity.push_back((a->parity(i) + b->parity(j)) % 2);
        }
    return GradedSpace::make(std::move(labels), std::move(parity));
}

SpacePtr tensor_power(const SpacePtr& v, int n) {
    if (n < 1) throw StructuralError("tensor_power: arity must be >= 1");
    SpacePtr r = v;
    for (int k = 1; k < n; ++k) r = tensor_space(r, v);
    return r;
}

GradedMap::GradedMap(SpacePtr src, SpacePtr dst, int parity, RingPtr ring)
    : src_(std::move(src)), dst_(std::move(dst)), parity_(((parity % 2) + 2) % 2),
      ring_(std::move(ring)), rows_(dst_->dim()), cols_(src_->dim()),
      mat_(rows_ * cols_, Series(ring_)) {}

GradedMap GradedMap::identity(const SpacePtr& v, const RingPtr& ring) {
    GradedMap m(v, v, 0, ring);
    for (std::size_t i = 0; i < v->dim(); ++i) m.set(i, i, Series(ring, Scalar(1)));
    return m;
}

GradedMap GradedMap::from_entries(
    SpacePtr src, SpacePtr dst, int parity, RingPtr ring,
    const std::vector<std::tuple<std::size_t, std::size_t, Series>>& entries) {
    GradedMap m(std::move(src), std::move(dst), parity, std::move(ring));
    for (const auto& [r, c, v] : entries) m.set(r, c, v);
    return m;
}

GradedMap GradedMap::from_scalar_rows(SpacePtr src, SpacePtr dst, int parity, RingPtr ring,
                                      const std::vector<std::vector<Scalar>>& rows) {
    GradedMap m(src, dst, parity, ring);
    if (rows.size() != m.rows()) throw StructuralError("from_scalar_rows: row count mismatch");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw StructuralError("from_scalar_rows: column count mismatch");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (!rows[r][c].is_zero()) m.set(r, c, Series(m.ring(), rows[r][c]));
    }
    return m;
}

void GradedMap::set(std::size_t r, std::size_t c, Series v) {
    if (!v.is_zero() && (dst_->parity(r) + src_->parity(c) + parity_) % 2 != 0)
        throw ParityError("GradedMap: entry (" + dst_->label(r) + "," + src_->label(c) +
                          ") violates parity discipline");
    mat_[r * cols_ + c] = std::move(v);
}

void GradedMap::add_to(std::size_t r, std::size_t c, const Series& v) {
    if (v.is_zero()) return;
    Series s = mat_[r * cols_ + c];
    s += v;
    set(r, c, std::move(s));
}

bool GradedMap::is_zero() const {
    for (const auto& s : mat_)
        if (!s.is_zero()) return false;
    return true;
}

GradedMap GradedMap::operator-() const {
    GradedMap m = *this;
    for (auto& s : m.mat_) s = -s;
    return m;
}

static void check_compatible(const GradedMap& a, const GradedMap& b) {
    if (!a.source()->same(*b.source()) || !a.target()->same(*b.target()))
        throw StructuralError("GradedMap: space mismatch");
    if (a.parity() != b.parity())
        throw ParityError("GradedMap: parity mismatch in sum");
}

GradedMap& GradedMap::operator+=(const GradedMap& o) {
    check_compatible(*this, o);
    for (std::size_t i = 0; i < mat_.size(); ++i) {
        Series s = mat_[i];
        s += o.mat_[i];
        mat_[i] = std::move(s);
    }
    return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& o) {
    check_compatible(*this, o);
    for (std::size_t i = 0; i < mat_.size(); ++i) {
        Series s = mat_[i];
        s -= o.mat_[i];
        mat_[i] = std::move(s);
    }
    return *this;
}

bool operator==(const GradedMap& a, const GradedMap& b) {
    if (!a.source()->same(*b.source()) || !a.target()->same(*b.target())) return false;
    for (std::size_t i = 0; i < a.mat_.size(); ++i)
        if (a.mat_[i] != b.mat_[i]) return false;
    return true;
}

GradedMap GradedMap::scaled(const Series& c) const {
    GradedMap m = *this;
    for (auto& s : m.mat_) s = s * c;
    return m;
}

GradedMap GradedMap::scaled(const Scalar& c) const {
    GradedMap m = *this;
    for (auto& s : m.mat_) s *= c;
    return m;
}

GradedMap GradedMap::transform(const std::function<Series(const Series&)>& f) const {
    GradedMap m(src_, dst_, parity_, ring_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            Series v = f(at(r, c));
            if (!v.is_zero()) m.set(r, c, std::move(v));
        }
    return m;
}

std::vector<Series> GradedMap::apply(const std::vector<Series>& v) const {
    if (v.size() != cols_) throw StructuralError("GradedMap::apply: dimension mismatch");
    std::vector<Series> out(rows_, Series(ring_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (at(r, c).is_zero() || v[c].is_zero()) continue;
            out[r] += at(r, c) * v[c];
        }
    return out;
}

std::vector<Series> GradedMap::column(std::size_t c) const {
    std::vector<Series> out(rows_, Series(ring_));
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

std::string GradedMap::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero())
                os << dst_->label(r) << " <- " << src_->label(c) << " : " << at(r, c).str()
                   << "\n";
    return os.str();
}

GradedMap compose(const GradedMap& a, const GradedMap& b) {
    if (!a.source()->same(*b.target()))
        throw StructuralError("compose: inner space mismatch");
    GradedMap m(b.source(), a.target(), (a.parity() + b.parity()) % 2, a.ring());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Series& av = a.at(r, k);
            if (av.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) {
                const Series& bv = b.at(k, c);
                if (bv.is_zero()) continue;
                m.add_to(r, c, av * bv);
            }
        }
    return m;
}

GradedMap tensor(const GradedMap& a, const GradedMap& b) {
    SpacePtr src = tensor_space(a.source(), b.source());
    SpacePtr dst = tensor_space(a.target(), b.target());
    GradedMap m(src, dst, (a.parity() + b.parity()) % 2, a.ring());
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const Series& av = a.at(ra, ca);
            if (av.is_zero()) continue;
            int sign = (b.parity() * a.source()->parity(ca)) % 2;
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (std::size_t cb = 0; cb < b.cols(); ++cb) {
                    const Series& bv = b.at(rb, cb);
                    if (bv.is_zero()) continue;
                    Series v = av * bv;
                    if (sign) v = -v;
                    m.add_to(ra * b.rows() + rb, ca * b.cols() + cb, v);
                }
        }
    return m;
}

GradedMap supercommutator(const GradedMap& a, const GradedMap& b) {
    if (!a.source()->same(*b.source()) || !a.target()->same(*b.target()) ||
        !a.source()->same(*a.target()))
        throw StructuralError("supercommutator: endomorphisms of one space required");
    GradedMap ab = compose(a, b);
    GradedMap ba = compose(b, a);
    if ((a.parity() * b.parity()) % 2 == 0) return ab -= ba;
    return ab += ba;
}

GradedMap exp_truncated(const GradedMap& a, const std::string& var, int order) {
    if (a.parity() != 0) throw ParityError("exp_truncated: even map required");
    if (!a.source()->same(*a.target()))
        throw StructuralError("exp_truncated: endomorphism required");
    const RingPtr& ring = a.ring();
    Series mt = -Series::var(ring, var);
    GradedMap result = GradedMap::identity(a.source(), ring);
    GradedMap term = result; // (-var A)^k / k!
    for (int k = 1; k <= order; ++k) {
        term = compose(a, term).scaled(mt).scaled(Scalar(1, k));
        result += term;
    }
    return result;
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& parities) {
    int sign = 0;
    const int n = static_cast<int>(perm.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[i] > perm[j]) sign += parities[perm[i]] * parities[perm[j]];
    return (sign % 2 == 0) ? 1 : -1;
}

GradedMap permutation_op(const SpacePtr& v, const RingPtr& ring, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    SpacePtr vn = tensor_power(v, n);
    GradedMap m(vn, vn, 0, ring);
    const std::size_t d = v->dim();
    std::vector<std::size_t> tup(n), img(n);
    std::vector<int> pars(n);
    for (std::size_t c = 0; c < vn->dim(); ++c) {
        tup = tuple_index(c, d, n);
        for (int i = 0; i < n; ++i) {
            img[i] = tup[perm[i]];
            pars[i] = v->parity(tup[i]);
        }
        int sign = koszul_sign(perm, pars);
        m.set(flat_index(img, d), c, Series(ring, Scalar(sign)));
    }
    return m;
}

MultiOp MultiOp::zero(int n, const SpacePtr& slot, const SpacePtr& dst, int parity,
                      const RingPtr& ring) {
    return MultiOp(n, slot, GradedMap::zero(tensor_power(slot, n), dst, parity, ring));
}

MultiOp permuted(const MultiOp& op, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != op.arity)
        throw StructuralError("permuted: arity mismatch");
    GradedMap p = permutation_op(op.slot, op.map.ring(), perm);
    return MultiOp(op.arity, op.slot, compose(op.map, p));
}

MultiOp symmetrized(const MultiOp& op) {
    std::vector<int> perm(op.arity);
    std::iota(perm.begin(), perm.end(), 0);
    GradedMap acc = GradedMap::zero(op.map.source(), op.map.target(), op.map.parity(),
                                    op.map.ring());
    Scalar count(0);
    do {
        acc += permuted(op, perm).map;
        count += Scalar(1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return MultiOp(op.arity, op.slot, acc.scaled(Scalar(1) / count));
}

bool is_symmetric(const MultiOp& op) {
    if (op.arity <= 1) return true;
    std::vector<int> perm(op.arity);
    for (int k = 0; k + 1 < op.arity; ++k) {
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[k], perm[k + 1]);
        if (!(permuted(op, perm).map == op.map)) return false;
    }
    return true;
}

std::size_t flat_index(const std::vector<std::size_t>& tuple, std::size_t dim) {
    std::size_t idx = 0;
    for (std::size_t t : tuple) idx = idx * dim + t;
    return idx;
}

std::vector<std::size_t> tuple_index(std::size_t flat, std::size_t dim, int arity) {
    std::vector<std::size_t> tup(arity);
    for (int i = arity - 1; i >= 0; --i) {
        tup[i] = flat % dim;
        flat /= dim;
    }
    return tup;
}

GradedMap reringed(const GradedMap& m, const RingPtr& target) {
    GradedMap out(m.source(), m.target(), m.parity(), target);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) out.set(r, c, m.at(r, c).reringed(target));
    return out;
}

} // namespace exalg
