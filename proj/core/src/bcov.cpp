#include "exalg/bcov.hpp"

#include <sstream>

namespace exalg {

namespace {

std::vector<Series> multiply(const MultiOp& product, const std::vector<Series>& a,
                             const std::vector<Series>& b) {
    const RingPtr& ring = product.map.ring();
    std::size_t dim = product.slot->dim();
    std::vector<Series> arg(dim * dim, Series(ring));
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            arg[i * dim + j] = a[i] * b[j];
        }
    }
    return product.map.apply(arg);
}

std::vector<Series> truncate_vec(std::vector<Series> v, int order) {
    for (auto& s : v) s = s.truncated(order);
    return v;
}

} // namespace

CheckReport validate_bcov(const BCOVData& b) {
    CheckReport r;
    const MultiOp& m = b.product;
    const SpacePtr& B = m.slot;
    const RingPtr& ring = m.map.ring();
    std::size_t dim = B->dim();

    r.add("bcov", "product even", m.parity() == 0);

    auto basis_vec = [&](std::size_t i) {
        std::vector<Series> v(dim, Series(ring));
        v[i] = Series(ring, Scalar(1));
        return v;
    };
    auto vec_zero = [&](const std::vector<Series>& v) {
        for (const auto& s : v)
            if (!s.is_zero()) return false;
        return true;
    };

    // Supercommutativity and unit on basis pairs.
    bool comm_ok = true, unit_ok = true;
    for (std::size_t i = 0; i < dim && comm_ok; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            auto ij = multiply(m, basis_vec(i), basis_vec(j));
            auto ji = multiply(m, basis_vec(j), basis_vec(i));
            int sign = (B->parity(i) * B->parity(j)) % 2;
            for (std::size_t k = 0; k < dim; ++k) {
                Series dlt = ij[k] - (sign ? -ji[k] : ji[k]);
                if (!dlt.is_zero()) {
                    comm_ok = false;
                    break;
                }
            }
        }
    r.add("bcov", "product supercommutative", comm_ok);
    {
        auto one = basis_vec(b.unit);
        for (std::size_t j = 0; j < dim && unit_ok; ++j) {
            auto v = multiply(m, one, basis_vec(j));
            v[j] -= Series(ring, Scalar(1));
            unit_ok = vec_zero(v);
        }
        r.add("bcov", "unit element", unit_ok);
    }

    // Associativity on basis triples.
    bool assoc_ok = true;
    for (std::size_t i = 0; i < dim && assoc_ok; ++i)
        for (std::size_t j = 0; j < dim && assoc_ok; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                auto lhs = multiply(m, multiply(m, basis_vec(i), basis_vec(j)), basis_vec(k));
                auto rhs = multiply(m, basis_vec(i), multiply(m, basis_vec(j), basis_vec(k)));
                for (std::size_t l = 0; l < dim; ++l) lhs[l] -= rhs[l];
                if (!vec_zero(lhs)) {
                    assoc_ok = false;
                    break;
                }
            }
    r.add("bcov", "product associative", assoc_ok);

    // Q a derivation of the product.
    bool deriv_ok = true;
    for (std::size_t i = 0; i < dim && deriv_ok; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            auto lhs = b.h.c.Q.apply(multiply(m, basis_vec(i), basis_vec(j)));
            auto r1 = multiply(m, b.h.c.Q.apply(basis_vec(i)), basis_vec(j));
            auto r2 = multiply(m, basis_vec(i), b.h.c.Q.apply(basis_vec(j)));
            int sign = B->parity(i);
            for (std::size_t l = 0; l < dim; ++l)
                lhs[l] -= r1[l] + (sign ? -r2[l] : r2[l]);
            if (!vec_zero(lhs)) {
                deriv_ok = false;
                break;
            }
        }
    r.add("bcov", "Q derivation of product", deriv_ok);

    // G_minus second order: Dev_a(b) = G-(ab) - G-(a)b - (-1)^{|a|} a G-(b)
    // must be a derivation in b, tested on basis triples.
    bool second_ok = true;
    auto dev = [&](std::size_t a, const std::vector<Series>& v) {
        auto av = multiply(m, basis_vec(a), v);
        auto t1 = b.h.G_minus.apply(av);
        auto t2 = multiply(m, b.h.G_minus.apply(basis_vec(a)), v);
        auto t3 = multiply(m, basis_vec(a), b.h.G_minus.apply(v));
        int sa = B->parity(a);
        for (std::size_t l = 0; l < dim; ++l) t1[l] -= t2[l] + (sa ? -t3[l] : t3[l]);
        return t1;
    };
    for (std::size_t a = 0; a < dim && second_ok; ++a) {
        int dev_par = (B->parity(a) + 1) % 2;
        for (std::size_t i = 0; i < dim && second_ok; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                auto lhs = dev(a, multiply(m, basis_vec(i), basis_vec(j)));
                auto r1 = multiply(m, dev(a, basis_vec(i)), basis_vec(j));
                auto r2 = multiply(m, basis_vec(i), dev(a, basis_vec(j)));
                int sign = (dev_par * B->parity(i)) % 2;
                for (std::size_t l = 0; l < dim; ++l)
                    lhs[l] -= r1[l] + (sign ? -r2[l] : r2[l]);
                if (!vec_zero(lhs)) {
                    second_ok = false;
                    break;
                }
            }
    }
    r.add("bcov", "G_minus second order", second_ok);

    r.merge(validate_strong_hodge(b.h));
    return r;
}

GradedMap edge_operator(const BCOVData& b, EdgeOperator which) {
    if (which == EdgeOperator::GGminus) return -compose(b.h.G, b.h.G_minus);
    return -compose(b.h.G_minus, b.h.G);
}

namespace {

std::vector<Series> tree_sum_fixed_point(const BCOVData& b,
                                         const std::vector<std::string>& coords, int max_order,
                                         EdgeOperator edge) {
    const RingPtr& ring = b.product.map.ring();
    const SpacePtr& B = b.product.slot;
    std::size_t mu = b.h.W->dim();
    if (coords.size() != mu)
        throw StructuralError("bcov: need one coordinate per cohomology basis element");
    std::vector<Series> xi(B->dim(), Series(ring));
    for (std::size_t a = 0; a < mu; ++a) {
        auto col = b.h.i_W.column(a);
        Series ta = Series::var(ring, coords[a]);
        for (std::size_t l = 0; l < B->dim(); ++l)
            if (!col[l].is_zero()) xi[l] += ta * col[l];
    }
    GradedMap E = edge_operator(b, edge);
    std::vector<Series> P = xi;
    for (int iter = 2; iter <= max_order; ++iter) {
        auto mp = multiply(b.product, P, P);
        for (auto& s : mp) s *= Scalar(1, 2);
        auto corrected = E.apply(mp);
        for (std::size_t l = 0; l < corrected.size(); ++l) corrected[l] += xi[l];
        P = truncate_vec(std::move(corrected), max_order);
    }
    return P;
}

} // namespace

VectorField bcov_vector_field(const BCOVData& b, const std::vector<std::string>& coords,
                              int max_order, EdgeOperator edge) {
    auto P = tree_sum_fixed_point(b, coords, max_order, edge);
    auto mp = multiply(b.product, P, P);
    for (auto& s : mp) s *= Scalar(1, 2);
    auto v = truncate_vec(b.h.pi_W.apply(mp), max_order);
    return VectorField{coords, std::move(v)};
}

StructureConstants structure_constants(const VectorField& v) {
    StructureConstants f;
    f.coords = v.coords;
    f.mu = v.coords.size();
    f.f.reserve(v.components.size() * f.mu * f.mu);
    for (const auto& comp : v.components)
        for (std::size_t bidx = 0; bidx < f.mu; ++bidx)
            for (std::size_t cidx = 0; cidx < f.mu; ++cidx)
                f.f.push_back(
                    comp.derivative(v.coords[bidx]).derivative(v.coords[cidx]));
    return f;
}

OaResidual check_oa(const StructureConstants& f, int order) {
    OaResidual res;
    res.mu = f.mu;
    std::size_t mu = f.mu;
    res.r.reserve(mu * mu * mu * mu);
    for (std::size_t e = 0; e < mu; ++e)
        for (std::size_t b = 0; b < mu; ++b)
            for (std::size_t c = 0; c < mu; ++c)
                for (std::size_t dd = 0; dd < mu; ++dd) {
                    Series acc;
                    bool first = true;
                    for (std::size_t a = 0; a < mu; ++a) {
                        Series lhs = f.at(a, b, c) * f.at(e, a, dd);
                        Series rhs = f.at(a, c, dd) * f.at(e, b, a);
                        if (first) {
                            acc = lhs - rhs;
                            first = false;
                        } else {
                            acc += lhs - rhs;
                        }
                    }
                    res.r.push_back(acc.truncated(order));
                }
    return res;
}

std::string OaResidual::detail(std::size_t max_entries) const {
    std::ostringstream os;
    std::size_t shown = 0;
    for (std::size_t i = 0; i < r.size() && shown < max_entries; ++i) {
        if (r[i].is_zero()) continue;
        std::size_t dd = i % mu, c = (i / mu) % mu, b = (i / mu / mu) % mu, e = i / mu / mu / mu;
        if (shown) os << "; ";
        os << "(e=" << e << ",b=" << b << ",c=" << c << ",d=" << dd << ")=" << r[i].str();
        ++shown;
    }
    return os.str();
}

std::vector<Scalar> structure_constants_at_zero(const StructureConstants& f) {
    std::vector<Scalar> out;
    out.reserve(f.f.size());
    for (const auto& s : f.f) out.push_back(s.truncated(0).constant_term());
    return out;
}

CommFamily leaf_to_root_family(const BCOVData& b, const std::vector<std::string>& coords,
                               int order, EdgeOperator edge, bool insert_right) {
    auto P = tree_sum_fixed_point(b, coords, order, edge);
    GradedMap X = insert_right ? right_multiplication(b.product, P)
                               : left_multiplication(b.product, P);
    return CommFamily{FamilyMode::Simplified, coords, std::move(X)};
}

CheckReport check_potentiality(const VectorField& v,
                               const std::vector<std::vector<Scalar>>& eta) {
    CheckReport rep;
    std::size_t mu = v.coords.size();
    bool ok = true;
    std::string detail;
    for (std::size_t bidx = 0; bidx < mu && ok; ++bidx)
        for (std::size_t cidx = bidx + 1; cidx < mu; ++cidx) {
            Series lhs, rhs;
            bool first = true;
            for (std::size_t a = 0; a < mu; ++a) {
                Series l = (v.components[a] * eta[bidx][a]).derivative(v.coords[cidx]);
                Series r = (v.components[a] * eta[cidx][a]).derivative(v.coords[bidx]);
                if (first) {
                    lhs = l;
                    rhs = r;
                    first = false;
                } else {
                    lhs += l;
                    rhs += r;
                }
            }
            lhs -= rhs;
            if (!lhs.is_zero()) {
                ok = false;
                detail = "(b=" + std::to_string(bidx) + ",c=" + std::to_string(cidx) + ")";
            }
        }
    rep.add("bcov", "potential exists (eta-lowered field is closed)", ok, detail);
    return rep;
}

} // namespace exalg
