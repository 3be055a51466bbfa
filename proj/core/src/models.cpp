#include "exalg/models.hpp"

namespace exalg {

namespace {

// Exact division of a coefficient vector by wprime (leading coefficient
// invertible): returns (quotient, remainder with deg < deg wprime).
std::pair<std::vector<Scalar>, std::vector<Scalar>> divmod(std::vector<Scalar> f,
                                                           const std::vector<Scalar>& wprime) {
    int d = static_cast<int>(wprime.size()) - 1;
    Scalar lead = wprime[d];
    std::vector<Scalar> q(f.size() > static_cast<std::size_t>(d) ? f.size() - d : 1, Scalar(0));
    for (int m = static_cast<int>(f.size()) - 1; m >= d; --m) {
        if (f[m].is_zero()) continue;
        Scalar c = f[m] / lead;
        q[m - d] = c;
        for (int k = 0; k <= d; ++k) f[m - d + k] -= c * wprime[k];
    }
    f.resize(d);
    return {q, f};
}

} // namespace

PolyvectorModel polyvector_model(const std::vector<Scalar>& wprime, int cutoff,
                                 const RingPtr& ring) {
    int d = static_cast<int>(wprime.size()) - 1;
    while (d >= 0 && wprime[d].is_zero()) --d;
    if (d < 1) throw StructuralError("polyvector_model: W' must have degree >= 1");
    std::vector<Scalar> wp(wprime.begin(), wprime.begin() + d + 1);
    int c_even = cutoff;
    int c_odd = cutoff - d;
    if (c_odd < 1)
        throw StructuralError("polyvector_model: cutoff " + std::to_string(cutoff) +
                              " too small: Q would map x^0*th to degree " + std::to_string(d) +
                              " outside the basis (need cutoff > deg W')");

    std::vector<std::string> labels;
    std::vector<int> parity;
    for (int j = 0; j < c_even; ++j) {
        labels.push_back(j == 0 ? "1" : "x^" + std::to_string(j));
        parity.push_back(0);
    }
    for (int j = 0; j < c_odd; ++j) {
        labels.push_back(j == 0 ? "th" : "x^" + std::to_string(j) + "*th");
        parity.push_back(1);
    }
    SpacePtr B = GradedSpace::make(labels, parity);
    auto even_idx = [&](int j) { return static_cast<std::size_t>(j); };
    auto odd_idx = [&](int j) { return static_cast<std::size_t>(c_even + j); };

    Series one(ring, Scalar(1));

    GradedMap Q = GradedMap::zero(B, B, 1, ring);
    for (int j = 0; j < c_odd; ++j)
        for (int k = 0; k <= d; ++k)
            if (!wp[k].is_zero()) Q.add_to(even_idx(j + k), odd_idx(j), Series(ring, wp[k]));

    GradedMap G = GradedMap::zero(B, B, 1, ring);
    for (int m = d; m < c_even; ++m) {
        std::vector<Scalar> f(m + 1, Scalar(0));
        f[m] = Scalar(1);
        auto [q, r] = divmod(f, wp);
        for (std::size_t j = 0; j < q.size(); ++j)
            if (!q[j].is_zero()) G.add_to(odd_idx(static_cast<int>(j)), even_idx(m),
                                          Series(ring, q[j]));
    }

    GradedMap Gm = GradedMap::zero(B, B, 1, ring);
    for (int j = 1; j < c_odd; ++j) Gm.add_to(even_idx(j - 1), odd_idx(j), Series(ring, Scalar(j)));

    std::vector<std::string> wl;
    std::vector<int> wp_par;
    for (int k = 0; k < d; ++k) {
        wl.push_back("[" + std::string(k == 0 ? "1" : "x^" + std::to_string(k)) + "]");
        wp_par.push_back(0);
    }
    SpacePtr W = GradedSpace::make(wl, wp_par);

    GradedMap i_W = GradedMap::zero(W, B, 0, ring);
    for (int k = 0; k < d; ++k) i_W.add_to(even_idx(k), k, one);

    GradedMap pi_W = GradedMap::zero(B, W, 0, ring);
    for (int m = 0; m < c_even; ++m) {
        std::vector<Scalar> f(m + 1, Scalar(0));
        f[m] = Scalar(1);
        auto [q, r] = divmod(f, wp);
        for (int k = 0; k < d; ++k)
            if (!r[k].is_zero()) pi_W.add_to(k, even_idx(m), Series(ring, r[k]));
    }

    // Product with the paired truncations (degree < cutoff on the even part,
    // degree < cutoff - deg W' on the th-part).
    MultiOp prod = MultiOp::zero(2, B, B, 0, ring);
    for (std::size_t a = 0; a < B->dim(); ++a)
        for (std::size_t b = 0; b < B->dim(); ++b) {
            bool a_odd = B->parity(a) == 1;
            bool b_odd = B->parity(b) == 1;
            if (a_odd && b_odd) continue; // th^2 = 0
            int da = a_odd ? static_cast<int>(a) - c_even : static_cast<int>(a);
            int db = b_odd ? static_cast<int>(b) - c_even : static_cast<int>(b);
            int deg = da + db;
            std::size_t col = a * B->dim() + b;
            if (a_odd || b_odd) {
                if (deg < c_odd) prod.map.set(odd_idx(deg), col, one);
            } else {
                if (deg < c_even) prod.map.set(even_idx(deg), col, one);
            }
        }

    PolyvectorModel model;
    model.hodge = HodgeData{Complex{B, Q}, G, Gm, W, i_W, pi_W};
    model.product = std::move(prod);
    model.unit = even_idx(0);
    model.milnor_dim = d;
    return model;
}

GradedMap left_multiplication(const MultiOp& product, const std::vector<Series>& element) {
    const SpacePtr& B = product.slot;
    const RingPtr& ring = product.map.ring();
    // Parity of the element (must be homogeneous for a graded operator).
    int par = -1;
    for (std::size_t i = 0; i < element.size(); ++i) {
        if (element[i].is_zero()) continue;
        if (par == -1)
            par = B->parity(i);
        else if (par != B->parity(i))
            throw ParityError("left_multiplication: inhomogeneous element");
    }
    if (par == -1) par = 0;
    GradedMap m = GradedMap::zero(B, B, par, ring);
    for (std::size_t i = 0; i < element.size(); ++i) {
        if (element[i].is_zero()) continue;
        for (std::size_t b = 0; b < B->dim(); ++b) {
            std::size_t col = i * B->dim() + b;
            for (std::size_t r = 0; r < B->dim(); ++r) {
                const Series& v = product.map.at(r, col);
                if (!v.is_zero()) m.add_to(r, b, element[i] * v);
            }
        }
    }
    return m;
}

GradedMap right_multiplication(const MultiOp& product, const std::vector<Series>& element) {
    const SpacePtr& B = product.slot;
    const RingPtr& ring = product.map.ring();
    int par = -1;
    for (std::size_t i = 0; i < element.size(); ++i) {
        if (element[i].is_zero()) continue;
        if (par == -1)
            par = B->parity(i);
        else if (par != B->parity(i))
            throw ParityError("right_multiplication: inhomogeneous element");
    }
    if (par == -1) par = 0;
    GradedMap m = GradedMap::zero(B, B, par, ring);
    for (std::size_t b = 0; b < B->dim(); ++b)
        for (std::size_t i = 0; i < element.size(); ++i) {
            if (element[i].is_zero()) continue;
            std::size_t col = b * B->dim() + i;
            // Koszul: the operator (- * element) crosses b.
            int sign = (par * B->parity(b)) % 2;
            for (std::size_t r = 0; r < B->dim(); ++r) {
                const Series& v = product.map.at(r, col);
                if (v.is_zero()) continue;
                Series term = element[i] * v;
                if (sign) term = -term;
                m.add_to(r, b, term);
            }
        }
    return m;
}

CommFamily monomial_family(const PolyvectorModel& model,
                           const std::vector<std::string>& params) {
    if (static_cast<int>(params.size()) != model.milnor_dim)
        throw StructuralError("monomial_family: need one parameter per Milnor basis element");
    const RingPtr& ring = model.product.map.ring();
    const SpacePtr& B = model.product.slot;
    GradedMap U = GradedMap::zero(B, B, 0, ring);
    for (int a = 0; a < model.milnor_dim; ++a) {
        std::vector<Series> rep(B->dim(), Series(ring));
        rep[a] = Series::var(ring, params[a]); // t_a * x^{a-1}
        U += left_multiplication(model.product, rep);
    }
    return CommFamily{FamilyMode::Simplified, params, std::move(U)};
}

} // namespace exalg
