#pragma once

#include "exalg/graded.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace exalg {

/// How the exterior derivative acts in a form direction:
///  - Plain: d = dt * d/dt for an ordinary series variable t.
///  - ExpLength: the direction is an edge length t represented through
///    u = e^{-t}; then d/dt = -u d/du on the series level.
enum class DerivRule { Plain, ExpLength };

struct FormParam {
    std::string symbol; // name of the one-form generator, e.g. "t1" for dt1
    std::string var;    // series variable the direction differentiates
    DerivRule rule = DerivRule::Plain;
    friend bool operator==(const FormParam&, const FormParam&) = default;
};

class FormContext {
  public:
    explicit FormContext(std::vector<FormParam> params) : params_(std::move(params)) {
        if (params_.size() > 31) throw StructuralError("FormContext: too many directions");
    }
    static std::shared_ptr<const FormContext> make(std::vector<FormParam> params) {
        return std::make_shared<const FormContext>(std::move(params));
    }
    std::size_t size() const { return params_.size(); }
    const FormParam& param(std::size_t i) const { return params_[i]; }
    bool same(const FormContext& o) const { return params_ == o.params_; }

  private:
    std::vector<FormParam> params_;
};

using FormCtxPtr = std::shared_ptr<const FormContext>;

/// Operator-valued inhomogeneous differential form: sum over subsets S of the
/// form directions of  dt_S * M_S  with M_S a graded map. The one-form
/// generators are odd and sit to the LEFT of the operator part; a component
/// (S, M) has total parity |M| + |S|. A homogeneous FormOp has all components
/// of one total parity.
class FormOp {
  public:
    FormOp() = default;
    FormOp(FormCtxPtr ctx, SpacePtr src, SpacePtr dst, int total_parity, RingPtr ring);

    static FormOp from_map(FormCtxPtr ctx, const GradedMap& m); // mask = empty
    static FormOp zero(FormCtxPtr ctx, SpacePtr src, SpacePtr dst, int total_parity,
                       RingPtr ring);

    const FormCtxPtr& ctx() const { return ctx_; }
    const SpacePtr& source() const { return src_; }
    const SpacePtr& target() const { return dst_; }
    const RingPtr& ring() const { return ring_; }
    int total_parity() const { return parity_; }
    bool is_zero() const;

    /// Component at a dt-subset; zero map if absent.
    GradedMap component(std::uint32_t mask) const;
    const std::map<std::uint32_t, GradedMap>& components() const { return comps_; }
    void set_component(std::uint32_t mask, GradedMap m);
    void add_component(std::uint32_t mask, const GradedMap& m);

    FormOp operator-() const;
    FormOp& operator+=(const FormOp& o);
    FormOp& operator-=(const FormOp& o);
    friend FormOp operator+(FormOp a, const FormOp& b) { return a += b; }
    friend FormOp operator-(FormOp a, const FormOp& b) { return a -= b; }
    friend bool operator==(const FormOp& a, const FormOp& b);
    friend bool operator!=(const FormOp& a, const FormOp& b) { return !(a == b); }

    FormOp scaled(const Series& c) const;
    FormOp scaled(const Scalar& c) const;

    /// Keep only components of form degree == k.
    FormOp degree_part(int k) const;
    int max_degree() const;

    std::string str() const;

  private:
    FormCtxPtr ctx_;
    SpacePtr src_, dst_;
    int parity_ = 0;
    RingPtr ring_;
    std::map<std::uint32_t, GradedMap> comps_;
};

/// Operator product with the dt's collected to the left (Koszul: the dt block
/// of the right factor crosses the left factor's operator part).
FormOp compose(const FormOp& a, const FormOp& b);
/// Graded tensor product (used for multi-edge amplitudes).
FormOp tensor(const FormOp& a, const FormOp& b);
/// Exterior derivative d = sum_i dt_i d/dt_i with each direction's rule.
FormOp d(const FormOp& f);
/// Induced differential [Q, -] with the dt-crossing sign: Q dt_S = (-1)^{|S|} dt_S Q.
FormOp ad_q(const GradedMap& Q, const FormOp& f);
/// {A, B} in the form algebra, A a plain graded map.
FormOp supercommutator(const GradedMap& a, const FormOp& b);

/// Sign of merging two disjoint sorted dt-subsets (left-to-right wedge).
int merge_sign(std::uint32_t left, std::uint32_t right);

} // namespace exalg
