#pragma once

#include "exalg/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace exalg {

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Formal variables come in three flavours:
///  - Bounded: formal deformation parameters (eps, t_k, ...); monomials whose
///    total degree across all bounded variables exceeds the ring cutoff are
///    dropped eagerly (epsilon-adic truncation).
///  - Free: auxiliary symbols like u = e^{-t}; no degree bound is enforced
///    (degrees are bounded structurally by the expressions that arise).
///  - Laurent: the single variable allowed negative exponents, within a fixed
///    window; leaving the window is an error, never a silent truncation.
enum class VarKind { Bounded, Free, Laurent };

struct VarSpec {
    std::string name;
    VarKind kind = VarKind::Bounded;
    friend bool operator==(const VarSpec&, const VarSpec&) = default;
};

class SeriesRing {
  public:
    SeriesRing(std::vector<VarSpec> vars, int max_total, int z_min = 0, int z_max = 0);

    static std::shared_ptr<const SeriesRing> make(std::vector<VarSpec> vars, int max_total,
                                                  int z_min = 0, int z_max = 0) {
        return std::make_shared<const SeriesRing>(std::move(vars), max_total, z_min, z_max);
    }
    /// Ring with a single group of bounded variables.
    static std::shared_ptr<const SeriesRing> bounded(std::vector<std::string> names, int max_total);
    /// The scalar ring (no variables).
    static std::shared_ptr<const SeriesRing> trivial();

    const std::vector<VarSpec>& vars() const { return vars_; }
    int max_total() const { return max_total_; }
    int z_min() const { return z_min_; }
    int z_max() const { return z_max_; }
    std::size_t arity() const { return vars_.size(); }
    int index_of(const std::string& name) const;
    std::optional<int> laurent_index() const { return laurent_; }

    bool same(const SeriesRing& o) const;

  private:
    std::vector<VarSpec> vars_;
    int max_total_ = 0;
    int z_min_ = 0, z_max_ = 0;
    std::optional<int> laurent_;
};

using RingPtr = std::shared_ptr<const SeriesRing>;

/// Truncated formal series: finite map exponent-vector -> Scalar, no stored
/// zero coefficients, all stored monomials within the ring's truncation.
class Series {
  public:
    Series() : ring_(SeriesRing::trivial()) {}
    explicit Series(RingPtr ring) : ring_(std::move(ring)) {}
    Series(RingPtr ring, Scalar c);

    static Series constant(RingPtr ring, Scalar c) { return Series(std::move(ring), std::move(c)); }
    static Series var(RingPtr ring, const std::string& name, int power = 1);
    static Series monomial(RingPtr ring, std::vector<int> exps, Scalar c);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial.
    Scalar constant_term() const;
    /// Coefficient of an explicit exponent vector.
    Scalar coeff(const std::vector<int>& exps) const;
    const std::map<std::vector<int>, Scalar>& terms() const { return coeffs_; }

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series& operator*=(const Scalar& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Scalar& c) { return a *= c; }
    friend Series operator*(const Scalar& c, Series a) { return a *= c; }
    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// Formal partial derivative.
    Series derivative(const std::string& var) const;
    /// Substitute an exact value for a variable. Negative powers of the
    /// variable are an error when the value is zero.
    Series substitute(const std::string& var, const Scalar& value) const;
    /// Substitute a series (nonnegative powers only) for a variable.
    Series substitute_series(const std::string& var, const Series& value) const;
    /// Slice: the coefficient of var^k, as a series with that variable erased
    /// (exponent set to zero).
    Series slice(const std::string& var, int k) const;
    /// Multiply by var^k, window- and truncation-checked.
    Series shifted(const std::string& var, int k) const;
    /// \int_0^upper (this) d var : var^k dvar -> upper^{k+1}/(k+1). The
    /// integration variable must not appear in `upper`'s own exponents here.
    Series integrate(const std::string& var, const Series& upper) const;
    /// Largest total bounded degree present.
    int bounded_degree() const;
    /// Smallest total bounded degree present (or a negative value if zero).
    int bounded_order() const;
    /// Drop all monomials of total bounded degree > order.
    Series truncated(int order) const;

    std::string str() const;

    /// Rebuild over another ring, matching variables by name. A monomial
    /// using a variable absent from the target ring is an error.
    Series reringed(const RingPtr& target) const;

  private:
    void insert(std::vector<int> exps, Scalar c);
    void check_ring(const Series& o) const;

    RingPtr ring_;
    std::map<std::vector<int>, Scalar> coeffs_;
};

} // namespace exalg
