#pragma once

#include "exalg/series.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace exalg {

struct ParityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite-dimensional Z/2-graded space with an ordered basis. Degrees are
/// optional extra bookkeeping; when present, parity must equal degree mod 2.
class GradedSpace {
  public:
    GradedSpace(std::vector<std::string> labels, std::vector<int> parity,
                std::vector<int> degree = {});

    static std::shared_ptr<const GradedSpace> make(std::vector<std::string> labels,
                                                   std::vector<int> parity,
                                                   std::vector<int> degree = {}) {
        return std::make_shared<const GradedSpace>(std::move(labels), std::move(parity),
                                                   std::move(degree));
    }

    std::size_t dim() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    int parity(std::size_t i) const { return parity_[i]; }
    bool has_degree() const { return !degree_.empty(); }
    int degree(std::size_t i) const { return degree_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool same(const GradedSpace& o) const {
        return labels_ == o.labels_ && parity_ == o.parity_ && degree_ == o.degree_;
    }

  private:
    std::vector<std::string> labels_;
    std::vector<int> parity_;
    std::vector<int> degree_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

/// Tensor product space; associativity is strict (labels flatten).
SpacePtr tensor_space(const SpacePtr& a, const SpacePtr& b);
SpacePtr tensor_power(const SpacePtr& v, int n);

/// Parity-homogeneous linear map with Series entries; a nonzero entry (r,c)
/// requires parity(target r) = parity(source c) + parity(map) mod 2.
class GradedMap {
  public:
    GradedMap() = default;
    GradedMap(SpacePtr src, SpacePtr dst, int parity, RingPtr ring);

    static GradedMap zero(SpacePtr src, SpacePtr dst, int parity, RingPtr ring) {
        return GradedMap(std::move(src), std::move(dst), parity, std::move(ring));
    }
    static GradedMap identity(const SpacePtr& v, const RingPtr& ring);
    /// Entry list {row, col, value} with parity checking.
    static GradedMap from_entries(SpacePtr src, SpacePtr dst, int parity, RingPtr ring,
                                  const std::vector<std::tuple<std::size_t, std::size_t, Series>>& entries);
    static GradedMap from_scalar_rows(SpacePtr src, SpacePtr dst, int parity, RingPtr ring,
                                      const std::vector<std::vector<Scalar>>& rows);

    const SpacePtr& source() const { return src_; }
    const SpacePtr& target() const { return dst_; }
    int parity() const { return parity_; }
    const RingPtr& ring() const { return ring_; }

    const Series& at(std::size_t r, std::size_t c) const { return mat_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Series v);
    void add_to(std::size_t r, std::size_t c, const Series& v);

    bool is_zero() const;
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GradedMap operator-() const;
    GradedMap& operator+=(const GradedMap& o);
    GradedMap& operator-=(const GradedMap& o);
    friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
    friend GradedMap operator-(GradedMap a, const GradedMap& b) { return a -= b; }
    friend bool operator==(const GradedMap& a, const GradedMap& b);
    friend bool operator!=(const GradedMap& a, const GradedMap& b) { return !(a == b); }

    GradedMap scaled(const Series& c) const;
    GradedMap scaled(const Scalar& c) const;
    /// Entry-wise map.
    GradedMap transform(const std::function<Series(const Series&)>& f) const;

    std::vector<Series> apply(const std::vector<Series>& v) const;
    /// Column as a vector in the target space.
    std::vector<Series> column(std::size_t c) const;

    std::string str() const;

  private:
    SpacePtr src_, dst_;
    int parity_ = 0;
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Series> mat_;
};

/// A o B with Koszul-free plain composition (signs live in tensor/permutation).
GradedMap compose(const GradedMap& a, const GradedMap& b);
/// Graded tensor product: (A (x) B)(v (x) w) = (-1)^{|B||v|} A v (x) B w.
GradedMap tensor(const GradedMap& a, const GradedMap& b);
/// {A,B} = AB - (-1)^{|A||B|} BA.
GradedMap supercommutator(const GradedMap& a, const GradedMap& b);
/// Sum_{k<=order} (-var A)^k / k!; A must be even.
GradedMap exp_truncated(const GradedMap& a, const std::string& var, int order);

/// Koszul sign produced by reordering (v_{s(1)},...,v_{s(n)}) back into
/// (v_1,...,v_n), for factors of the given parities.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& parities);
/// P_s (v_1 (x) ... (x) v_n) = sign * v_{s(1)} (x) ... (x) v_{s(n)}.
GradedMap permutation_op(const SpacePtr& v, const RingPtr& ring, const std::vector<int>& perm);

/// Multilinear operation: a graded map from the n-fold tensor power of a
/// space to a (possibly different) space.
struct MultiOp {
    int arity = 0;
    SpacePtr slot;  // the space each input slot ranges over
    GradedMap map;  // source = tensor_power(slot, arity)

    MultiOp() = default;
    MultiOp(int n, SpacePtr s, GradedMap m) : arity(n), slot(std::move(s)), map(std::move(m)) {}
    static MultiOp zero(int n, const SpacePtr& slot, const SpacePtr& dst, int parity,
                        const RingPtr& ring);
    int parity() const { return map.parity(); }
    bool is_zero() const { return map.is_zero(); }
};

/// Apply an input permutation with Koszul signs: result(x_1..x_n) =
/// sign * op(x_{s(1)},...,x_{s(n)}).
MultiOp permuted(const MultiOp& op, const std::vector<int>& perm);
/// Average ... no: full graded symmetrization Sum_s permuted(op, s) / n!.
MultiOp symmetrized(const MultiOp& op);
bool is_symmetric(const MultiOp& op);

/// Tuple <-> flat index conversions for tensor powers.
std::size_t flat_index(const std::vector<std::size_t>& tuple, std::size_t dim);
std::vector<std::size_t> tuple_index(std::size_t flat, std::size_t dim, int arity);

/// Entry-wise Series::reringed.
GradedMap reringed(const GradedMap& m, const RingPtr& target);

} // namespace exalg
