#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "modspace/errors.hpp"
#include "modspace/indices.hpp"

namespace modspace {

using Coord = std::int64_t;
using LatticePoint = std::vector<Coord>;

Coord norm_inf(const LatticePoint& k);

/// <k> = (1 + |k|^2)^{1/2}
double bracket(const LatticePoint& k);

/// Power weight k -> <k>^s.
struct PowerWeight {
    Rational s{0};
    double operator()(const LatticePoint& k) const;
};

/// Finitely supported nonnegative function on Z^n. Zeros are not stored and
/// negative values are rejected; the support radius (max |k|_inf) is tracked.
class Sequence {
  public:
    explicit Sequence(Dimension dim) : dim_(dim) {}
    Sequence(Dimension dim, std::map<LatticePoint, double> entries);

    Dimension dim() const { return dim_; }
    const std::map<LatticePoint, double>& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    Coord support_radius() const { return radius_; }

    /// Inserts (adds) value at k; v = 0 is a no-op, v < 0 throws.
    void add(const LatticePoint& k, double v);
    double at(const LatticePoint& k) const;  // 0 off-support

  private:
    Dimension dim_;
    std::map<LatticePoint, double> entries_;
    Coord radius_ = 0;
};

Sequence delta(Dimension dim, const LatticePoint& k);
Sequence delta_origin(Dimension dim);

/// (sum_k |a_k|^p <k>^{sp})^{1/p}; weighted sup for p = inf; 0 when empty.
double weighted_norm(const Sequence& a, const Exponent& p, const PowerWeight& w);

Sequence convolve(const Sequence& a, const Sequence& b);
Sequence pointwise_product(const Sequence& a, const Sequence& b);

/// CSV exchange: header "k1,...,kn,value", one support point per row.
void write_csv(std::ostream& os, const Sequence& a);
Sequence read_sequence_csv(std::istream& is);

}  // namespace modspace
