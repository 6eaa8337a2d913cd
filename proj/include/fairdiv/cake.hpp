#ifndef FAIRDIV_CAKE_HPP_
#define FAIRDIV_CAKE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

// Subinterval [lo, hi) of the cake. The right end 1 is closed by convention;
// single points carry no value so the convention never changes a value.
struct Interval {
  Rational lo;
  Rational hi;

  Rational measure() const { return hi - lo; }
  bool empty() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of interior-disjoint intervals, kept sorted with touching
// intervals merged and empty intervals dropped.
class Piece {
 public:
  Piece() = default;
  // Throws kBadRange for endpoints outside [0,1] or lo > hi, and
  // kOverlapError when two intervals share interior points.
  explicit Piece(std::vector<Interval> intervals);

  static Piece interval(const Rational& lo, const Rational& hi);
  static Piece whole() { return interval(0, 1); }

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }

  friend bool operator==(const Piece&, const Piece&) = default;

 private:
  std::vector<Interval> intervals_;
};

Rational measure(const Piece& p);
bool interior_disjoint(const Piece& a, const Piece& b);
// Throws kOverlapError if a and b overlap in more than boundary points.
Piece piece_union(const Piece& a, const Piece& b);
Piece piece_difference(const Piece& a, const Piece& b);
Piece piece_intersection(const Piece& a, const Piece& b);

// Piecewise-constant density on [0,1] that integrates to 1.
class Valuation {
 public:
  // breakpoints: 0 = b_0 < b_1 < ... < b_m = 1; densities: m nonnegative
  // values. Throws kInvalidArgument if any invariant fails.
  Valuation(std::vector<Rational> breakpoints, std::vector<Rational> densities);

  static Valuation uniform();
  // Same as the constructor but each segment is given by its total value
  // instead of its density.
  static Valuation from_segment_values(std::vector<Rational> breakpoints,
                                       std::span<const Rational> values);
  // Spreads values[r] uniformly over pieces[r]. The pieces must partition
  // the cake and carry positive measure wherever values[r] > 0.
  static Valuation from_piece_values(std::span<const Piece> pieces,
                                     std::span<const Rational> values);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& densities() const { return densities_; }
  std::size_t segments() const { return densities_.size(); }

  // Density at point x, taking the segment [b_r, b_{r+1}) containing x.
  const Rational& density_at(const Rational& x) const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> densities_;
};

Rational value(const Valuation& v, const Rational& lo, const Rational& hi);
Rational value(const Valuation& v, const Interval& iv);
Rational value(const Valuation& v, const Piece& p);

// Maximum x with value(v, [x, y)) == alpha. Throws kAlphaTooLarge when
// alpha exceeds value(v, [0, y)) and kBadRange for alpha < 0 or y outside
// [0,1].
Rational cut_left(const Valuation& v, const Rational& y, const Rational& alpha);

// n contiguous pieces, left to right, each worth exactly 1/n under v. The
// boundaries come from n-1 successive cut_left calls starting at y = 1.
std::vector<Piece> equal_partition(const Valuation& v, std::size_t n);

// Pieces of a complete allocation, one per agent.
class Allocation {
 public:
  // Throws kOverlapError if pieces overlap and kInvalidArgument if they do
  // not cover the cake.
  explicit Allocation(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const Piece& operator[](std::size_t i) const { return pieces_[i]; }
  std::size_t size() const { return pieces_.size(); }

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<Piece> pieces_;
};

// Agent pieces plus the unallocated residue; together they cover the cake.
class PartialAllocation {
 public:
  PartialAllocation(std::vector<Piece> pieces, Piece residue);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const Piece& residue() const { return residue_; }
  std::size_t size() const { return pieces_.size(); }

  friend bool operator==(const PartialAllocation&, const PartialAllocation&) = default;

 private:
  std::vector<Piece> pieces_;
  Piece residue_;
};

}  // namespace fairdiv

#endif  // FAIRDIV_CAKE_HPP_
