#include "fairdiv/cake.hpp"

#include <algorithm>
#include <string>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

void check_unit_range(const Rational& lo, const Rational& hi) {
  if (lo < 0 || hi > 1 || lo > hi) {
    throw FairDivError(Errc::kBadRange, "interval [" + lo.str() + ", " + hi.str() + ") not in [0,1]");
  }
}

// Sorted, merged union of already interior-disjoint interval lists.
std::vector<Interval> merge_sorted(std::vector<Interval> ivs) {
  std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (auto& iv : ivs) {
    if (iv.empty()) continue;
    if (!out.empty() && out.back().hi > iv.lo) {
      throw FairDivError(Errc::kOverlapError, "intervals [" + out.back().lo.str() + ", " +
                                                  out.back().hi.str() + ") and [" + iv.lo.str() +
                                                  ", " + iv.hi.str() + ") overlap");
    }
    if (!out.empty() && out.back().hi == iv.lo) {
      out.back().hi = std::move(iv.hi);
    } else {
      out.push_back(std::move(iv));
    }
  }
  return out;
}

}  // namespace

Piece::Piece(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) check_unit_range(iv.lo, iv.hi);
  intervals_ = merge_sorted(std::move(intervals));
}

Piece Piece::interval(const Rational& lo, const Rational& hi) {
  return Piece({Interval{lo, hi}});
}

Rational measure(const Piece& p) {
  Rational total;
  for (const auto& iv : p.intervals()) total += iv.measure();
  return total;
}

bool interior_disjoint(const Piece& a, const Piece& b) {
  return piece_intersection(a, b).empty();
}

Piece piece_union(const Piece& a, const Piece& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return Piece(std::move(all));
}

Piece piece_intersection(const Piece& a, const Piece& b) {
  std::vector<Interval> out;
  const auto& x = a.intervals();
  const auto& y = b.intervals();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const Rational& lo = max(x[i].lo, y[j].lo);
    const Rational& hi = min(x[i].hi, y[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return Piece(std::move(out));
}

Piece piece_difference(const Piece& a, const Piece& b) {
  std::vector<Interval> out;
  const auto& cuts = b.intervals();
  std::size_t j = 0;
  for (const auto& iv : a.intervals()) {
    Rational cursor = iv.lo;
    while (j < cuts.size() && cuts[j].hi <= cursor) ++j;
    std::size_t k = j;
    while (k < cuts.size() && cuts[k].lo < iv.hi) {
      if (cursor < cuts[k].lo) out.push_back({cursor, cuts[k].lo});
      cursor = max(cursor, cuts[k].hi);
      ++k;
    }
    if (cursor < iv.hi) out.push_back({cursor, iv.hi});
  }
  return Piece(std::move(out));
}

Valuation::Valuation(std::vector<Rational> breakpoints, std::vector<Rational> densities)
    : breakpoints_(std::move(breakpoints)), densities_(std::move(densities)) {
  if (breakpoints_.size() < 2 || densities_.size() + 1 != breakpoints_.size()) {
    throw FairDivError(Errc::kInvalidArgument, "valuation needs m+1 breakpoints for m densities");
  }
  if (breakpoints_.front() != 0 || breakpoints_.back() != 1) {
    throw FairDivError(Errc::kInvalidArgument, "breakpoints must start at 0 and end at 1");
  }
  Rational total;
  for (std::size_t r = 0; r < densities_.size(); ++r) {
    if (!(breakpoints_[r] < breakpoints_[r + 1])) {
      throw FairDivError(Errc::kInvalidArgument, "breakpoints must be strictly increasing");
    }
    if (densities_[r] < 0) throw FairDivError(Errc::kInvalidArgument, "negative density");
    total += densities_[r] * (breakpoints_[r + 1] - breakpoints_[r]);
  }
  if (total != 1) {
    throw FairDivError(Errc::kInvalidArgument, "valuation integrates to " + total.str() + ", not 1");
  }
}

Valuation Valuation::uniform() { return Valuation({0, 1}, {1}); }

Valuation Valuation::from_segment_values(std::vector<Rational> breakpoints,
                                         std::span<const Rational> values) {
  if (breakpoints.size() != values.size() + 1) {
    throw FairDivError(Errc::kInvalidArgument, "valuation needs m+1 breakpoints for m values");
  }
  std::vector<Rational> densities;
  densities.reserve(values.size());
  for (std::size_t r = 0; r < values.size(); ++r) {
    const Rational len = breakpoints[r + 1] - breakpoints[r];
    if (len.sign() <= 0) {
      throw FairDivError(Errc::kInvalidArgument, "breakpoints must be strictly increasing");
    }
    densities.push_back(values[r] / len);
  }
  return Valuation(std::move(breakpoints), std::move(densities));
}

Valuation Valuation::from_piece_values(std::span<const Piece> pieces,
                                       std::span<const Rational> values) {
  if (pieces.size() != values.size()) {
    throw FairDivError(Errc::kSizeMismatch, "one value per piece required");
  }
  struct Segment {
    Interval iv;
    Rational density;
  };
  std::vector<Segment> segments;
  for (std::size_t r = 0; r < pieces.size(); ++r) {
    const Rational mu = measure(pieces[r]);
    if (mu.is_zero()) {
      if (!values[r].is_zero()) {
        throw FairDivError(Errc::kZeroMeasurePiece,
                           "piece " + std::to_string(r) + " has zero measure but positive value");
      }
      continue;
    }
    const Rational density = values[r] / mu;
    for (const auto& iv : pieces[r].intervals()) segments.push_back({iv, density});
  }
  std::sort(segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) { return a.iv.lo < b.iv.lo; });
  std::vector<Rational> breakpoints{0};
  std::vector<Rational> densities;
  for (const auto& s : segments) {
    if (s.iv.lo != breakpoints.back()) {
      throw FairDivError(Errc::kInvalidArgument, "pieces must partition the cake");
    }
    if (!densities.empty() && densities.back() == s.density) {
      breakpoints.back() = s.iv.hi;
    } else {
      densities.push_back(s.density);
      breakpoints.push_back(s.iv.hi);
    }
  }
  if (breakpoints.back() != 1) {
    throw FairDivError(Errc::kInvalidArgument, "pieces must partition the cake");
  }
  return Valuation(std::move(breakpoints), std::move(densities));
}

const Rational& Valuation::density_at(const Rational& x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  std::size_t r = static_cast<std::size_t>(it - breakpoints_.begin());
  r = r == 0 ? 0 : r - 1;
  return densities_[std::min(r, densities_.size() - 1)];
}

Rational value(const Valuation& v, const Rational& lo, const Rational& hi) {
  check_unit_range(lo, hi);
  const auto& bp = v.breakpoints();
  const auto& dens = v.densities();
  Rational total;
  if (lo == hi) return total;
  auto it = std::upper_bound(bp.begin(), bp.end(), lo);
  std::size_t r = static_cast<std::size_t>(it - bp.begin()) - 1;
  for (; r < dens.size() && bp[r] < hi; ++r) {
    if (dens[r].is_zero()) continue;
    total += dens[r] * (min(bp[r + 1], hi) - max(bp[r], lo));
  }
  return total;
}

Rational value(const Valuation& v, const Interval& iv) { return value(v, iv.lo, iv.hi); }

Rational value(const Valuation& v, const Piece& p) {
  Rational total;
  for (const auto& iv : p.intervals()) total += value(v, iv);
  return total;
}

Rational cut_left(const Valuation& v, const Rational& y, const Rational& alpha) {
  if (y < 0 || y > 1) throw FairDivError(Errc::kBadRange, "cut endpoint " + y.str() + " outside [0,1]");
  if (alpha < 0) throw FairDivError(Errc::kBadRange, "negative cut value " + alpha.str());
  if (alpha.is_zero()) return y;
  const auto& bp = v.breakpoints();
  const auto& dens = v.densities();
  // Last segment whose left end lies strictly below y.
  auto it = std::lower_bound(bp.begin(), bp.end(), y);
  std::size_t r = static_cast<std::size_t>(it - bp.begin());
  Rational acc;
  while (r > 0) {
    --r;
    const Rational seg_hi = min(bp[r + 1], y);
    const Rational mass = dens[r] * (seg_hi - bp[r]);
    if (dens[r].sign() > 0 && acc + mass >= alpha) {
      return seg_hi - (alpha - acc) / dens[r];
    }
    acc += mass;
  }
  throw FairDivError(Errc::kAlphaTooLarge,
                     "value " + alpha.str() + " exceeds " + acc.str() + " available left of " + y.str());
}

std::vector<Piece> equal_partition(const Valuation& v, std::size_t n) {
  if (n == 0) throw FairDivError(Errc::kInvalidArgument, "cannot partition into zero pieces");
  const Rational share(1, static_cast<std::int64_t>(n));
  std::vector<Rational> bounds{1};
  for (std::size_t r = 1; r < n; ++r) bounds.push_back(cut_left(v, bounds.back(), share));
  bounds.push_back(0);
  std::reverse(bounds.begin(), bounds.end());
  std::vector<Piece> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) out.push_back(Piece::interval(bounds[r], bounds[r + 1]));
  return out;
}

namespace {

// Checks that the given pieces are interior-disjoint and cover [0,1].
void check_partition_of_cake(const std::vector<const Piece*>& pieces) {
  std::vector<Interval> all;
  for (const Piece* p : pieces) all.insert(all.end(), p->intervals().begin(), p->intervals().end());
  std::sort(all.begin(), all.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Rational cursor;
  for (const auto& iv : all) {
    if (iv.lo < cursor) {
      throw FairDivError(Errc::kOverlapError, "pieces overlap at " + iv.lo.str());
    }
    if (iv.lo > cursor) {
      throw FairDivError(Errc::kInvalidArgument, "cake not covered on [" + cursor.str() + ", " + iv.lo.str() + ")");
    }
    cursor = iv.hi;
  }
  if (cursor != 1) {
    throw FairDivError(Errc::kInvalidArgument, "cake not covered on [" + cursor.str() + ", 1]");
  }
}

}  // namespace

Allocation::Allocation(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw FairDivError(Errc::kInvalidArgument, "allocation needs at least one agent");
  std::vector<const Piece*> refs;
  for (const auto& p : pieces_) refs.push_back(&p);
  check_partition_of_cake(refs);
}

PartialAllocation::PartialAllocation(std::vector<Piece> pieces, Piece residue)
    : pieces_(std::move(pieces)), residue_(std::move(residue)) {
  if (pieces_.empty()) throw FairDivError(Errc::kInvalidArgument, "allocation needs at least one agent");
  std::vector<const Piece*> refs{&residue_};
  for (const auto& p : pieces_) refs.push_back(&p);
  check_partition_of_cake(refs);
}

}  // namespace fairdiv
