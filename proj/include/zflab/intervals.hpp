#pragma once

// Intervals of rationals, the midpoint-style choice function on them, and the
// distance-from-chosen-point order with that point as least element.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "zflab/orders.hpp"
#include "zflab/random.hpp"

namespace zflab {

using Rational = boost::rational<std::int64_t>;

// `-`? digits (`/` digits)?
Rational parse_rational(std::string_view text);  // throws ParseError
std::string to_string(const Rational& r);

// Unvalidated endpoints; an absent value is an infinite end.
struct IntervalBounds {
  std::optional<Rational> lo;
  bool lo_closed = false;
  std::optional<Rational> hi;
  bool hi_closed = false;
};

class Interval {
 public:
  // Throws EmptyInterval for lo > hi or a non-closed lo = hi, and
  // InvalidArgument for a closed infinite end.
  explicit Interval(const IntervalBounds& b);

  static Interval full_line() { return Interval(IntervalBounds{}); }
  static Interval closed(Rational lo, Rational hi) { return Interval({lo, true, hi, true}); }
  static Interval open(Rational lo, Rational hi) { return Interval({lo, false, hi, false}); }

  const std::optional<Rational>& lo() const { return b_.lo; }
  const std::optional<Rational>& hi() const { return b_.hi; }
  bool lo_closed() const { return b_.lo_closed; }
  bool hi_closed() const { return b_.hi_closed; }

  bool contains(const Rational& x) const;
  // e.g. "[1,3]", "(-inf,5]", "(-inf,+inf)"
  std::string to_string() const;

 private:
  IntervalBounds b_;
};

// ('('|'[') (rat|'-inf') ',' (rat|'+inf') (')'|']'). Throws ParseError,
// EmptyInterval or InvalidArgument.
Interval parse_interval(std::string_view text);

// 0 on the full line, (lo+hi)/2 when both ends are finite, hi−1 when only
// the upper end is finite, lo+1 when only the lower end is.
Rational choice_value(const Interval& i);

// The separating predicate: x is the chosen point of I.
bool phi2_holds(const Interval& i, const Rational& x);

// x R y ⟺ |x−a*| ≤ |y−a*| ∧ (|x−a*| ≠ |y−a*| ∨ x ≤ y)
bool pol_compare(const Rational& a_star, const Rational& x, const Rational& y);

struct SampleReport {
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool total = false;
  std::optional<Rational> least;
  std::vector<Rational> points;  // the sample plus a*, ascending
};

// Relation induced by pol_compare on the sample together with a*. Throws
// SampleOutsideInterval.
SampleReport sample_check_pol(const Interval& i, std::vector<Rational> sample);
// All four clauses hold and the least point is choice_value(i).
bool is_pol_with_chosen_least(const SampleReport& r, const Interval& i);

std::vector<Rational> hyper_choice(std::span<const Interval> components);
// Validates each component first; EmptyInterval carries the failing index.
std::vector<Rational> hyper_choice(std::span<const IntervalBounds> components);

// Random interval with endpoints on the grid k/den, k ∈ [-10·den, 10·den],
// den ∈ {1,2,3,4}; each end infinite with probability 1/5.
Interval random_interval(Rng& rng);
// Up to `max_size` distinct points of `i`.
std::vector<Rational> random_sample(const Interval& i, std::size_t max_size, Rng& rng);

}  // namespace zflab
