#pragma once

#include "circlegraph/rational.hpp"

#include <functional>
#include <utility>

namespace circlegraph {

/// A point of the unit circle, parametrized by [0, 1) with 0 and 1 identified.
/// Exact: rational points only.
class CirclePoint {
public:
  CirclePoint() = default;
  /// Accepts values in [0, 1]; 1 is stored as 0.
  explicit CirclePoint(const Rational& value);
  CirclePoint(long num, long den) : CirclePoint(Rational(num, den)) {}

  /// Reduces any rational into [0, 1).
  static CirclePoint wrap(const Rational& value);
  static CirclePoint parse(std::string_view text);

  const Rational& value() const { return value_; }
  std::string str() const { return value_.str(); }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend auto operator<=>(const CirclePoint&, const CirclePoint&) = default;

private:
  Rational value_;
};

using PointPair = std::pair<CirclePoint, CirclePoint>;

/// True iff a, b, c are pairwise distinct and b is met strictly before c when
/// walking counterclockwise from a.
bool cyclic_between(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c);

/// Crossing criterion for two point pairs. Throws std::invalid_argument if a
/// pair repeats a point. Pairs sharing a point never interleave.
bool interleaves(const PointPair& p, const PointPair& q);

/// Midpoint of the counterclockwise arc from a to b. Throws on a == b.
CirclePoint insert_between(const CirclePoint& a, const CirclePoint& b);

/// Reflection fixing s and t that maps the counterclockwise arc (s, t) onto itself.
CirclePoint reflect_in_arc(const CirclePoint& s, const CirclePoint& t, const CirclePoint& x);

}  // namespace circlegraph

template <>
struct std::hash<circlegraph::CirclePoint> {
  std::size_t operator()(const circlegraph::CirclePoint& p) const noexcept {
    return std::hash<std::string>{}(p.str());
  }
};
