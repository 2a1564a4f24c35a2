#include "circlegraph/cyclic.hpp"

namespace circlegraph {

namespace {

const Rational kOne{1};
const Rational kZero{0};

// Counterclockwise distance from a to b, in [0, 1).
Rational ccw_distance(const CirclePoint& a, const CirclePoint& b) {
  Rational d = b.value() - a.value();
  return d < kZero ? d + kOne : d;
}

}  // namespace

CirclePoint::CirclePoint(const Rational& value) : value_(value) {
  if (value < kZero || value > kOne)
    throw std::invalid_argument("circle point " + value.str() + " outside [0, 1]");
  if (value == kOne) value_ = kZero;
}

CirclePoint CirclePoint::wrap(const Rational& value) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), value.raw().get_num_mpz_t(), value.raw().get_den_mpz_t());
  return CirclePoint(value - Rational(fl, mpz_class(1)));
}

CirclePoint CirclePoint::parse(std::string_view text) {
  Rational r = Rational::parse(text);
  if (r < kZero || r > kOne) throw ParseError("circle point '" + std::string(text) + "' outside [0, 1]");
  return CirclePoint(r);
}

bool cyclic_between(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c) {
  if (a == b || b == c || a == c) return false;
  return ccw_distance(a, b) < ccw_distance(a, c);
}

bool interleaves(const PointPair& p, const PointPair& q) {
  if (p.first == p.second || q.first == q.second)
    throw std::invalid_argument("degenerate point pair");
  if (q.first == p.first || q.first == p.second || q.second == p.first || q.second == p.second)
    return false;
  return cyclic_between(p.first, q.first, p.second) != cyclic_between(p.first, q.second, p.second);
}

CirclePoint insert_between(const CirclePoint& a, const CirclePoint& b) {
  if (a == b) throw std::invalid_argument("insert_between: empty arc at " + a.str());
  Rational half(1, 2);
  return CirclePoint::wrap(a.value() + ccw_distance(a, b) * half);
}

CirclePoint reflect_in_arc(const CirclePoint& s, const CirclePoint& t, const CirclePoint& x) {
  return CirclePoint::wrap(s.value() + t.value() - x.value());
}

}  // namespace circlegraph
