#include "circlegraph/cyclic.hpp"

#include <doctest.h>

#include <random>

using namespace circlegraph;

namespace {

CirclePoint pt(long n, long d) { return CirclePoint(n, d); }

// Random point with a denominator up to 2^64.
CirclePoint random_point(gmp_randclass& rng) {
  mpz_class den = rng.get_z_bits(64) + 1;
  mpz_class num = rng.get_z_range(den);
  return CirclePoint(Rational(num, den));
}

// Linear-order interleaving by cross multiplication, independent of the
// cyclic predicates.
bool oracle_interleaves(const PointPair& p, const PointPair& q) {
  auto less = [](const CirclePoint& a, const CirclePoint& b) {
    const mpq_class& x = a.value().raw();
    const mpq_class& y = b.value().raw();
    return mpz_class(x.get_num() * y.get_den()) < mpz_class(y.get_num() * x.get_den());
  };
  auto eq = [&](const CirclePoint& a, const CirclePoint& b) { return !less(a, b) && !less(b, a); };
  if (eq(p.first, q.first) || eq(p.first, q.second) || eq(p.second, q.first) || eq(p.second, q.second)) return false;
  CirclePoint lo = p.first, hi = p.second;
  if (less(hi, lo)) std::swap(lo, hi);
  auto inside = [&](const CirclePoint& x) { return less(lo, x) && less(x, hi); };
  return inside(q.first) != inside(q.second);
}

CirclePoint rotate(const CirclePoint& p, const Rational& r) { return CirclePoint::wrap(p.value() + r); }
CirclePoint reflect(const CirclePoint& p, const Rational& r) { return CirclePoint::wrap(r - p.value()); }

}  // namespace

TEST_CASE("rational text is parsed and emitted reduced") {
  CHECK(Rational::parse("2/4").str() == "1/2");
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK(Rational::parse("12345678901234567890123/2").numerator() == mpz_class("12345678901234567890123"));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("circle points live in [0, 1) with 1 identified with 0") {
  CHECK(CirclePoint(Rational(1)) == pt(0, 1));
  CHECK(CirclePoint::parse("1").str() == "0");
  CHECK_THROWS(CirclePoint(Rational(3, 2)));
  CHECK_THROWS_AS(CirclePoint::parse("-1/3"), ParseError);
  CHECK(CirclePoint::wrap(Rational(-1, 4)) == pt(3, 4));
  CHECK(CirclePoint::wrap(Rational(9, 4)) == pt(1, 4));
}

TEST_CASE("cyclic_between") {
  CHECK(cyclic_between(pt(0, 1), pt(1, 4), pt(1, 2)));
  CHECK(cyclic_between(pt(1, 2), pt(3, 4), pt(1, 4)));
  CHECK_FALSE(cyclic_between(pt(0, 1), pt(0, 1), pt(1, 2)));
  CHECK_FALSE(cyclic_between(pt(0, 1), pt(1, 2), pt(1, 4)));
}

TEST_CASE("interleaves") {
  CHECK(interleaves({pt(0, 1), pt(1, 2)}, {pt(1, 4), pt(3, 4)}));
  CHECK_FALSE(interleaves({pt(0, 1), pt(1, 4)}, {pt(1, 2), pt(3, 4)}));
  CHECK_FALSE(interleaves({pt(0, 1), pt(1, 2)}, {pt(1, 2), pt(3, 4)}));
  CHECK_THROWS_AS(interleaves({pt(1, 3), pt(1, 3)}, {pt(1, 2), pt(3, 4)}), std::invalid_argument);
}

TEST_CASE("insert_between takes the midpoint of the counterclockwise arc") {
  CHECK(insert_between(pt(1, 4), pt(1, 2)) == pt(3, 8));
  CHECK(insert_between(pt(3, 4), pt(1, 4)) == pt(0, 1));
  CHECK_THROWS_AS(insert_between(pt(0, 1), pt(0, 1)), std::invalid_argument);
}

TEST_CASE("reflection in an arc fixes its ends and is an involution") {
  const auto s = pt(3, 4), t = pt(1, 4);
  CHECK(reflect_in_arc(s, t, s) == t);
  CHECK(reflect_in_arc(s, t, pt(7, 8)) == pt(1, 8));
  CHECK(reflect_in_arc(s, t, reflect_in_arc(s, t, pt(1, 16))) == pt(1, 16));
}

TEST_CASE("cyclic predicates: randomized properties") {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(42);
  for (int trial = 0; trial < 2000; ++trial) {
    const CirclePoint a = random_point(rng), b = random_point(rng), c = random_point(rng), d = random_point(rng);
    const Rational r = random_point(rng).value();
    INFO("trial " << trial);

    if (a == b || c == d) continue;
    const bool x = interleaves({a, b}, {c, d});
    CHECK(x == oracle_interleaves({a, b}, {c, d}));
    CHECK(x == interleaves({c, d}, {a, b}));
    CHECK(x == interleaves({b, a}, {d, c}));
    CHECK(x == interleaves({rotate(a, r), rotate(b, r)}, {rotate(c, r), rotate(d, r)}));
    CHECK(x == interleaves({reflect(a, r), reflect(b, r)}, {reflect(c, r), reflect(d, r)}));

    if (a == c || b == c) continue;
    CHECK(cyclic_between(a, b, c) == cyclic_between(b, c, a));
    CHECK(cyclic_between(a, b, c) == !cyclic_between(a, c, b));

    const CirclePoint m = insert_between(a, b);
    CHECK(cyclic_between(a, m, b));
    CHECK(insert_between(a, b) == m);
  }
}
