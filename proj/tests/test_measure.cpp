#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fz/measure.hpp"
#include "oracles.hpp"

using namespace fz;

namespace {

Rat p3(long n) { return rat_pow(Rat(1, 3), n); }

PointMassMeasure synthetic(std::mt19937& rng, int max_atoms) {
  std::uniform_int_distribution<int> natoms(1, max_atoms);
  std::uniform_int_distribution<long long> wt(1, 3);
  std::vector<Rat> pos;
  int n = natoms(rng);
  for (int i = 0; i < n; ++i) pos.push_back(oracle::random_rat(rng, 729, Rat(0), Rat(1)));
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  PointMassMeasure m;
  for (const Rat& p : pos) {
    m.atoms.push_back(p);
    m.mass.push_back(wt(rng));
  }
  return m;
}

void check_against_oracle(const PointMassMeasure& m, const Rat& eta, const Alpha& alpha,
                          std::mt19937& rng, int n_random) {
  IntervalSet got = window_start_set(m, eta, alpha);
  for (const Rat& c : oracle::sweep_probes(m, eta, got, rng, n_random)) {
    oracle::WindowClass wc = oracle::classify_window(m, c, eta);
    bool expect = false;
    switch (alpha.kind) {
      case AlphaKind::MinusInf:
        expect = wc.cls == oracle::Cls::MinusInf;
        break;
      case AlphaKind::PlusInf:
        expect = wc.cls == oracle::Cls::PlusInf;
        break;
      case AlphaKind::Finite:
        expect = wc.cls == oracle::Cls::Finite && wc.k == alpha.k && alpha.eta == eta;
        break;
    }
    INFO("start ", rat_str(c), " eta ", rat_str(eta), " alpha ", alpha.str());
    CHECK(got.contains(c) == expect);
  }
}

}  // namespace

TEST_CASE("endpoint measure structure") {
  PointMassMeasure c = boundary_measure(make_cantor_string(3));
  CHECK(c.atoms.size() == 14);  // 7 disjoint intervals, no shared endpoints
  for (long long w : c.mass) CHECK(w == 1);
  CHECK(c.boundary.pieces.size() == 1);
  CHECK(c.zones.empty());

  PointMassMeasure r = boundary_measure(make_reordered_cantor(8));
  // 255 pairwise-adjacent intervals leave 256 distinct positions
  CHECK(r.atoms.size() == 256);
  long long total = 0;
  for (long long w : r.mass) total += w;
  CHECK(total == 2 * 255);
  CHECK(r.mass.front() == 1);  // leftmost realized endpoint
  CHECK(r.mass.back() == 1);   // the point 1
  CHECK(r.atoms.front() == rat_pow(Rat(2, 3), 8));
  CHECK(r.atoms.back() == Rat(1));

  PointMassMeasure p = boundary_measure(make_paired_cantor(8));
  CHECK(p.measure_of(Interval::point(Rat(25, 63))).count == 2);  // pair-shared endpoint
  CHECK(p.measure_of(Interval::point(Rat(4, 63))).count == 1);
  CHECK(p.measure_of(Interval::point(Rat(4, 7))).count == 1);
}

TEST_CASE("mass of explicit windows") {
  PointMassMeasure m = boundary_measure(make_cantor_string(8));

  MassValue v = m.measure_of(Interval::closed(Rat(1, 3), Rat(2, 3)));
  CHECK(!v.infinite);
  CHECK(v.count == 2);
  CHECK(m.measure_of(Interval::open(Rat(1, 3), Rat(2, 3))).count == 0);
  // interior of the top gap, pulled in a hair on both sides
  Rat eps(1, 1000000);
  CHECK(m.measure_of(Interval::closed(Rat(1, 3) + eps, Rat(2, 3) - eps)).count == 0);
  // a window meeting the attractor interior carries infinite mass
  CHECK(m.measure_of(Interval::closed(Rat(3, 10), Rat(2, 5))).infinite);
  CHECK(m.measure_of(Interval::closed(Rat(0), Rat(1, 3))).infinite);

  PointMassMeasure r = boundary_measure(make_reordered_cantor(8));
  CHECK(r.measure_of(Interval::closed(Rat(0), Rat(1, 9))).infinite);
  CHECK(r.measure_of(Interval::open(Rat(0), Rat(1, 9))).infinite);  // tail is inside
  CHECK(r.measure_of(Interval::closed(Rat(4, 9), Rat(5, 9))).count == 4);
  CHECK(r.measure_of(Interval::point(Rat(5, 9))).count == 2);

  PointMassMeasure a = boundary_measure(make_a_string(1, 10));
  CHECK(a.measure_of(Interval::closed(Rat(0), Rat(1, 20))).infinite);
  CHECK(a.measure_of(Interval::closed(Rat(1, 2), Rat(1))).count == 2);
}

TEST_CASE("regularity conventions") {
  PointMassMeasure m = boundary_measure(make_cantor_string(8));
  Alpha zero = regularity_of(m, Interval::closed(Rat(1, 3), Rat(1, 3) + Rat(1, 100)));
  CHECK(zero.kind == AlphaKind::Finite);
  CHECK(zero.k == 1);

  Alpha two = regularity_of(m, Interval::closed(Rat(1, 9), Rat(2, 9)));
  CHECK(two.kind == AlphaKind::Finite);
  CHECK(two.k == 2);
  CHECK(two.eta == Rat(1, 9));
  CHECK(two.value() == doctest::Approx(-std::log(2.0) / (2 * std::log(3.0))).epsilon(1e-14));

  CHECK(regularity_of(m, Interval::open(Rat(1, 3), Rat(2, 3))).kind == AlphaKind::PlusInf);
  CHECK(regularity_of(m, Interval::closed(Rat(0), Rat(1, 3))).kind == AlphaKind::MinusInf);
  CHECK_THROWS_AS(regularity_of(m, Interval::point(Rat(1, 3))), ValidationError);
}

TEST_CASE("regularity classes compare symbolically") {
  Alpha a = Alpha::finite(2, Rat(1, 9));
  CHECK(a.same_class(Alpha::finite(4, Rat(1, 81))));
  CHECK(a.same_class(Alpha::finite(8, Rat(1, 729))));
  CHECK(!a.same_class(Alpha::finite(2, Rat(1, 27))));
  CHECK(!a.same_class(Alpha::finite(3, Rat(1, 27))));
  CHECK(Alpha::finite(8, Rat(1, 27)).same_class(Alpha::finite(2, Rat(1, 3))));
  // k = 1 means regularity zero no matter the window length
  CHECK(Alpha::finite(1, Rat(1, 9)).same_class(Alpha::finite(1, Rat(1, 7))));
  CHECK(!Alpha::finite(1, Rat(1, 9)).same_class(Alpha::finite(2, Rat(1, 9))));
  CHECK(!Alpha::minus_inf().same_class(Alpha::plus_inf()));
  CHECK(Alpha::minus_inf().same_class(Alpha::minus_inf()));
  CHECK(Alpha::finite(2, Rat(1, 9)).value() == doctest::Approx(std::log(2.0) / std::log(1.0 / 9.0)));
}

TEST_CASE("window starts on the ternary string") {
  PointMassMeasure m = boundary_measure(make_cantor_string(8));
  Rat eta(1, 9);

  IntervalSet minus = window_start_set(m, eta, Alpha::minus_inf());
  // Exact-fit starts at 1/9 and 7/9 see two atoms, not infinitely many,
  // so the attractor-collar set is punctured there.
  IntervalSet expect_minus({Interval(Rat(0), Rat(1, 9), true, false),
                            Interval(Rat(1, 9), Rat(1, 3), false, false),
                            Interval(Rat(5, 9), Rat(7, 9), false, false),
                            Interval(Rat(7, 9), Rat(8, 9), false, true)});
  CHECK(minus == expect_minus);

  IntervalSet plus = window_start_set(m, eta, Alpha::plus_inf());
  CHECK(plus == IntervalSet({Interval::open(Rat(1, 3), Rat(5, 9))}));

  IntervalSet one = window_start_set(m, eta, Alpha::finite(1, eta));
  CHECK(one == IntervalSet({Interval::point(Rat(1, 3)), Interval::point(Rat(5, 9))}));

  IntervalSet two = window_start_set(m, eta, Alpha::finite(2, eta));
  CHECK(two == IntervalSet({Interval::point(Rat(1, 9)), Interval::point(Rat(7, 9))}));

  CHECK(window_start_set(m, eta, Alpha::finite(3, eta)).empty());
  CHECK(window_start_set(m, eta, Alpha::finite(5, eta)).empty());

  // the same regularity addressed through an equivalent (k, eta) pair
  CHECK(window_start_set(m, eta, Alpha::finite(4, Rat(1, 81))) == two);
  // realizability demands k0^t integral: log(1/27)/log(1/9) = 3/2 makes none
  CHECK(window_start_set(m, Rat(1, 27), Alpha::finite(2, Rat(1, 9))).empty());
  // incommensurable window lengths can never match
  CHECK(window_start_set(m, Rat(1, 8), Alpha::finite(2, Rat(1, 9))).empty());

  CHECK_THROWS_AS(window_start_set(m, Rat(0), Alpha::plus_inf()), ValidationError);
  CHECK_THROWS_AS(window_start_set(m, Rat(1), Alpha::plus_inf()), ValidationError);
  CHECK_THROWS_AS(window_start_set(m, Rat(3, 2), Alpha::plus_inf()), ValidationError);
}

TEST_CASE("window starts near an isolated accumulation point") {
  PointMassMeasure m = boundary_measure(make_reordered_cantor(8));
  for (long n = 1; n <= 4; ++n) {
    IntervalSet minus = window_start_set(m, p3(n + 1), Alpha::minus_inf());
    CHECK(minus == IntervalSet({Interval::point(Rat(0))}));
  }
  // exact at scales the truncation cannot otherwise resolve
  IntervalSet deep = window_start_set(m, p3(10), Alpha::minus_inf());
  CHECK(deep == IntervalSet({Interval::point(Rat(0))}));

  // no-atom windows: the sole open fit lives in the last block's interval
  IntervalSet plus = window_start_set(m, Rat(1, 9), Alpha::plus_inf());
  CHECK(plus == IntervalSet({Interval::open(Rat(2, 3), Rat(8, 9))}));

  // below the zone threshold the hidden atoms could flip answers
  CHECK_THROWS_AS(window_start_set(m, p3(10), Alpha::plus_inf()), ValidationError);
  CHECK_THROWS_AS(window_start_set(m, p3(10), Alpha::finite(1, p3(10))), UnsupportedError);
  CHECK_THROWS_AS(window_start_set(m, Rat(1, 9), Alpha::finite(1, Rat(1, 9))), UnsupportedError);
}

TEST_CASE("oracle agreement on generator measures") {
  std::mt19937 rng(90210);
  PointMassMeasure cantor = boundary_measure(make_cantor_string(6));
  for (const Rat& eta : {Rat(1, 9), Rat(1, 27), Rat(1, 8), Rat(2, 17)}) {
    check_against_oracle(cantor, eta, Alpha::minus_inf(), rng, 150);
    check_against_oracle(cantor, eta, Alpha::plus_inf(), rng, 150);
    for (long long k : {1, 2, 3}) check_against_oracle(cantor, eta, Alpha::finite(k, eta), rng, 80);
  }

  PointMassMeasure paired = boundary_measure(make_paired_cantor(6));
  PointMassMeasure reordered = boundary_measure(make_reordered_cantor(6));
  PointMassMeasure astr = boundary_measure(make_a_string(1, 40));
  for (const Rat& eta : {Rat(1, 9), Rat(1, 27), Rat(1, 10)}) {
    check_against_oracle(paired, eta, Alpha::minus_inf(), rng, 150);
    check_against_oracle(paired, eta, Alpha::plus_inf(), rng, 150);
    check_against_oracle(reordered, eta, Alpha::minus_inf(), rng, 100);
    check_against_oracle(reordered, eta, Alpha::plus_inf(), rng, 100);
    check_against_oracle(astr, eta, Alpha::minus_inf(), rng, 100);
    check_against_oracle(astr, eta, Alpha::plus_inf(), rng, 100);
  }
}

TEST_CASE("oracle agreement on synthetic atom trains") {
  std::mt19937 rng(1729);
  for (int iter = 0; iter < 25; ++iter) {
    PointMassMeasure m = synthetic(rng, 30);
    for (const Rat& eta : {Rat(1, 8), Rat(1, 27), Rat(5, 64)}) {
      CHECK(window_start_set(m, eta, Alpha::minus_inf()).empty());
      check_against_oracle(m, eta, Alpha::plus_inf(), rng, 60);
      for (long long k = 1; k <= 6; ++k)
        check_against_oracle(m, eta, Alpha::finite(k, eta), rng, 30);
    }
  }
}

TEST_CASE("start sets partition the admissible starts") {
  // every window has exactly one regularity, so over all realized values the
  // start sets tile [0, 1 - eta]
  PointMassMeasure m = boundary_measure(make_cantor_string(6));
  Rat eta(1, 9);
  std::vector<IntervalSet> parts;
  parts.push_back(window_start_set(m, eta, Alpha::minus_inf()));
  parts.push_back(window_start_set(m, eta, Alpha::plus_inf()));
  long long max_k = 0;
  for (long long w : m.mass) max_k += w;
  for (long long k = 1; k <= max_k; ++k)
    parts.push_back(window_start_set(m, eta, Alpha::finite(k, eta)));
  IntervalSet all;
  for (const auto& p : parts) all = set_union(all, p);
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      CHECK(set_intersection(parts[i], parts[j]).empty());
  CHECK(all == IntervalSet({Interval::closed(Rat(0), Rat(8, 9))}));

  std::mt19937 rng(11);
  for (int iter = 0; iter < 10; ++iter) {
    PointMassMeasure s = synthetic(rng, 20);
    Rat e(1, 16);
    IntervalSet u = window_start_set(s, e, Alpha::plus_inf());
    long long top = 0;
    for (long long w : s.mass) top += w;
    for (long long k = 1; k <= top; ++k)
      u = set_union(u, window_start_set(s, e, Alpha::finite(k, e)));
    CHECK(u == IntervalSet({Interval::closed(Rat(0), Rat(15, 16))}));
  }
}

TEST_CASE("deeper truncations refine consistently") {
  // the minus-infinity set never shrinks and the plus-infinity set never
  // grows as hidden structure becomes explicit
  for (const Rat& eta : {Rat(1, 9), Rat(1, 81)}) {
    PointMassMeasure shallow = boundary_measure(make_cantor_string(5));
    PointMassMeasure deep = boundary_measure(make_cantor_string(8));
    IntervalSet m1 = window_start_set(shallow, eta, Alpha::minus_inf());
    IntervalSet m2 = window_start_set(deep, eta, Alpha::minus_inf());
    CHECK(set_intersection(m1, m2) == m1);
    IntervalSet p1 = window_start_set(shallow, eta, Alpha::plus_inf());
    IntervalSet p2 = window_start_set(deep, eta, Alpha::plus_inf());
    CHECK(set_intersection(p1, p2) == p2);
  }
  PointMassMeasure r5 = boundary_measure(make_reordered_cantor(5));
  PointMassMeasure r8 = boundary_measure(make_reordered_cantor(8));
  CHECK(window_start_set(r5, Rat(1, 27), Alpha::minus_inf()) ==
        window_start_set(r8, Rat(1, 27), Alpha::minus_inf()));
}
