#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fz/rational.hpp"

using namespace fz;

TEST_CASE("parse and print round trip") {
  CHECK(*parse_rat("1/3") == Rat(1, 3));
  CHECK(*parse_rat("-2/6") == Rat(-1, 3));
  CHECK(*parse_rat("7") == Rat(7));
  CHECK(*parse_rat("0") == Rat(0));
  CHECK(!parse_rat("1/0").has_value());
  CHECK(!parse_rat("").has_value());
  CHECK(!parse_rat("a/b").has_value());
  CHECK(!parse_rat("1.5").has_value());
  CHECK(rat_str(Rat(4, 6)) == "2/3");
  CHECK(rat_str(Rat(5)) == "5");
  CHECK(rat_str(Rat(-1, 9)) == "-1/9");
  CHECK(*parse_rat(rat_str(Rat(123456789, 987654321))) == Rat(123456789, 987654321));
}

TEST_CASE("powers") {
  CHECK(rat_pow(Rat(2, 3), 4) == Rat(16, 81));
  CHECK(rat_pow(Rat(2, 3), 0) == Rat(1));
  CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(rat_pow(Rat(3), 5) == Rat(243));
}

TEST_CASE("ceil_neg_log finds the first power reaching one") {
  // smallest n >= 0 with value * base^n >= 1
  CHECK(ceil_neg_log(Rat(1), 3) == 0);
  CHECK(ceil_neg_log(Rat(5, 2), 3) == 0);
  CHECK(ceil_neg_log(Rat(1, 3), 3) == 1);
  CHECK(ceil_neg_log(Rat(1, 2), 3) == 1);
  CHECK(ceil_neg_log(Rat(2, 27), 3) == 3);  // 2/27 * 27 = 2 >= 1 but 2/27 * 9 < 1
  CHECK(ceil_neg_log(Rat(1, 81), 9) == 2);
  CHECK(ceil_neg_log(Rat(2, 81), 9) == 2);
  CHECK(ceil_neg_log(Rat(1, 9), 9) == 1);
}

TEST_CASE("double conversion") {
  CHECK(rat_d(Rat(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(rat_d(Rat(0)) == 0.0);
}

TEST_CASE("error types are distinguishable") {
  ValidationError v("bad input");
  UnsupportedError u("not supported");
  CHECK(std::string(v.what()) == "bad input");
  CHECK(std::string(u.what()) == "not supported");
}
