#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "mvvol/ctable.hpp"
#include "mvvol/volume.hpp"

using namespace mvvol;

namespace {
const CTable& table() {
  static const CTable t = CTable::build(12);
  return t;
}
}  // namespace

TEST_CASE("closed forms g=0 and g=1") {
  CHECK(volume_exact(table(), 0, 4) == PiMultiple{Rational(2), 2});
  CHECK(volume_exact(table(), 0, 5) == PiMultiple{Rational(1), 4});
  CHECK(volume_exact(table(), 0, 6) == PiMultiple{make_ratio(1, 2), 6});
  CHECK(volume_exact(table(), 0, 7) == PiMultiple{make_ratio(1, 4), 8});
  CHECK(volume_exact(table(), 1, 1) == PiMultiple{make_ratio(2, 3), 2});
  CHECK(volume_exact(table(), 1, 2) == PiMultiple{make_ratio(1, 3), 4});
  CHECK(volume_exact(table(), 1, 3) == PiMultiple{make_ratio(11, 60), 6});
}

TEST_CASE("general line g >= 2") {
  CHECK(volume_exact(table(), 2, 0) == PiMultiple{make_ratio(1, 15), 6});
  CHECK(volume_exact(table(), 2, 1) == PiMultiple{make_ratio(29, 840), 8});
  CHECK(volume_exact(table(), 2, 2) == PiMultiple{make_ratio(337, 18144), 10});
  CHECK(volume_exact(table(), 3, 0) == PiMultiple{make_ratio(115, 33264), 12});
  CHECK(volume_exact(table(), 3, 1) == PiMultiple{make_ratio(4111, 2223936), 14});
  CHECK(volume_exact(table(), 4, 0) ==
        PiMultiple{make_ratio(2106241, 11548293120L), 18});
}

TEST_CASE("n=0 assembly coincides with the general line") {
  for (long g = 2; g <= 12; ++g) {
    CHECK(volume_exact(table(), g, 0) == volume_g0_form(table(), g));
  }
  CHECK_THROWS_AS(volume_g0_form(table(), 1), std::domain_error);
}

TEST_CASE("pi exponent law and positivity") {
  for (long n = 4; n <= 10; ++n) {
    PiMultiple v = volume_exact(table(), 0, n);
    CHECK(v.pi_exp == 2 * n - 6);
    CHECK(sgn(v.coeff) > 0);
  }
  for (long n = 1; n <= 10; ++n) {
    PiMultiple v = volume_exact(table(), 1, n);
    CHECK(v.pi_exp == 2 * n);
    CHECK(sgn(v.coeff) > 0);
  }
  for (long g = 2; g <= 6; ++g) {
    for (long n = 0; n <= 6; ++n) {
      PiMultiple v = volume_exact(table(), g, n);
      CHECK(v.pi_exp == 6 * g - 6 + 2 * n);
      CHECK(sgn(v.coeff) > 0);
    }
  }
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(volume_exact(table(), 1, 0), std::domain_error);
  CHECK_THROWS_AS(volume_exact(table(), 0, 3), std::domain_error);
  CHECK_THROWS_AS(volume_exact(table(), 0, 0), std::domain_error);
  CHECK_THROWS_AS(volume_exact(table(), 2, -1), std::domain_error);
  CHECK_THROWS_AS(volume_exact(table(), -1, 5), std::domain_error);
  CHECK_THROWS_AS(volume_exact(CTable::build(2), 3, 0), std::out_of_range);
}

TEST_CASE("render grammar") {
  CHECK(render(volume_exact(table(), 2, 0)) == "1/15 * pi^6");
  CHECK(render(volume_exact(table(), 0, 5)) == "1/1 * pi^4");
  CHECK(render(volume_exact(table(), 1, 1)) == "2/3 * pi^2");
}

TEST_CASE("numeric evaluation") {
  CHECK(to_big_real({Rational(1), 0}, 128).sci(10) == "1.000000000e+00");
  CHECK(to_big_real({make_ratio(1, 15), 6}, 128).sci(15) ==
        "6.40926129050203e+01");
  CHECK(to_big_real({make_ratio(2, 3), 2}, 128).sci(15) ==
        "6.57973626739291e+00");
  CHECK(BigReal::pi(128).sci(15) == "3.14159265358979e+00");
  CHECK_THROWS_AS(to_big_real({Rational(1), 0}, 63), std::invalid_argument);
}

TEST_CASE("precision monotonicity") {
  PiMultiple v{make_ratio(1, 15), 6};
  auto d128 = to_big_real(v, 128).digits10(30);
  auto d256 = to_big_real(v, 256).digits10(30);
  auto d512 = to_big_real(v, 512).digits10(30);
  CHECK(d128.second == d256.second);
  CHECK(d256.second == d512.second);
  // digits stable between 128 and 256 bits must persist at 512 bits
  std::size_t stable = 0;
  while (stable < d128.first.size() && d128.first[stable] == d256.first[stable]) {
    ++stable;
  }
  CHECK(stable > 20);  // 128 bits carry ~38 decimal digits
  CHECK(d512.first.compare(0, stable, d128.first, 0, stable) == 0);
}

TEST_CASE("asymptotic ratio at g=2") {
  PiMultiple r = asymptotic_ratio_exact(table(), 2);
  CHECK(r.coeff == make_ratio(27, 81920));
  CHECK(r.pi_exp == 7);
  CHECK(asymptotic_ratio(table(), 2, 256).sci(12) == "9.95457973022e-01");
  CHECK_THROWS_AS(asymptotic_ratio_exact(table(), 1), std::domain_error);
}

TEST_CASE("conjectural denominator") {
  CHECK(conjectural_volume(1, 256).sci(15) == "1.27323954473516e+00");
  CHECK(conjectural_volume(2, 256).sci(12) == "6.43850515461e+01");
  CHECK_THROWS_AS(conjectural_volume(0, 256), std::domain_error);
}

TEST_CASE("stable_eval escalates and agrees with direct evaluation") {
  PiMultiple v = volume_exact(table(), 5, 3);
  BigReal a = stable_eval(v, 20, 64);
  BigReal b = to_big_real(v, 1024);
  CHECK(a.digits10(20) == b.digits10(20));
  CHECK_THROWS_AS(stable_eval(v, 0, 64), std::invalid_argument);
}
