#include <doctest.h>

#include <map>

#include "fbt/congruence_count.hpp"
#include "fbt/families.hpp"
#include "oracle.hpp"

using namespace fbt;

namespace {

const char* kEstam[] = {"1", "4", "44", "932", "35788", "2532868", "341012204"};
const long kStam[] = {1, 2, 7, 41, 328, 3077};

std::vector<mpz_class> coefficients(const PowerSeries& s) { return s.integer_coefficients(); }

}  // namespace

TEST_CASE("Dyck paths") {
  for (int n = 1; n <= 9; ++n) {
    auto ps = dyck_paths(n);
    CHECK(static_cast<long long>(ps.size()) == oracle::catalan(n));
    for (const auto& p : ps) {
      CHECK(p.height.front() == 0);
      CHECK(p.height.back() == 0);
      for (std::size_t t = 0; t + 1 < p.height.size(); ++t) {
        CHECK(p.height[t] >= 0);
        CHECK(std::abs(p.height[t + 1] - p.height[t]) == 1);
      }
    }
  }
  CHECK_THROWS_AS(DyckPath::from_steps("UDD"), Error);
  CHECK_THROWS_AS(DyckPath::from_steps("DU"), Error);
}

TEST_CASE("cells of UUUDDD") {
  auto cells = path_cells(DyckPath::from_steps("UUUDDD"));
  REQUIRE(cells.size() == 3);
  std::multiset<long> w;
  for (auto& c : cells) w.insert(cell_weight(c, Family::ESTam).get_si());
  CHECK(w == std::multiset<long>{2, 2, 7});
  CHECK(path_weight(DyckPath::from_steps("UUUDDD"), Family::ESTam) == 28);
}

TEST_CASE("size-3 decomposition") {
  std::map<std::string, long> want{{"UUUDDD", 28}, {"UUDUDD", 9}, {"UUDDUD", 3}, {"UDUUDD", 3}, {"UDUDUD", 1}};
  mpz_class total = 0;
  for (const auto& p : dyck_paths(3)) {
    CHECK(path_weight(p, Family::ESTam) == want.at(p.steps));
    total += path_weight(p, Family::ESTam);
  }
  CHECK(total == 44);
}

TEST_CASE("weighted sums") {
  for (int n = 1; n <= 7; ++n) CHECK(weighted_sum(n, Family::ESTam) == mpz_class(kEstam[n - 1]));
  for (int n = 1; n <= 6; ++n) CHECK(weighted_sum(n, Family::STam) == kStam[n - 1]);
  CHECK(weighted_sum_stepmodel(1) == 1);
  CHECK(weighted_sum_stepmodel(3) == 44);
  for (int n = 1; n <= 10; ++n) CHECK(weighted_sum_stepmodel(n) == weighted_sum(n, Family::ESTam));
}

TEST_CASE("power series arithmetic") {
  PowerSeries one_minus_x(4, 1);
  one_minus_x[1] = -1;
  auto geo = one_minus_x.inverse();
  for (int k = 0; k <= 4; ++k) CHECK(geo[k] == 1);
  auto sq = geo * geo;
  for (int k = 0; k <= 4; ++k) CHECK(sq[k] == k + 1);
  auto sub = geo.substitute_scaled(2);
  CHECK(sub[3] == 8);
  CHECK(geo.times_x()[0] == 0);
  CHECK((geo - geo)[2] == 0);
  PowerSeries half(2, mpq_class(1, 2));
  CHECK_THROWS_AS(half.integer_coefficients(), Error);
  CHECK_THROWS_AS(PowerSeries(3, 0).inverse(), Error);
}

TEST_CASE("continued fractions") {
  auto cat = coefficients(cf_series(constant_sequence(0), constant_sequence(1), 10));
  for (int k = 0; k <= 10; ++k) CHECK(cat[k] == static_cast<long>(oracle::catalan(k)));
  auto es = coefficients(cf_series(estam_cf_a(), estam_cf_lambda(), 10));
  CHECK(es[0] == 1);
  for (int n = 1; n <= 7; ++n) CHECK(es[n] == mpz_class(kEstam[n - 1]));
  for (int n = 1; n <= 10; ++n) CHECK(es[n] == weighted_sum(n, Family::ESTam));
  auto st = coefficients(cf_series(stam_cf_a(), stam_cf_lambda(), 10));
  for (int n = 1; n <= 6; ++n) CHECK(st[n] == kStam[n - 1]);
  for (int n = 1; n <= 10; ++n) CHECK(st[n] == weighted_sum(n, Family::STam));
  const long a[] = {0, 1, 1, 2, 4, 8, 16};
  const long lam[] = {1, 4, 8, 16, 32, 64};
  for (int h = 0; h < 7; ++h) CHECK(estam_cf_a()(h) == a[h]);
  for (int h = 1; h <= 6; ++h) CHECK(estam_cf_lambda()(h) == lam[h - 1]);
  const long sa[] = {0, 0, 1, 1, 1};
  const long sl[] = {1, 1, 4, 4, 4};
  for (int h = 0; h < 5; ++h) CHECK(stam_cf_a()(h) == sa[h]);
  for (int h = 1; h <= 5; ++h) CHECK(stam_cf_lambda()(h) == sl[h - 1]);
}

TEST_CASE("truncation depth does not affect low coefficients") {
  auto a = cf_series_depth(estam_cf_a(), estam_cf_lambda(), 8, 9);
  auto b = cf_series_depth(estam_cf_a(), estam_cf_lambda(), 8, 14);
  for (int k = 0; k <= 8; ++k) CHECK(a[k] == b[k]);
}

TEST_CASE("Narayana form") {
  auto n1 = coefficients(narayana(1, 10));
  for (int k = 0; k <= 10; ++k) CHECK(n1[k] == static_cast<long>(oracle::catalan(k)));
  // N(2, x): peaks weighted 2 gives the large Schroeder numbers.
  auto n2 = coefficients(narayana(2, 5));
  const long schroeder[] = {1, 2, 6, 22, 90, 394};
  for (int k = 0; k <= 5; ++k) CHECK(n2[k] == schroeder[k]);
  auto nar = coefficients(stam_series_narayana(12));
  auto cf = coefficients(cf_series(stam_cf_a(), stam_cf_lambda(), 12));
  CHECK(nar == cf);
  for (int n = 1; n <= 6; ++n) CHECK(nar[n] == kStam[n - 1]);
}

TEST_CASE("cell model against order ideals and brute congruences") {
  for (int n = 2; n <= 6; ++n)
    CHECK(count_order_ideals(colored_poset(n, ColoredOrder::Inclusion).opposite()) == weighted_sum(n, Family::ESTam));
  for (int n = 2; n <= 7; ++n)
    CHECK(count_order_ideals(forcing_poset(n, Family::STam)) == weighted_sum(n, Family::STam));
  for (int n = 1; n <= 3; ++n)
    CHECK(congruence_lattice(build_tableau_lattice(n, Family::ESTam).lattice).count == weighted_sum(n, Family::ESTam));
  for (int n = 1; n <= 4; ++n)
    CHECK(congruence_lattice(build_tableau_lattice(n, Family::STam).lattice).count == weighted_sum(n, Family::STam));
}
