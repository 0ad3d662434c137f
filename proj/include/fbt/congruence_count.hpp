#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "fbt/irreducibles.hpp"

namespace fbt {

struct DyckPath {
  std::string steps;      // over {U, D}
  std::vector<int> height;  // y_0..y_2n
  static DyckPath from_steps(const std::string& steps);
};

std::vector<DyckPath> dyck_paths(int n);

struct PathCell {
  int t = 0;  // abscissa of the top vertex
  int h = 0;  // height of the midpoint
  int shared_edges = 0;
};

std::vector<PathCell> path_cells(const DyckPath& p);
mpz_class cell_weight(const PathCell& c, Family f);
mpz_class path_weight(const DyckPath& p, Family f);
mpz_class step_weight(const DyckPath& p);  // down-step model, extra slow family

mpz_class weighted_sum(int n, Family f);
mpz_class weighted_sum_stepmodel(int n);

class PowerSeries {
 public:
  explicit PowerSeries(int order, mpq_class constant = 0);
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const mpq_class& operator[](int k) const { return c_[k]; }
  mpq_class& operator[](int k) { return c_[k]; }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries scaled(const mpq_class& s) const;
  PowerSeries times_x() const;
  PowerSeries inverse() const;                     // needs a unit constant term
  PowerSeries substitute_scaled(const mpq_class& s) const;  // f(s x)
  std::vector<mpz_class> integer_coefficients() const;  // throws if not integral

 private:
  std::vector<mpq_class> c_;
};

using Sequence = std::function<mpz_class(int)>;

// 1 / (1 + a0 x - l1 x / (1 + a1 x - l2 x / ...)), truncated at `depth` levels.
PowerSeries cf_series_depth(const Sequence& a, const Sequence& lambda, int order, int depth);
// Depth order+1, re-checked against depth order+3.
PowerSeries cf_series(const Sequence& a, const Sequence& lambda, int order);

Sequence estam_cf_a();
Sequence estam_cf_lambda();
Sequence stam_cf_a();
Sequence stam_cf_lambda();
Sequence constant_sequence(long v);

PowerSeries narayana(const mpq_class& ell, int order);
PowerSeries stam_series_narayana(int order);

}  // namespace fbt
