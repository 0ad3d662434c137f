#include "fbt/congruence_count.hpp"

#include <functional>

namespace fbt {

DyckPath DyckPath::from_steps(const std::string& steps) {
  DyckPath p;
  p.steps = steps;
  p.height.push_back(0);
  for (char s : steps) {
    if (s != 'U' && s != 'D') throw Error(ErrorKind::BadChar, "Dyck steps are U and D");
    p.height.push_back(p.height.back() + (s == 'U' ? 1 : -1));
    if (p.height.back() < 0) throw Error(ErrorKind::BadShape, "path goes below the axis");
  }
  if (p.height.back() != 0) throw Error(ErrorKind::BadShape, "path does not return to the axis");
  return p;
}

std::vector<DyckPath> dyck_paths(int n) {
  std::vector<DyckPath> out;
  std::string cur;
  std::function<void(int, int)> rec = [&](int ups, int downs) {
    if (ups == n && downs == n) {
      out.push_back(DyckPath::from_steps(cur));
      return;
    }
    if (ups < n) {
      cur.push_back('U');
      rec(ups + 1, downs);
      cur.pop_back();
    }
    if (downs < ups) {
      cur.push_back('D');
      rec(ups, downs + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<PathCell> path_cells(const DyckPath& p) {
  std::vector<PathCell> out;
  const auto& y = p.height;
  const int len = static_cast<int>(y.size()) - 1;
  for (int t = 1; t < len; ++t)
    for (int h = y[t] - 1; h >= 1; h -= 2) {
      int shared = 0;
      if (y[t - 1] == h && y[t] == h + 1) ++shared;
      if (y[t] == h + 1 && y[t + 1] == h) ++shared;
      out.push_back({t, h, shared});
    }
  return out;
}

mpz_class cell_weight(const PathCell& c, Family f) {
  static const int estam_low[3] = {1, 2, 3};
  static const int estam_high[3] = {2, 4, 7};
  static const int stam_high[3] = {1, 2, 3};
  if (f == Family::ESTam) return c.h == 1 ? estam_low[c.shared_edges] : estam_high[c.shared_edges];
  if (f == Family::STam) return c.h == 1 ? 1 : stam_high[c.shared_edges];
  throw Error(ErrorKind::BadLabel, "no cell weights for the binary family");
}

mpz_class path_weight(const DyckPath& p, Family f) {
  mpz_class w = 1;
  for (const auto& c : path_cells(p)) w *= cell_weight(c, f);
  return w;
}

mpz_class step_weight(const DyckPath& p) {
  mpz_class w = 1;
  const auto& y = p.height;
  for (std::size_t t = 1; t < y.size(); ++t) {
    if (y[t] > y[t - 1]) continue;
    int from = y[t - 1];
    bool peak = t >= 2 && y[t - 2] < y[t - 1];
    if (from == 1) continue;
    if (from == 2) {
      w *= peak ? 3 : 4;
      continue;
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(from - 3));
    w *= (peak ? 7 : 8) * scale;
  }
  return w;
}

mpz_class weighted_sum(int n, Family f) {
  mpz_class total = 0;
  for (const auto& p : dyck_paths(n)) total += path_weight(p, f);
  return total;
}

mpz_class weighted_sum_stepmodel(int n) {
  mpz_class total = 0;
  for (const auto& p : dyck_paths(n)) total += step_weight(p);
  return total;
}

PowerSeries::PowerSeries(int order, mpq_class constant) : c_(order + 1, mpq_class(0)) { c_[0] = constant; }

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  PowerSeries r = *this;
  for (int k = 0; k <= order(); ++k) r.c_[k] += o.c_[k];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  PowerSeries r = *this;
  for (int k = 0; k <= order(); ++k) r.c_[k] -= o.c_[k];
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  PowerSeries r(order());
  for (int a = 0; a <= order(); ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; a + b <= order(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
  }
  return r;
}

PowerSeries PowerSeries::scaled(const mpq_class& s) const {
  PowerSeries r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

PowerSeries PowerSeries::times_x() const {
  PowerSeries r(order());
  for (int k = 1; k <= order(); ++k) r.c_[k] = c_[k - 1];
  return r;
}

PowerSeries PowerSeries::inverse() const {
  if (c_[0] == 0) throw Error(ErrorKind::BadShape, "series without constant term has no inverse");
  PowerSeries r(order());
  r.c_[0] = 1 / c_[0];
  for (int k = 1; k <= order(); ++k) {
    mpq_class s = 0;
    for (int a = 1; a <= k; ++a) s += c_[a] * r.c_[k - a];
    r.c_[k] = -s / c_[0];
  }
  return r;
}

PowerSeries PowerSeries::substitute_scaled(const mpq_class& s) const {
  PowerSeries r = *this;
  mpq_class p = 1;
  for (int k = 0; k <= order(); ++k) {
    r.c_[k] *= p;
    p *= s;
  }
  return r;
}

std::vector<mpz_class> PowerSeries::integer_coefficients() const {
  std::vector<mpz_class> out;
  for (const auto& v : c_) {
    if (v.get_den() != 1) throw Error(ErrorKind::BadShape, "non-integral coefficient");
    out.push_back(v.get_num());
  }
  return out;
}

PowerSeries cf_series_depth(const Sequence& a, const Sequence& lambda, int order, int depth) {
  PowerSeries one(order, 1);
  PowerSeries x = one.times_x();
  PowerSeries d = (one + x.scaled(mpq_class(a(depth)))).inverse();
  for (int h = depth - 1; h >= 0; --h) {
    PowerSeries denom = one + x.scaled(mpq_class(a(h))) - (x * d).scaled(mpq_class(lambda(h + 1)));
    d = denom.inverse();
  }
  return d;
}

PowerSeries cf_series(const Sequence& a, const Sequence& lambda, int order) {
  PowerSeries s = cf_series_depth(a, lambda, order, order + 1);
  PowerSeries deeper = cf_series_depth(a, lambda, order, order + 3);
  for (int k = 0; k <= order; ++k)
    if (s[k] != deeper[k]) throw Error(ErrorKind::BadShape, "continued fraction truncation is too shallow");
  return s;
}

namespace {

mpz_class pow2(int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return p;
}

}  // namespace

Sequence estam_cf_a() {
  return [](int h) -> mpz_class { return h == 0 ? mpz_class(0) : h == 1 ? mpz_class(1) : pow2(h - 2); };
}

Sequence estam_cf_lambda() {
  return [](int h) -> mpz_class { return h == 1 ? mpz_class(1) : pow2(h); };
}

Sequence stam_cf_a() {
  return [](int h) -> mpz_class { return h <= 1 ? 0 : 1; };
}

Sequence stam_cf_lambda() {
  return [](int h) -> mpz_class { return h <= 2 ? 1 : 4; };
}

Sequence constant_sequence(long v) {
  return [v](int) -> mpz_class { return v; };
}

PowerSeries narayana(const mpq_class& ell, int order) {
  PowerSeries s(order, 1);
  for (int m = 1; m <= order; ++m) {
    mpq_class v = (ell - 1) * s[m - 1];
    for (int k = 0; k <= m - 1; ++k) v += s[k] * s[m - 1 - k];
    s[m] = v;
  }
  return s;
}

PowerSeries stam_series_narayana(int order) {
  PowerSeries one(order, 1);
  PowerSeries x = one.times_x();
  PowerSeries inner = narayana(mpq_class(3, 4), order).substitute_scaled(4);
  PowerSeries mid = (one - x * inner).inverse();
  return (one - x * mid).inverse();
}

}  // namespace fbt
