#include "fbt/spine.hpp"

#include "fbt/irreducibles.hpp"

namespace fbt {

std::vector<Cell> forbidden_cohooks(const FbTableau& t) {
  const int n = t.n;
  std::vector<Cell> out;
  for (int i = 2; i <= n; ++i)
    for (int j = i - 1; j <= n - 1; ++j) {
      bool empty = true;
      for (Cell c : cohook(n, {i, j}))
        if (is_nonempty(t, c)) {
          empty = false;
          break;
        }
      if (empty) out.push_back({i, j});
    }
  return out;
}

bool is_on_spine(const FbTableau& t) { return forbidden_cohooks(t).empty(); }

namespace {

mpz_class mersenne(int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return p - 1;
}

mpz_class pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return p;
}

}  // namespace

mpz_class SpineTable::reduced(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0) return 0;
  if (j == 0 && (i == 0 || k == 0)) return 1;
  auto key = std::make_tuple(i, j, k);
  if (auto it = reduced_.find(key); it != reduced_.end()) return it->second;
  mpz_class a = mersenne(i + 1), b = mersenne(k + 1), v;
  if (j > 1) {
    v = a * reduced(i + 1, j - 1, k) + b * reduced(i, j - 1, k + 1) - a * b * reduced(i + 1, j - 2, k + 1);
  } else if (j == 1) {
    v = a * reduced(i + 1, 0, k) + b * reduced(i, 0, k + 1) - a * b * reduced(i, 0, k);
  } else {
    v = a * reduced(i, 0, k - 1) + b * reduced(i - 1, 0, k) - 2 * mersenne(i) * mersenne(k) * reduced(i - 1, 0, k - 1);
  }
  reduced_.emplace(key, v);
  return v;
}

mpz_class SpineTable::term(int i, int j, int k) {
  return pow2(static_cast<long>(i) * (i - 1) / 2 + static_cast<long>(k) * (k - 1) / 2) * reduced(i, j, k);
}

mpz_class SpineTable::small_term(int i, int j) {
  if (i < 1 || j < 1) return 0;
  if (i == 1 || j == 1) return 1;
  auto key = std::make_pair(i, j);
  if (auto it = small_.find(key); it != small_.end()) return it->second;
  mpz_class v = i * small_term(i, j - 1) + j * small_term(i - 1, j) - (i - 1) * (j - 1) * small_term(i - 1, j - 1);
  small_.emplace(key, v);
  return v;
}

mpz_class spine_count_estam(int n) {
  SpineTable tab;
  mpz_class total = 0;
  for (int i = 0; i <= n - 1; ++i)
    for (int j = 0; i + j <= n - 1; ++j) total += tab.term(i, j, n - 1 - i - j);
  return total;
}

mpz_class spine_count_stam(int n) {
  SpineTable tab;
  mpz_class total = 0;
  for (int i = 1; i <= n; ++i) total += tab.small_term(i, n + 1 - i);
  return total;
}

FbTableau spine_join_irr_tableau(int n, const EdgeLabel& l) {
  if (l.sigma != Sigma::Left) return join_irr_tableau(n, l);
  if (n > kMaxSize || !is_legal_label(n, l)) throw Error(ErrorKind::BadLabel, label_string(l));
  FbTableau t;
  t.n = n;
  for (int c = 1; c <= n - 1; ++c) t.up[c] = static_cast<std::uint8_t>(c >= l.j ? l.i : c + 1);
  for (int r = 2; r <= n; ++r) t.left[r] = static_cast<std::uint8_t>(n);
  t.left[l.i + 1] = static_cast<std::uint8_t>(l.j);
  validate(t);
  return t;
}

std::vector<std::pair<EdgeLabel, FbTableau>> spine_join_irr(int n) {
  std::vector<std::pair<EdgeLabel, FbTableau>> out;
  for (const auto& l : join_irr_labels(n)) out.push_back({l, spine_join_irr_tableau(n, l)});
  return out;
}

}  // namespace fbt
