#include "fbt/enumerate.hpp"

#include <algorithm>

#include "fbt/order.hpp"

namespace fbt {

TableauStream::TableauStream(int n, TableauClass cls, std::optional<std::vector<Letter>> border)
    : n_(n), cls_(cls), border_(std::move(border)) {
  if (n < 1 || n > kMaxSize) throw Error(ErrorKind::ShapeError, "size out of range");
  if (border_ && static_cast<int>(border_->size()) != n - 1)
    throw Error(ErrorKind::BadBorder, "border word must have length n-1");
  cur_.n = n;
  for (int j = 1; j <= n - 1; ++j) cur_.up[j] = 1;
  if (prepare_left()) {
    started_ = true;
    return;
  }
  while (advance_up())
    if (prepare_left()) {
      started_ = true;
      return;
    }
  done_ = true;
}

bool TableauStream::advance_up() {
  for (int j = n_ - 1; j >= 1; --j) {
    if (cur_.up[j] < j + 1) {
      ++cur_.up[j];
      for (int k = j + 1; k <= n_ - 1; ++k) cur_.up[k] = 1;
      return true;
    }
  }
  return false;
}

bool TableauStream::prepare_left() {
  options_.assign(n_ + 1, {});
  pos_.assign(n_ + 1, 0);
  std::vector<int> last_up(n_ + 1, 0);
  for (int j = 1; j <= n_ - 1; ++j) last_up[cur_.up[j]] = std::max(last_up[cur_.up[j]], j);
  for (int i = 2; i <= n_; ++i) {
    for (int c = std::max(i - 1, last_up[i] + 1); c <= n_; ++c)
      if (c == n_ || cur_.up[c] < i) options_[i].push_back(c);
    if (options_[i].empty()) return false;
    cur_.left[i] = static_cast<std::uint8_t>(options_[i][0]);
  }
  return true;
}

bool TableauStream::advance_left() {
  for (int i = n_; i >= 2; --i) {
    if (pos_[i] + 1 < options_[i].size()) {
      ++pos_[i];
      cur_.left[i] = static_cast<std::uint8_t>(options_[i][pos_[i]]);
      for (int k = i + 1; k <= n_; ++k) {
        pos_[k] = 0;
        cur_.left[k] = static_cast<std::uint8_t>(options_[k][0]);
      }
      return true;
    }
  }
  return false;
}

bool TableauStream::accept_arrows() const {
  if (border_ && border_word(cur_) != *border_) return false;
  if (cls_ == TableauClass::All) return true;
  for (int k = 1; k <= n_ - 1; ++k)
    if (border_letter(cur_, k) == Letter::Dot) return false;
  if (cls_ == TableauClass::Binary && free_interior_mask(cur_) != 0) return false;
  return true;
}

bool TableauStream::next(FbTableau& out) {
  // started_ marks an arrow configuration that has not been examined yet.
  while (true) {
    if (in_dots_) {
      if (sub_ != free_) {
        sub_ = ((sub_ | ~free_) + 1) & free_;
        cur_.dots = sub_;
        out = cur_;
        return true;
      }
      in_dots_ = false;
      cur_.dots = 0;
      if (advance_left()) {
        started_ = true;
      } else {
        started_ = false;
        while (advance_up())
          if (prepare_left()) {
            started_ = true;
            break;
          }
        if (!started_) done_ = true;
      }
      continue;
    }
    if (done_) return false;
    if (started_) {
      started_ = false;
      if (accept_arrows()) {
        free_ = cls_ == TableauClass::All ? free_interior_mask(cur_) : 0;
        sub_ = 0;
        cur_.dots = 0;
        in_dots_ = true;
        out = cur_;
        return true;
      }
      in_dots_ = true;
      free_ = sub_ = 0;
      continue;
    }
    return false;
  }
}

std::vector<FbTableau> enumerate(int n, TableauClass cls, std::optional<std::vector<Letter>> border) {
  std::vector<FbTableau> out;
  TableauStream s(n, cls, std::move(border));
  FbTableau t;
  while (s.next(t)) out.push_back(t);
  return out;
}

void for_each_tableau(int n, TableauClass cls, const std::function<void(const FbTableau&)>& fn) {
  TableauStream s(n, cls);
  FbTableau t;
  while (s.next(t)) fn(t);
}

mpz_class count(int n, TableauClass cls) {
  mpz_class c = 0;
  TableauStream s(n, cls);
  FbTableau t;
  while (s.next(t)) ++c;
  return c;
}

mpz_class q2_factorial(int n) {
  mpz_class p = 1;
  for (int i = 1; i <= n; ++i) {
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), 2, static_cast<unsigned long>(i));
    p *= term - 1;
  }
  return p;
}

mpz_class factorial(int n) {
  mpz_class p = 1;
  for (int i = 2; i <= n; ++i) p *= i;
  return p;
}

mpz_class catalan(int n) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return c / (n + 1);
}

bool is_bracket_vector(const BracketVector& v) {
  const int m = static_cast<int>(v.size());
  const int n = m + 1;
  auto at = [&](int i) { return i <= m ? v[i - 1] : 0; };
  for (int i = 1; i <= m; ++i)
    if (at(i) < 0 || at(i) > n - i) return false;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= at(i); ++j)
      if (j + at(i + j) > at(i)) return false;
  return true;
}

std::vector<BracketVector> all_bracket_vectors(int n) {
  const int m = n - 1;
  std::vector<BracketVector> out;
  BracketVector v(m, 0);
  while (true) {
    if (is_bracket_vector(v)) out.push_back(v);
    int k = m - 1;
    while (k >= 0 && v[k] == n - (k + 1)) v[k--] = 0;
    if (k < 0) break;
    ++v[k];
  }
  return out;
}

// Entry i of a bracket vector describes column n - i.
BracketVector bracket_of(const FbTableau& t) {
  if (!is_binary(t)) throw Error(ErrorKind::NotBinary, "bracket vectors need a binary tableau");
  const int n = t.n;
  BracketVector v(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    int col = n - i;
    v[i - 1] = col + 1 - t.up[col];
  }
  return v;
}

FbTableau tableau_of(const BracketVector& v) {
  if (!is_bracket_vector(v)) throw Error(ErrorKind::NotBracketVector, "inequalities violated");
  const int n = static_cast<int>(v.size()) + 1;
  if (n > kMaxSize) throw Error(ErrorKind::NotBracketVector, "too long");
  FbTableau t;
  t.n = n;
  for (int i = 1; i <= n - 1; ++i) {
    int col = n - i;
    t.up[col] = static_cast<std::uint8_t>(col + 1 - v[i - 1]);
  }
  std::vector<int> last_up(n + 1, 0);
  for (int j = 1; j <= n - 1; ++j) last_up[t.up[j]] = std::max(last_up[t.up[j]], j);
  for (int i = 2; i <= n; ++i) {
    int c = std::max(i - 1, last_up[i] + 1);
    while (c < n && t.up[c] >= i) ++c;
    t.left[i] = static_cast<std::uint8_t>(c);
  }
  if (!is_valid(t) || !is_binary(t)) throw Error(ErrorKind::NotBracketVector, "no binary tableau");
  return t;
}

bool bracket_leq(const BracketVector& a, const BracketVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

BorderQuotientReport border_quotient_check(int n) {
  BorderQuotientReport rep;
  auto all = enumerate(n);
  std::vector<std::vector<Letter>> words;
  for (auto& t : all) {
    words.push_back(border_word(t));
    ++rep.fiber_sizes[words.back()];
  }
  std::size_t expect = 1;
  for (int k = 1; k <= n - 1; ++k) expect *= 3;
  rep.surjective = rep.fiber_sizes.size() == expect;
  auto lmin = [](const std::vector<Letter>& a, const std::vector<Letter>& b) {
    std::vector<Letter> w(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) w[k] = std::min(a[k], b[k]);
    return w;
  };
  auto lmax = [](const std::vector<Letter>& a, const std::vector<Letter>& b) {
    std::vector<Letter> w(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) w[k] = std::max(a[k], b[k]);
    return w;
  };
  rep.meet_hom = rep.join_hom = rep.fibers_are_congruence = true;
  const std::size_t N = all.size();
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      if (border_word(meet(all[x], all[y])) != lmin(words[x], words[y])) rep.meet_hom = false;
      if (border_word(join(all[x], all[y])) != lmax(words[x], words[y])) rep.join_hom = false;
      if (x < y && words[x] == words[y]) {
        for (std::size_t z = 0; z < N; ++z) {
          if (border_word(meet(all[x], all[z])) != border_word(meet(all[y], all[z])) ||
              border_word(join(all[x], all[z])) != border_word(join(all[y], all[z])))
            rep.fibers_are_congruence = false;
        }
      }
    }
  rep.fibers_are_intervals = true;
  for (auto& [w, size] : rep.fiber_sizes) {
    std::optional<FbTableau> lo, hi;
    for (std::size_t x = 0; x < N; ++x) {
      if (words[x] != w) continue;
      lo = lo ? meet(*lo, all[x]) : all[x];
      hi = hi ? join(*hi, all[x]) : all[x];
    }
    std::size_t between = 0;
    bool inside = true;
    for (std::size_t x = 0; x < N; ++x) {
      if (leq(*lo, all[x]) && leq(all[x], *hi)) {
        ++between;
        if (words[x] != w) inside = false;
      }
    }
    if (!inside || between != size) rep.fibers_are_intervals = false;
  }
  return rep;
}

}  // namespace fbt
