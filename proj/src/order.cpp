#include "fbt/order.hpp"

#include <algorithm>

namespace fbt {

namespace {

void same_size(const FbTableau& a, const FbTableau& b) {
  if (a.n != b.n) throw Error(ErrorKind::SizeMismatch, "tableaux of sizes " + std::to_string(a.n) +
                                                           " and " + std::to_string(b.n));
}

std::uint64_t bit(int n, int r, int c) { return std::uint64_t{1} << dot_bit(n, {r, c}); }

// Nearest row above `row` in column j that is not pointed to by a left-arrow.
int raise_target(const FbTableau& t, int row, int j) {
  int r = row - 1;
  while (r > 1 && t.left[r] <= j) --r;
  return r;
}

}  // namespace

bool is_legal_label(int n, const EdgeLabel& l) {
  if (l.i < 1 || l.j > n - 1 || l.i > l.j) return false;
  if (l.i == l.j && l.sigma == Sigma::Empty) return false;
  return true;
}

std::string label_string(const EdgeLabel& l) {
  char s = l.sigma == Sigma::Empty ? 'e' : l.sigma == Sigma::Left ? 'l' : 'b';
  return "(" + std::to_string(l.i) + "," + std::to_string(l.j) + "," + s + ")";
}

bool leq(const FbTableau& s, const FbTableau& t) {
  same_size(s, t);
  const int n = s.n;
  for (int j = 1; j <= n - 1; ++j)
    if (s.up[j] < t.up[j]) return false;
  for (int i = 2; i <= n; ++i)
    if (s.left[i] < t.left[i]) return false;
  std::uint64_t common = 0;
  for (int r = 2; r <= n - 1; ++r)
    for (int c = r; c <= n - 1; ++c)
      if (s.up[c] < r && t.left[r] > c) common |= bit(n, r, c);
  return (s.dots & common & ~t.dots) == 0;
}

FbTableau meet(const FbTableau& m, const FbTableau& n_) {
  same_size(m, n_);
  const int n = m.n;
  FbTableau l;
  l.n = n;
  for (int j = 1; j <= n - 1; ++j) l.up[j] = std::max(m.up[j], n_.up[j]);
  for (int i = 2; i <= n; ++i) {
    int c = std::max(m.left[i], n_.left[i]);
    while (c < n && l.up[c] >= i) ++c;
    l.left[i] = static_cast<std::uint8_t>(c);
  }
  std::uint64_t fm = free_interior_mask(m), fn = free_interior_mask(n_), fl = free_interior_mask(l);
  l.dots = fl & (m.dots | ~fm) & (n_.dots | ~fn);
  return l;
}

FbTableau join(const FbTableau& m, const FbTableau& n_) {
  same_size(m, n_);
  const int n = m.n;
  FbTableau l;
  l.n = n;
  for (int i = 2; i <= n; ++i) l.left[i] = std::min(m.left[i], n_.left[i]);
  for (int j = 1; j <= n - 1; ++j) {
    int r = std::min(m.up[j], n_.up[j]);
    while (r > 1 && l.left[r] <= j) --r;
    l.up[j] = static_cast<std::uint8_t>(r);
  }
  l.dots = free_interior_mask(l) & (m.dots | n_.dots);
  return l;
}

FbTableau join_by_conjugation(const FbTableau& m, const FbTableau& n) {
  return conjugate(meet(conjugate(m), conjugate(n)));
}

namespace {

// Column of the first free cell to the right of the left-arrow in row i, or 0
// when an up-arrow in the same row comes first or no free cell exists.
int first_free_right(const FbTableau& t, int i) {
  for (int c = t.left[i] - 1; c >= i - 1; --c) {
    if (t.up[c] == i) return 0;
    if (t.up[c] < i) return c;
  }
  return 0;
}

}  // namespace

std::vector<Move> changeable_cells(const FbTableau& t) {
  const int n = t.n;
  std::vector<Move> out;
  for (int j = 1; j <= n - 1; ++j)
    if (t.up[j] >= 2) out.push_back({{t.up[j], j}, MoveType::I});
  for (int i = 2; i <= n; ++i) {
    int c = first_free_right(t, i);
    if (c != 0 && is_dotted_free(t, {i, c})) out.push_back({{i, t.left[i]}, MoveType::II});
  }
  std::uint64_t empty = free_interior_mask(t) & ~t.dots;
  for (int b = 0; b < interior_count(n); ++b)
    if ((empty >> b) & 1u) out.push_back({interior_cell(n, b), MoveType::III});
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<FbTableau, EdgeLabel> apply_move(const FbTableau& t, const Move& m) {
  const int n = t.n;
  FbTableau s = t;
  const int i = m.cell.row, j = m.cell.col;
  auto fail = [&]() { return Error(ErrorKind::NotChangeable, "cell (" + std::to_string(i) + "," +
                                                              std::to_string(j) + ") for this move"); };
  switch (m.type) {
    case MoveType::I: {
      if (!(i >= 2 && j <= n - 1 && t.up[j] == i)) throw fail();
      s.up[j] = static_cast<std::uint8_t>(raise_target(t, i, j));
      Sigma sg = is_border(m.cell) ? Sigma::Dot : Sigma::Empty;
      return {s, {i - 1, j, sg}};
    }
    case MoveType::II: {
      if (!(i >= 2 && t.left[i] == j)) throw fail();
      int c = first_free_right(t, i);
      if (c == 0 || !is_dotted_free(t, {i, c})) throw fail();
      s.left[i] = static_cast<std::uint8_t>(c);
      if (is_interior(n, {i, c})) s.dots &= ~bit(n, i, c);
      return {s, {i - 1, c, Sigma::Left}};
    }
    case MoveType::III: {
      if (!is_interior(n, m.cell) || !is_free(t, m.cell) || has_dot(t, m.cell)) throw fail();
      s.dots |= bit(n, i, j);
      return {s, {i - 1, j, Sigma::Dot}};
    }
  }
  throw fail();
}

std::vector<std::pair<FbTableau, EdgeLabel>> covers(const FbTableau& t) {
  std::vector<std::pair<FbTableau, EdgeLabel>> out;
  for (const Move& m : changeable_cells(t)) out.push_back(apply_move(t, m));
  return out;
}

std::vector<FbTableau> cocovers(const FbTableau& t) {
  std::vector<FbTableau> out;
  for (auto& [u, lbl] : covers(conjugate(t))) out.push_back(conjugate(u));
  return out;
}

FbTableau from_changeables(int n, const std::vector<Move>& moves) {
  if (n < 1 || n > kMaxSize) throw Error(ErrorKind::Unrealizable, "size out of range");
  FbTableau t;
  t.n = n;
  for (int j = 1; j <= n - 1; ++j) t.up[j] = 1;
  std::vector<int> left(n + 1, 0);
  std::vector<int> last_marked(n + 1, 0);  // rightmost-to-left column blocking the left-arrow
  for (const Move& m : moves) {
    if (!in_shape(n, m.cell)) throw Error(ErrorKind::Unrealizable, "cell outside the shape");
    if (m.type == MoveType::I) {
      if (m.cell.row < 2 || m.cell.col > n - 1 || t.up[m.cell.col] != 1)
        throw Error(ErrorKind::Unrealizable, "bad up-arrow cell");
      t.up[m.cell.col] = static_cast<std::uint8_t>(m.cell.row);
    } else if (m.type == MoveType::II) {
      if (m.cell.row < 2 || left[m.cell.row] != 0) throw Error(ErrorKind::Unrealizable, "bad left-arrow cell");
      left[m.cell.row] = m.cell.col;
    }
  }
  for (const Move& m : moves)
    if (m.type == MoveType::III) last_marked[m.cell.row] = std::max(last_marked[m.cell.row], m.cell.col);
  for (int j = 1; j <= n - 1; ++j)
    if (t.up[j] >= 2) last_marked[t.up[j]] = std::max(last_marked[t.up[j]], j);
  for (int i = 2; i <= n; ++i) {
    int c = left[i];
    if (c == 0) {
      c = std::max(last_marked[i] + 1, i - 1);
      while (c < n && t.up[c] >= i) ++c;
    }
    t.left[i] = static_cast<std::uint8_t>(c);
  }
  std::uint64_t holes = 0;
  for (const Move& m : moves)
    if (m.type == MoveType::III) {
      if (!is_interior(n, m.cell)) throw Error(ErrorKind::Unrealizable, "empty cell must be interior");
      holes |= bit(n, m.cell.row, m.cell.col);
    }
  t.dots = free_interior_mask(t) & ~holes;
  if (!is_valid(t)) throw Error(ErrorKind::Unrealizable, "reconstruction is not an fb-tableau");
  std::vector<Move> want = moves;
  std::sort(want.begin(), want.end());
  if (changeable_cells(t) != want) throw Error(ErrorKind::Unrealizable, "changeable cells do not round-trip");
  return t;
}

std::vector<FbTableau> small_covers(const FbTableau& t) {
  const int n = t.n;
  std::vector<FbTableau> out;
  for (int j = 1; j <= n - 1; ++j) {
    int i = t.up[j];
    if (i < 2 || is_border({i, j})) continue;
    FbTableau s = t;
    s.up[j] = static_cast<std::uint8_t>(raise_target(t, i, j));
    out.push_back(s);
  }
  for (int i = 2; i <= n; ++i) {
    if (t.left[i] == i - 1) continue;
    int target = 0;
    bool blocked = false;
    for (int c = t.left[i] - 1; c >= i; --c) {
      if (t.up[c] == i) {
        blocked = true;
        break;
      }
      if (t.up[c] < i) {
        target = c;
        break;
      }
    }
    if (blocked) continue;
    FbTableau s = t;
    if (target != 0) {
      s.left[i] = static_cast<std::uint8_t>(target);
    } else {
      s.left[i] = static_cast<std::uint8_t>(i - 1);
      s.up[i - 1] = static_cast<std::uint8_t>(raise_target(s, i, i - 1));
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fbt
