#include "fbt/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace fbt {

namespace {

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::ArrowConflict: return "ArrowConflict";
    case ErrorKind::DotNotFree: return "DotNotFree";
    case ErrorKind::OutOfShape: return "OutOfShape";
    case ErrorKind::BadChar: return "BadChar";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotChangeable: return "NotChangeable";
    case ErrorKind::Unrealizable: return "Unrealizable";
    case ErrorKind::BadBorder: return "BadBorder";
    case ErrorKind::NotBinary: return "NotBinary";
    case ErrorKind::NotBracketVector: return "NotBracketVector";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::NotJoinIrreducible: return "NotJoinIrreducible";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::MemoryBudget: return "MemoryBudget";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Unlabeled: return "Unlabeled";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

std::size_t FbTableauHash::operator()(const FbTableau& t) const {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(t.n);
  for (int k = 1; k <= t.n; ++k) {
    h = (h ^ t.up[k]) * 1099511628211ull;
    h = (h ^ t.left[k]) * 1099511628211ull;
  }
  h ^= t.dots + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

bool in_shape(int n, Cell c) {
  if (c.row < 1 || c.row > n || c.col > n) return false;
  if (c.row == 1) return c.col >= 1;
  return c.col >= c.row - 1;
}

bool is_border(Cell c) { return c.row >= 2 && c.col == c.row - 1; }

int row_length(int n, int row) { return row == 1 ? n : n - row + 2; }

std::vector<Cell> shape_cells(int n) {
  std::vector<Cell> out;
  for (int r = 1; r <= n; ++r)
    for (int c = n; c >= (r == 1 ? 1 : r - 1); --c) out.push_back({r, c});
  return out;
}

int interior_count(int n) { return n < 3 ? 0 : (n - 1) * (n - 2) / 2; }

bool is_interior(int n, Cell c) {
  return c.row >= 2 && c.row <= c.col && c.col <= n - 1;
}

int dot_bit(int n, Cell c) {
  int r = c.row;
  int offset = (r - 2) * n - ((r - 1) * r / 2 - 1);
  return offset + (c.col - r);
}

Cell interior_cell(int n, int bit) {
  for (int r = 2; r <= n - 1; ++r) {
    int len = n - r;
    if (bit < len) return {r, r + bit};
    bit -= len;
  }
  throw Error(ErrorKind::OutOfShape, "interior bit out of range");
}

bool has_dot(const FbTableau& t, Cell c) {
  return is_interior(t.n, c) && ((t.dots >> dot_bit(t.n, c)) & 1u);
}

void validate(const FbTableau& t) {
  const int n = t.n;
  if (n < 1 || n > kMaxSize) throw Error(ErrorKind::ShapeError, "size out of range");
  for (int j = 1; j <= n - 1; ++j)
    if (t.up[j] < 1 || t.up[j] > j + 1)
      throw Error(ErrorKind::ShapeError, "up-arrow of column " + std::to_string(j) + " outside the shape");
  for (int i = 2; i <= n; ++i)
    if (t.left[i] < i - 1 || t.left[i] > n)
      throw Error(ErrorKind::ShapeError, "left-arrow of row " + std::to_string(i) + " outside the shape");
  int cnt = interior_count(n);
  if (cnt < 64 && (t.dots >> cnt) != 0) throw Error(ErrorKind::ShapeError, "dot bit outside the shape");
  for (int j = 1; j <= n - 1; ++j) {
    int r = t.up[j];
    if (r >= 2 && t.left[r] <= j)
      throw Error(ErrorKind::ArrowConflict, "up-arrow at " + cell_str({r, j}) + " has nothing to its left");
  }
  for (int i = 2; i <= n; ++i) {
    int c = t.left[i];
    if (c < n && t.up[c] >= i)
      throw Error(ErrorKind::ArrowConflict, "left-arrow at " + cell_str({i, c}) + " has nothing above it");
  }
  for (int b = 0; b < cnt; ++b) {
    if (!((t.dots >> b) & 1u)) continue;
    Cell c = interior_cell(n, b);
    if (!(t.up[c.col] < c.row && t.left[c.row] > c.col))
      throw Error(ErrorKind::DotNotFree, "dot at " + cell_str(c) + " is not in a free cell");
  }
}

bool is_valid(const FbTableau& t) {
  try {
    validate(t);
    return true;
  } catch (const Error&) {
    return false;
  }
}

FbTableau from_components(int n, const std::vector<int>& up_row, const std::vector<int>& left_col,
                          const std::vector<Cell>& dots) {
  if (n < 1 || n > kMaxSize) throw Error(ErrorKind::ShapeError, "size out of range");
  if (static_cast<int>(up_row.size()) != n - 1 || static_cast<int>(left_col.size()) != n - 1)
    throw Error(ErrorKind::ShapeError, "expected n-1 up-arrows and n-1 left-arrows");
  FbTableau t;
  t.n = n;
  for (int j = 1; j <= n - 1; ++j) {
    int r = up_row[j - 1];
    if (!in_shape(n, {r, j})) throw Error(ErrorKind::ShapeError, "up-arrow at " + cell_str({r, j}));
    t.up[j] = static_cast<std::uint8_t>(r);
  }
  for (int i = 2; i <= n; ++i) {
    int c = left_col[i - 2];
    if (!in_shape(n, {i, c})) throw Error(ErrorKind::ShapeError, "left-arrow at " + cell_str({i, c}));
    t.left[i] = static_cast<std::uint8_t>(c);
  }
  for (Cell c : dots) {
    if (!in_shape(n, c)) throw Error(ErrorKind::ShapeError, "dot at " + cell_str(c));
    if (!is_interior(n, c)) throw Error(ErrorKind::DotNotFree, "dot at " + cell_str(c) + " is not interior");
    t.dots |= std::uint64_t{1} << dot_bit(n, c);
  }
  validate(t);
  return t;
}

Entry cell_content(const FbTableau& t, Cell c) {
  const int n = t.n;
  if (!in_shape(n, c)) throw Error(ErrorKind::OutOfShape, cell_str(c));
  if (c.row == 1 && c.col == n) return Entry::RootDot;
  if (c.col <= n - 1 && t.up[c.col] == c.row) return Entry::UpArrow;
  if (c.row >= 2 && t.left[c.row] == c.col) return Entry::LeftArrow;
  if (is_border(c)) return Entry::Dot;
  if (has_dot(t, c)) return Entry::Dot;
  return Entry::Empty;
}

bool is_nonempty(const FbTableau& t, Cell c) { return cell_content(t, c) != Entry::Empty; }

bool is_free(const FbTableau& t, Cell c) {
  const int n = t.n;
  if (!in_shape(n, c) || c.row < 2 || c.col > n - 1) return false;
  return t.up[c.col] < c.row && t.left[c.row] > c.col;
}

bool is_dotted_free(const FbTableau& t, Cell c) {
  if (!is_free(t, c)) return false;
  return is_border(c) || has_dot(t, c);
}

FbTableau bottom(int n) {
  FbTableau t;
  t.n = n;
  for (int j = 1; j <= n - 1; ++j) t.up[j] = static_cast<std::uint8_t>(j + 1);
  for (int i = 2; i <= n; ++i) t.left[i] = static_cast<std::uint8_t>(n);
  return t;
}

FbTableau top(int n) {
  FbTableau t;
  t.n = n;
  for (int j = 1; j <= n - 1; ++j) t.up[j] = 1;
  for (int i = 2; i <= n; ++i) t.left[i] = static_cast<std::uint8_t>(i - 1);
  return t;
}

std::vector<Cell> cohook(int n, Cell c) {
  if (!in_shape(n, c)) throw Error(ErrorKind::OutOfShape, cell_str(c));
  std::vector<Cell> out{c};
  for (int col = c.col + 1; col <= n; ++col) out.push_back({c.row, col});
  for (int row = 1; row < c.row; ++row) out.push_back({row, c.col});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class Pred>
std::vector<Cell> select_cells(int n, Pred pred) {
  std::vector<Cell> out;
  for (Cell c : shape_cells(n))
    if (pred(c)) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Cell> row_space(const FbTableau& t) {
  return select_cells(t.n, [&](Cell c) { return c.row == 1 || c.col <= t.left[c.row]; });
}

std::vector<Cell> col_space(const FbTableau& t) {
  return select_cells(t.n, [&](Cell c) { return c.col == t.n || c.row >= t.up[c.col]; });
}

std::vector<Cell> row_space_strict(const FbTableau& t) {
  return select_cells(t.n, [&](Cell c) { return c.row >= 2 && c.col < t.left[c.row]; });
}

std::vector<Cell> col_space_strict(const FbTableau& t) {
  return select_cells(t.n, [&](Cell c) { return c.col <= t.n - 1 && c.row > t.up[c.col]; });
}

std::vector<Cell> free_cells(const FbTableau& t) {
  return select_cells(t.n, [&](Cell c) { return is_free(t, c); });
}

std::uint64_t free_interior_mask(const FbTableau& t) {
  const int n = t.n;
  std::uint64_t m = 0;
  for (int r = 2; r <= n - 1; ++r)
    for (int c = r; c <= n - 1; ++c)
      if (t.up[c] < r && t.left[r] > c) m |= std::uint64_t{1} << dot_bit(n, {r, c});
  return m;
}

FbTableau conjugate(const FbTableau& t) {
  const int n = t.n;
  FbTableau s;
  s.n = n;
  for (int i = 2; i <= n; ++i) s.up[n + 1 - i] = static_cast<std::uint8_t>(n + 1 - t.left[i]);
  for (int j = 1; j <= n - 1; ++j) s.left[n + 1 - j] = static_cast<std::uint8_t>(n + 1 - t.up[j]);
  for (int r = 2; r <= n - 1; ++r)
    for (int c = r; c <= n - 1; ++c) {
      if (!(s.up[c] < r && s.left[r] > c)) continue;
      if (!has_dot(t, {n + 1 - c, n + 1 - r})) s.dots |= std::uint64_t{1} << dot_bit(n, {r, c});
    }
  return s;
}

FbTableau reflect_arrows(const FbTableau& t) {
  FbTableau s = conjugate(t);
  s.dots = 0;
  return s;
}

Letter border_letter(const FbTableau& t, int k) {
  if (t.up[k] == k + 1) return Letter::Up;
  if (t.left[k + 1] == k) return Letter::Left;
  return Letter::Dot;
}

std::vector<Letter> border_word(const FbTableau& t) {
  std::vector<Letter> w;
  for (int k = 1; k <= t.n - 1; ++k) w.push_back(border_letter(t, k));
  return w;
}

std::string border_string(const std::vector<Letter>& w) {
  std::string s;
  for (Letter l : w) s += l == Letter::Up ? '^' : l == Letter::Left ? '<' : 'o';
  return s;
}

std::vector<Letter> parse_border(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n - 1)
    throw Error(ErrorKind::BadBorder, "border word must have length n-1");
  std::vector<Letter> w;
  for (char ch : s) {
    if (ch == '^') w.push_back(Letter::Up);
    else if (ch == 'o') w.push_back(Letter::Dot);
    else if (ch == '<') w.push_back(Letter::Left);
    else throw Error(ErrorKind::BadBorder, std::string("unknown border letter '") + ch + "'");
  }
  return w;
}

bool is_small(const FbTableau& t) {
  if (t.dots != 0) return false;
  for (int k = 1; k <= t.n - 1; ++k)
    if (border_letter(t, k) == Letter::Dot) return false;
  return true;
}

bool is_binary(const FbTableau& t) {
  for (Cell c : shape_cells(t.n))
    if (is_free(t, c)) return false;
  return true;
}

Filling empty_filling(int n) {
  return Filling(n + 1, std::vector<char>(n + 1, 0));
}

Filling to_filling(const FbTableau& t) {
  Filling f = empty_filling(t.n);
  for (Cell c : shape_cells(t.n))
    if (is_nonempty(t, c)) f[c.row][c.col] = 1;
  return f;
}

bool is_fb_filling(int n, const Filling& f) {
  if (static_cast<int>(f.size()) != n + 1) return false;
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c)
      if (f[r][c] && !in_shape(n, {r, c})) return false;
  if (!f[1][n]) return false;
  for (int i = 2; i <= n; ++i)
    if (!f[i][i - 1]) return false;
  for (Cell c : shape_cells(n)) {
    if (!f[c.row][c.col] || (c.row == 1 && c.col == n)) continue;
    bool ok = false;
    for (int col = c.col + 1; col <= n && !ok; ++col) ok = f[c.row][col];
    for (int row = 1; row < c.row && !ok; ++row) ok = f[row][c.col];
    if (!ok) return false;
  }
  return true;
}

FbTableau from_filling(int n, const Filling& f) {
  if (!is_fb_filling(n, f)) throw Error(ErrorKind::ArrowConflict, "filling is not an fb-tableau");
  FbTableau t;
  t.n = n;
  for (int j = 1; j <= n - 1; ++j) {
    int r = 1;
    while (!f[r][j]) ++r;
    t.up[j] = static_cast<std::uint8_t>(r);
  }
  for (int i = 2; i <= n; ++i) {
    int c = n;
    while (!f[i][c]) --c;
    t.left[i] = static_cast<std::uint8_t>(c);
  }
  for (int r = 2; r <= n - 1; ++r)
    for (int c = r; c <= n - 1; ++c)
      if (f[r][c] && t.up[c] != r && t.left[r] != c) t.dots |= std::uint64_t{1} << dot_bit(n, {r, c});
  validate(t);
  return t;
}

bool is_minimal(const FbTableau& t) {
  const int n = t.n;
  Filling f = to_filling(t);
  for (Cell c : shape_cells(n)) {
    if ((c.row == 1 && c.col == n) || is_border(c) || !f[c.row][c.col]) continue;
    f[c.row][c.col] = 0;
    bool still = is_fb_filling(n, f);
    f[c.row][c.col] = 1;
    if (still) return false;
  }
  return true;
}

std::string render_text(const FbTableau& t) {
  const int n = t.n;
  std::string out;
  for (int r = 1; r <= n; ++r) {
    if (r > 1) out += '\n';
    for (int c = n; c >= (r == 1 ? 1 : r - 1); --c) {
      switch (cell_content(t, {r, c})) {
        case Entry::RootDot:
        case Entry::Dot: out += 'o'; break;
        case Entry::UpArrow: out += '^'; break;
        case Entry::LeftArrow: out += '<'; break;
        case Entry::Empty: out += '.'; break;
      }
    }
  }
  return out;
}

FbTableau parse_text(const std::string& s) {
  std::string body = s;
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
  std::vector<std::string> lines;
  std::stringstream ss(body);
  for (std::string line; std::getline(ss, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  const int n = static_cast<int>(lines.size());
  if (n < 1 || n > kMaxSize) throw Error(ErrorKind::BadShape, "unsupported number of rows");
  for (int r = 1; r <= n; ++r) {
    const std::string& line = lines[r - 1];
    if (static_cast<int>(line.size()) != row_length(n, r))
      throw Error(ErrorKind::BadShape, "row " + std::to_string(r) + " has length " +
                                           std::to_string(line.size()) + ", expected " +
                                           std::to_string(row_length(n, r)));
    for (char ch : line)
      if (ch != 'o' && ch != '^' && ch != '<' && ch != '.')
        throw Error(ErrorKind::BadChar, std::string("unexpected character '") + ch + "'");
  }
  auto at = [&](int r, int c) { return lines[r - 1][n - c]; };
  std::vector<int> up(n - 1, 0), left(n - 1, 0);
  std::vector<Cell> dots;
  for (int r = 1; r <= n; ++r) {
    for (int c = n; c >= (r == 1 ? 1 : r - 1); --c) {
      char ch = at(r, c);
      if (ch == '^') {
        if (c == n) throw Error(ErrorKind::ArrowConflict, "up-arrow in the leftmost column");
        if (up[c - 1] != 0) throw Error(ErrorKind::ArrowConflict, "two up-arrows in column " + std::to_string(c));
        up[c - 1] = r;
      } else if (ch == '<') {
        if (r == 1) throw Error(ErrorKind::ArrowConflict, "left-arrow in the first row");
        if (left[r - 2] != 0) throw Error(ErrorKind::ArrowConflict, "two left-arrows in row " + std::to_string(r));
        left[r - 2] = c;
      } else if (ch == 'o' && is_interior(n, {r, c})) {
        dots.push_back({r, c});
      } else if (ch == 'o' && r == 1 && c != n) {
        throw Error(ErrorKind::DotNotFree, "dot in the first row");
      } else if (ch == 'o' && r >= 2 && c == n) {
        throw Error(ErrorKind::DotNotFree, "dot in the leftmost column");
      }
    }
  }
  for (int j = 1; j <= n - 1; ++j)
    if (up[j - 1] == 0) throw Error(ErrorKind::ArrowConflict, "column " + std::to_string(j) + " has no up-arrow");
  for (int i = 2; i <= n; ++i)
    if (left[i - 2] == 0) throw Error(ErrorKind::ArrowConflict, "row " + std::to_string(i) + " has no left-arrow");
  FbTableau t = from_components(n, up, left, dots);
  if (render_text(t) != body) throw Error(ErrorKind::ArrowConflict, "root or border cell is empty");
  return t;
}

}  // namespace fbt
