#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fbt {

// Largest supported size: interior dot cells must fit in 64 bits.
constexpr int kMaxSize = 12;

enum class ErrorKind {
  ShapeError,
  ArrowConflict,
  DotNotFree,
  OutOfShape,
  BadChar,
  BadShape,
  SizeMismatch,
  NotChangeable,
  Unrealizable,
  BadBorder,
  NotBinary,
  NotBracketVector,
  BadLabel,
  NotJoinIrreducible,
  NotALattice,
  MemoryBudget,
  TooLarge,
  Unlabeled,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct Cell {
  int row = 1;
  int col = 1;
  auto operator<=>(const Cell&) const = default;
};

enum class Entry { Empty, RootDot, UpArrow, LeftArrow, Dot };

// Border letters, listed in lattice order.
enum class Letter { Up = 0, Dot = 1, Left = 2 };

// Rows and columns are 1-based. Column n is the leftmost column; the root is
// (1, n) and the border cell of row i >= 2 is (i, i-1).
struct FbTableau {
  int n = 1;
  std::array<std::uint8_t, kMaxSize + 1> up{};    // up[j]: row of the up-arrow in column j < n
  std::array<std::uint8_t, kMaxSize + 1> left{};  // left[i]: column of the left-arrow in row i >= 2
  std::uint64_t dots = 0;                         // interior dots, see dot_bit

  bool operator==(const FbTableau&) const = default;
  auto operator<=>(const FbTableau& o) const {
    if (auto c = n <=> o.n; c != 0) return c;
    if (auto c = up <=> o.up; c != 0) return c;
    if (auto c = left <=> o.left; c != 0) return c;
    return dots <=> o.dots;
  }

  int up_row(int col) const { return up[col]; }
  int left_col(int row) const { return left[row]; }
};

struct FbTableauHash {
  std::size_t operator()(const FbTableau& t) const;
};

// Shape helpers.
bool in_shape(int n, Cell c);
bool is_border(Cell c);
std::vector<Cell> shape_cells(int n);
int row_length(int n, int row);

// Interior cells: 2 <= r <= c <= n-1. Those are the only cells whose dot is stored.
int interior_count(int n);
bool is_interior(int n, Cell c);
int dot_bit(int n, Cell c);
Cell interior_cell(int n, int bit);
bool has_dot(const FbTableau& t, Cell c);

FbTableau from_components(int n, const std::vector<int>& up_row, const std::vector<int>& left_col,
                          const std::vector<Cell>& dots);
// Throws the first violated invariant.
void validate(const FbTableau& t);
bool is_valid(const FbTableau& t);

Entry cell_content(const FbTableau& t, Cell c);
bool is_nonempty(const FbTableau& t, Cell c);
bool is_free(const FbTableau& t, Cell c);
// Free cells holding a dot, including derived border dots.
bool is_dotted_free(const FbTableau& t, Cell c);

FbTableau bottom(int n);
FbTableau top(int n);

std::vector<Cell> cohook(int n, Cell c);
std::vector<Cell> row_space(const FbTableau& t);
std::vector<Cell> col_space(const FbTableau& t);
std::vector<Cell> row_space_strict(const FbTableau& t);
std::vector<Cell> col_space_strict(const FbTableau& t);
std::vector<Cell> free_cells(const FbTableau& t);
std::uint64_t free_interior_mask(const FbTableau& t);

FbTableau conjugate(const FbTableau& t);
// Reflection of the arrows only, no dots. Used on small tableaux.
FbTableau reflect_arrows(const FbTableau& t);

Letter border_letter(const FbTableau& t, int k);
std::vector<Letter> border_word(const FbTableau& t);
std::string border_string(const std::vector<Letter>& w);  // letters ^ o <
std::vector<Letter> parse_border(const std::string& s, int n);

bool is_small(const FbTableau& t);
bool is_binary(const FbTableau& t);
bool is_minimal(const FbTableau& t);

// Raw dot fillings before arrows are assigned; grid[row][col], 1-based.
using Filling = std::vector<std::vector<char>>;
Filling empty_filling(int n);
Filling to_filling(const FbTableau& t);
bool is_fb_filling(int n, const Filling& f);
FbTableau from_filling(int n, const Filling& f);

FbTableau parse_text(const std::string& s);
std::string render_text(const FbTableau& t);

}  // namespace fbt
