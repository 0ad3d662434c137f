#include <doctest.h>

#include <map>
#include <set>

#include "fbt/enumerate.hpp"
#include "fbt/tableau.hpp"
#include "oracle.hpp"

using namespace fbt;

namespace {

// Worked size-5 examples, as text grids.
const char* kRowColExample = "o.^^.\n..<.^\n...<\n<^o\n.<";
const char* kConjugateIn = "o.^^.\n..<.^\n<.oo\n<^o\n<o";
const char* kConjugateOut = "o.^^^\n...<o\n<^.o\n<oo\n.<";

std::set<std::pair<int, int>> as_pairs(const std::vector<Cell>& cells) {
  std::set<std::pair<int, int>> out;
  for (Cell c : cells) out.insert({c.row, c.col});
  return out;
}

}  // namespace

TEST_CASE("from_components builds the size-2 bottom") {
  FbTableau t = from_components(2, {2}, {2}, {});
  CHECK(render_text(t) == "o.\n<^");
  CHECK(t == bottom(2));
}

TEST_CASE("from_components size 1") {
  FbTableau t = from_components(1, {}, {}, {});
  CHECK(t.n == 1);
  CHECK(render_text(t) == "o");
}

TEST_CASE("from_components rejects an up-arrow without a left-arrow to its left") {
  try {
    from_components(2, {2}, {1}, {});
    FAIL("expected ArrowConflict");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ArrowConflict);
  }
  CHECK(enumerate(2).size() == 3);
}

TEST_CASE("from_components error kinds") {
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Unlabeled;
  };
  CHECK(kind_of([] { from_components(3, {1, 4}, {3, 3}, {}); }) == ErrorKind::ShapeError);
  CHECK(kind_of([] { from_components(3, {1, 1}, {3, 3}, {{4, 2}}); }) == ErrorKind::ShapeError);
  // (2,2) is strictly right of the row-2 arrow only if left_col[2] > 2.
  CHECK(kind_of([] { from_components(3, {1, 1}, {2, 3}, {{2, 2}}); }) == ErrorKind::DotNotFree);
  CHECK(kind_of([] { from_components(3, {1, 1}, {3, 3}, {{2, 1}}); }) == ErrorKind::DotNotFree);
  CHECK(kind_of([] { from_components(3, {1}, {3, 3}, {}); }) == ErrorKind::ShapeError);
}

TEST_CASE("cell_content on size 2") {
  auto all = enumerate(2);
  REQUIRE(all.size() == 3);
  FbTableau middle = parse_text("o^\n<o");
  CHECK(cell_content(middle, {2, 1}) == Entry::Dot);
  CHECK(cell_content(bottom(2), {1, 1}) == Entry::Empty);
  for (const auto& t : all) CHECK(cell_content(t, {1, 2}) == Entry::RootDot);
  CHECK_THROWS_AS(cell_content(middle, {3, 1}), Error);
}

TEST_CASE("cohook") {
  auto pairs = [](int n, Cell c) { return as_pairs(cohook(n, c)); };
  CHECK(pairs(3, {3, 2}) == std::set<std::pair<int, int>>{{3, 2}, {3, 3}, {1, 2}, {2, 2}});
  CHECK(pairs(3, {1, 3}) == std::set<std::pair<int, int>>{{1, 3}});
  CHECK(pairs(5, {4, 4}) == std::set<std::pair<int, int>>{{4, 4}, {4, 5}, {1, 4}, {2, 4}, {3, 4}});
  CHECK_THROWS_AS(cohook(3, {3, 1}), Error);
}

TEST_CASE("row, column and free spaces of the worked example") {
  FbTableau t = parse_text(kRowColExample);
  std::set<std::pair<int, int>> red{{1, 5}, {1, 4}, {1, 3}, {1, 2}, {1, 1}, {2, 3}, {2, 2},
                                    {2, 1}, {3, 2}, {4, 5}, {4, 4}, {4, 3}, {5, 4}};
  std::set<std::pair<int, int>> green{{1, 5}, {1, 3}, {1, 2}, {2, 5}, {2, 3}, {2, 2}, {2, 1}, {3, 5},
                                      {3, 3}, {3, 2}, {4, 5}, {4, 4}, {4, 3}, {5, 5}, {5, 4}};
  CHECK(as_pairs(row_space(t)) == red);
  CHECK(as_pairs(col_space(t)) == green);
  CHECK(as_pairs(free_cells(t)) == std::set<std::pair<int, int>>{{2, 2}, {4, 3}});
}

TEST_CASE("spaces agree with the grid oracle, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate(n)) {
      auto g = oracle::Grid::parse(render_text(t));
      CHECK(as_pairs(row_space(t)) == g.row_space());
      CHECK(as_pairs(col_space(t)) == g.col_space());
      CHECK(as_pairs(free_cells(t)) == g.free_cells());
      auto strict = as_pairs(row_space_strict(t));
      auto cstrict = as_pairs(col_space_strict(t));
      std::set<std::pair<int, int>> both;
      for (auto& rc : strict)
        if (cstrict.count(rc)) both.insert(rc);
      CHECK(both == as_pairs(free_cells(t)));
    }
}

TEST_CASE("bottom has no free cells") {
  for (int n = 1; n <= 6; ++n) CHECK(free_cells(bottom(n)).empty());
}

TEST_CASE("dots occupy free cells; free border cells are the dotted border cells") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& t : enumerate(n)) {
      auto fc = as_pairs(free_cells(t));
      for (Cell c : shape_cells(n)) {
        if (has_dot(t, c)) CHECK(fc.count({c.row, c.col}));
        if (is_border(c)) CHECK((fc.count({c.row, c.col}) == 1) == (cell_content(t, c) == Entry::Dot));
      }
    }
}

TEST_CASE("conjugate of the worked example") {
  CHECK(render_text(conjugate(parse_text(kConjugateIn))) == kConjugateOut);
  CHECK(render_text(conjugate(parse_text(kConjugateOut))) == kConjugateIn);
}

TEST_CASE("conjugation is an involution exchanging bottom and top, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(conjugate(bottom(n)) == top(n));
    for (const auto& t : enumerate(n)) {
      FbTableau c = conjugate(t);
      CHECK(is_valid(c));
      CHECK(conjugate(c) == t);
    }
  }
}

TEST_CASE("border words") {
  CHECK(border_string(border_word(parse_text("o^\n<o"))) == "o");
  for (int n = 2; n <= 6; ++n) CHECK(border_string(border_word(bottom(n))) == std::string(n - 1, '^'));
  std::map<std::vector<Letter>, int> fibers;
  for (const auto& t : enumerate(3)) fibers[border_word(t)]++;
  CHECK(fibers.size() == 9);
  int total = 0;
  for (auto& [w, k] : fibers) total += k;
  CHECK(total == 21);
}

TEST_CASE("border word of the conjugate is reversed and swapped, n <= 4") {
  auto swap = [](Letter l) { return l == Letter::Up ? Letter::Left : l == Letter::Left ? Letter::Up : l; };
  for (int n = 2; n <= 4; ++n)
    for (const auto& t : enumerate(n)) {
      auto w = border_word(t);
      std::vector<Letter> expect(w.rbegin(), w.rend());
      for (auto& l : expect) l = swap(l);
      CHECK(border_word(conjugate(t)) == expect);
    }
}

TEST_CASE("parse_border") {
  auto w = parse_border("^o<", 4);
  CHECK(w == std::vector<Letter>{Letter::Up, Letter::Dot, Letter::Left});
  CHECK_THROWS_AS(parse_border("^x<", 4), Error);
  CHECK_THROWS_AS(parse_border("^o", 4), Error);
}

TEST_CASE("small, binary, minimal") {
  CHECK(count(4, TableauClass::Small) == 24);
  CHECK(count(4, TableauClass::Binary) == 14);
  FbTableau min4 = parse_text("o.^.\n..<^\n<^o\n.<");
  CHECK(is_minimal(min4));
  CHECK_FALSE(is_small(min4));
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : enumerate(n))
      if (is_binary(t)) CHECK(is_small(t));
}

TEST_CASE("minimal tableaux are not closed under meets at size 5") {
  FbTableau a = parse_text("o..^.\n...<^\n<.^o\n..<\n<^");
  FbTableau b = parse_text("o.^.^\n....<\n..<^\n<^o\n.<");
  CHECK(is_minimal(a));
  CHECK(is_minimal(b));
}

TEST_CASE("text round trip") {
  CHECK(parse_text("o.\n<^") == bottom(2));
  CHECK(parse_text("o^\n.<") == top(2));
  CHECK(parse_text("o\n").n == 1);
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate(n)) CHECK(parse_text(render_text(t) + "\n") == t);
}

TEST_CASE("text parse errors") {
  auto kind_of = [](const std::string& s) {
    try {
      parse_text(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Unlabeled;
  };
  CHECK(kind_of("o.\n<x") == ErrorKind::BadChar);
  CHECK(kind_of("o..\n<^") == ErrorKind::BadShape);
  CHECK(kind_of("o.\n..") == ErrorKind::ArrowConflict);
}

TEST_CASE("enumeration equals the filling definition, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::string> mine;
    for (const auto& t : enumerate(n)) mine.push_back(render_text(t));
    std::sort(mine.begin(), mine.end());
    CHECK(mine == oracle::fb_fillings(n));
  }
}

TEST_CASE("filling round trip, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate(n)) {
      auto f = to_filling(t);
      CHECK(is_fb_filling(n, f));
      CHECK(from_filling(n, f) == t);
    }
}
