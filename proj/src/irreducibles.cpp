#include "fbt/irreducibles.hpp"

#include <map>

namespace fbt {

const char* family_name(Family f) {
  switch (f) {
    case Family::ESTam: return "estam";
    case Family::STam: return "stam";
    case Family::Tam: return "tam";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "estam") return Family::ESTam;
  if (s == "stam") return Family::STam;
  if (s == "tam") return Family::Tam;
  throw Error(ErrorKind::BadLabel, "unknown family '" + s + "'");
}

TableauClass family_class(Family f) {
  switch (f) {
    case Family::ESTam: return TableauClass::All;
    case Family::STam: return TableauClass::Small;
    case Family::Tam: return TableauClass::Binary;
  }
  return TableauClass::All;
}

std::vector<EdgeLabel> join_irr_labels(int n, Family f) {
  if (f == Family::Tam) throw Error(ErrorKind::BadLabel, "no (i,j,s) labels for the binary family");
  std::vector<EdgeLabel> out;
  for (int j = 1; j <= n - 1; ++j)
    for (int i = 1; i <= j; ++i)
      for (Sigma s : {Sigma::Empty, Sigma::Dot, Sigma::Left}) {
        if (i == j && s == Sigma::Empty) continue;
        if (f == Family::STam && s == Sigma::Dot) continue;
        out.push_back({i, j, s});
      }
  return out;
}

namespace {

FbTableau arrows_for(int n, const EdgeLabel& l) {
  FbTableau t;
  t.n = n;
  for (int c = 1; c <= n - 1; ++c) t.up[c] = static_cast<std::uint8_t>(c + 1);
  for (int r = 2; r <= n; ++r) t.left[r] = static_cast<std::uint8_t>(n);
  t.up[l.j] = static_cast<std::uint8_t>(l.i);
  return t;
}

}  // namespace

FbTableau join_irr_tableau(int n, const EdgeLabel& l) {
  if (n > kMaxSize || !is_legal_label(n, l)) throw Error(ErrorKind::BadLabel, label_string(l));
  FbTableau t = arrows_for(n, l);
  if (l.sigma == Sigma::Left) t.left[l.i + 1] = static_cast<std::uint8_t>(l.j);
  if (l.sigma == Sigma::Dot && l.i < l.j) t.dots |= std::uint64_t{1} << dot_bit(n, {l.i + 1, l.j});
  validate(t);
  return t;
}

EdgeLabel classify_join_irr(const FbTableau& t) {
  const int n = t.n;
  int col = 0;
  for (int c = 1; c <= n - 1; ++c)
    if (t.up[c] != c + 1) {
      if (col != 0) throw Error(ErrorKind::NotJoinIrreducible, "two up-arrows off the border");
      col = c;
    }
  if (col == 0) throw Error(ErrorKind::NotJoinIrreducible, "all up-arrows on the border");
  EdgeLabel l{t.up[col], col, Sigma::Empty};
  Entry below = cell_content(t, {l.i + 1, l.j});
  if (below == Entry::LeftArrow) l.sigma = Sigma::Left;
  else if (below == Entry::Dot) l.sigma = Sigma::Dot;
  if (!is_legal_label(n, l) || join_irr_tableau(n, l) != t)
    throw Error(ErrorKind::NotJoinIrreducible, render_text(t));
  return l;
}

FbTableau meet_irr_tableau(int n, const EdgeLabel& l) { return conjugate(join_irr_tableau(n, l)); }

FbTableau small_join_irr_tableau(int n, const EdgeLabel& l) {
  if (n > kMaxSize || !is_legal_label(n, l) || l.sigma == Sigma::Dot)
    throw Error(ErrorKind::BadLabel, label_string(l));
  FbTableau t = arrows_for(n, l);
  t.left[l.j + 1] = static_cast<std::uint8_t>(l.j);
  if (l.sigma == Sigma::Left) t.left[l.i + 1] = static_cast<std::uint8_t>(l.j);
  validate(t);
  return t;
}

EdgeLabel classify_small_join_irr(const FbTableau& t) {
  for (const EdgeLabel& l : join_irr_labels(t.n, Family::STam))
    if (small_join_irr_tableau(t.n, l) == t) return l;
  throw Error(ErrorKind::NotJoinIrreducible, render_text(t));
}

namespace {

LabeledPoset poset_on(const std::vector<EdgeLabel>& labels,
                      const std::vector<std::pair<EdgeLabel, EdgeLabel>>& less) {
  std::map<EdgeLabel, int> idx;
  std::vector<std::string> names;
  for (const auto& l : labels) {
    idx[l] = static_cast<int>(names.size());
    names.push_back(label_string(l));
  }
  std::vector<std::pair<int, int>> rel;
  for (auto& [a, b] : less) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia != idx.end() && ib != idx.end()) rel.push_back({ia->second, ib->second});
  }
  return LabeledPoset::from_relations(names, rel);
}

}  // namespace

LabeledPoset join_irr_poset(int n) {
  auto labels = join_irr_labels(n);
  std::vector<std::pair<EdgeLabel, EdgeLabel>> less;
  for (int j = 1; j <= n - 1; ++j) {
    for (int i = 1; i < j; ++i) {
      less.push_back({{i, j, Sigma::Empty}, {i, j, Sigma::Dot}});
      less.push_back({{i, j, Sigma::Dot}, {i, j, Sigma::Left}});
    }
    less.push_back({{j, j, Sigma::Dot}, {j, j, Sigma::Left}});
    if (j >= 2) less.push_back({{j, j, Sigma::Dot}, {j - 1, j, Sigma::Empty}});
    for (int i = j - 1; i >= 2; --i) less.push_back({{i, j, Sigma::Empty}, {i - 1, j, Sigma::Empty}});
  }
  return poset_on(labels, less);
}

LabeledPoset forcing_poset(int n, Family f) {
  auto labels = join_irr_labels(n, f);
  std::vector<std::pair<EdgeLabel, EdgeLabel>> less;
  if (f == Family::ESTam) {
    for (const auto& a : labels) {
      int i = a.i, j = a.j;
      if (j - i >= 1) less.push_back({a, {i, j - 1, Sigma::Left}});
      if (j - i >= 2) less.push_back({a, {i + 1, j, Sigma::Empty}});
      if (j - i == 1) less.push_back({a, {i + 1, i + 1, Sigma::Dot}});
    }
  } else {
    for (const auto& a : labels) {
      int i = a.i, j = a.j;
      if (j - i > 1) {
        less.push_back({a, {i + 1, j, Sigma::Empty}});
        less.push_back({a, {i, j - 1, Sigma::Left}});
      } else if (j - i == 1) {
        less.push_back({a, {i + 1, i + 1, Sigma::Left}});
        less.push_back({a, {i, i, Sigma::Left}});
      }
    }
  }
  return poset_on(labels, less);
}

EdgeLabel ColoredInterval::label() const {
  switch (color) {
    case Color::Red: return {i, j, Sigma::Left};
    case Color::Blue: return {i, j, Sigma::Dot};
    case Color::Green: return {i, j, i == j ? Sigma::Dot : Sigma::Empty};
  }
  return {i, j, Sigma::Left};
}

std::vector<ColoredInterval> colored_intervals(int n) {
  std::vector<ColoredInterval> out;
  for (int j = 1; j <= n - 1; ++j)
    for (int i = 1; i <= j; ++i) {
      out.push_back({i, j, Color::Red});
      out.push_back({i, j, Color::Green});
      if (i < j) out.push_back({i, j, Color::Blue});
    }
  return out;
}

namespace {

// [a] below [b] in the inclusion poset, before transitive closure.
bool inclusion_rule(const ColoredInterval& a, const ColoredInterval& b) {
  // Same-interval pairs are excluded; otherwise red and green of one interval would be equivalent.
  if (a.color == Color::Red && b.i == a.i && b.j > a.j) return true;
  if (a.color == Color::Green && b.j == a.j && b.i < a.i) return true;
  if (a.color != Color::Blue && b.i < a.i && a.j < b.j) return true;
  return false;
}

bool product_rule(const ColoredInterval& a, const ColoredInterval& b) {
  const int i = a.i, j = a.j, k = b.i, l = b.j;
  switch (a.color) {
    case Color::Red:
      if (b.color == Color::Green) return i <= k && j <= l;
      return i == k && j <= l;
    case Color::Blue:
      if (b.color == Color::Blue) return i == k && j == l;
      return b.color == Color::Green && i <= k && j == l;
    case Color::Green:
      return b.color == Color::Green && i <= k && j == l;
  }
  return false;
}

}  // namespace

LabeledPoset colored_poset(int n, ColoredOrder kind) {
  auto elems = colored_intervals(n);
  std::vector<std::string> names;
  for (const auto& e : elems) names.push_back(label_string(e.label()));
  std::vector<std::pair<int, int>> less;
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if (a == b) continue;
      bool r = kind == ColoredOrder::Inclusion ? inclusion_rule(elems[a], elems[b]) : product_rule(elems[a], elems[b]);
      if (r) less.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
  return LabeledPoset::from_relations(names, less);
}

}  // namespace fbt
