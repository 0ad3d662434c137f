#include "fbt/lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <random>

#include "fbt/tableau.hpp"

namespace fbt {

FiniteLattice FiniteLattice::build(std::size_t n, const std::function<bool(Index, Index)>& leq,
                                   std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::NotALattice, "empty poset");
  if (n > cap)
    throw Error(ErrorKind::MemoryBudget, std::to_string(n) + " elements exceed the table cap of " +
                                             std::to_string(cap));
  FiniteLattice L;
  L.n_ = n;
  L.words_ = (n + 63) / 64;
  L.below_.assign(n, std::vector<std::uint64_t>(L.words_, 0));
  L.above_.assign(n, std::vector<std::uint64_t>(L.words_, 0));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (leq(a, b)) {
        L.below_[b][a >> 6] |= std::uint64_t{1} << (a & 63);
        L.above_[a][b >> 6] |= std::uint64_t{1} << (b & 63);
      }
  std::vector<std::size_t> down_count(n), up_count(n);
  for (Index x = 0; x < n; ++x) {
    for (auto w : L.below_[x]) down_count[x] += std::popcount(w);
    for (auto w : L.above_[x]) up_count[x] += std::popcount(w);
  }
  L.order_.resize(n);
  std::iota(L.order_.begin(), L.order_.end(), 0);
  std::stable_sort(L.order_.begin(), L.order_.end(),
                   [&](Index a, Index b) { return down_count[a] < down_count[b]; });

  std::vector<std::uint64_t> common(L.words_);
  auto bound = [&](Index x, Index y, const std::vector<std::vector<std::uint64_t>>& sets,
                   const std::vector<std::size_t>& weight, const char* what) -> Index {
    for (std::size_t w = 0; w < L.words_; ++w) common[w] = sets[x][w] & sets[y][w];
    Index best = 0;
    std::size_t best_weight = 0;
    bool any = false;
    for (std::size_t w = 0; w < L.words_; ++w)
      for (std::uint64_t bits = common[w]; bits; bits &= bits - 1) {
        Index z = static_cast<Index>(w * 64 + std::countr_zero(bits));
        if (!any || weight[z] > best_weight) best = z, best_weight = weight[z], any = true;
      }
    bool ok = any;
    const auto& best_set = sets[best];
    for (std::size_t w = 0; w < L.words_ && ok; ++w) ok = (common[w] & ~best_set[w]) == 0;
    if (!ok)
      throw Error(ErrorKind::NotALattice, std::string("no ") + what + " for (" + std::to_string(x) + "," +
                                              std::to_string(y) + ")");
    return best;
  };
  L.meet_.assign(n * n, 0);
  L.join_.assign(n * n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index y = x; y < n; ++y) {
      Index m = bound(x, y, L.below_, down_count, "meet");
      Index j = bound(x, y, L.above_, up_count, "join");
      L.meet_[x * n + y] = L.meet_[y * n + x] = m;
      L.join_[x * n + y] = L.join_[y * n + x] = j;
    }
  L.bottom_ = L.order_.front();
  L.top_ = L.order_.back();
  for (Index x = 0; x < n; ++x)
    if (!L.leq(L.bottom_, x) || !L.leq(x, L.top_)) throw Error(ErrorKind::NotALattice, "no bottom or top");

  L.up_.assign(n, {});
  L.down_.assign(n, {});
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (x == y || !L.leq(x, y)) continue;
      std::size_t between = 0;
      for (std::size_t w = 0; w < L.words_; ++w) between += std::popcount(L.above_[x][w] & L.below_[y][w]);
      if (between == 2) {
        L.up_[x].push_back(y);
        L.down_[y].push_back(x);
      }
    }
  return L;
}

std::vector<std::pair<Index, Index>> FiniteLattice::edges() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index x = 0; x < n_; ++x)
    for (Index y : up_[x]) out.push_back({x, y});
  return out;
}

bool check_partial_order(std::size_t n, const std::function<bool(Index, Index)>& leq) {
  std::vector<std::vector<char>> r(n, std::vector<char>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) r[a][b] = leq(a, b);
  for (Index a = 0; a < n; ++a) {
    if (!r[a][a]) return false;
    for (Index b = 0; b < n; ++b) {
      if (a != b && r[a][b] && r[b][a]) return false;
      if (!r[a][b]) continue;
      for (Index c = 0; c < n; ++c)
        if (r[b][c] && !r[a][c]) return false;
    }
  }
  return true;
}

bool check_lattice_laws(const FiniteLattice& L, std::size_t assoc_limit) {
  const Index n = static_cast<Index>(L.size());
  for (Index x = 0; x < n; ++x) {
    if (L.meet(x, x) != x || L.join(x, x) != x) return false;
    for (Index y = 0; y < n; ++y) {
      if (L.meet(x, y) != L.meet(y, x) || L.join(x, y) != L.join(y, x)) return false;
      if (L.meet(x, L.join(x, y)) != x || L.join(x, L.meet(x, y)) != x) return false;
    }
  }
  auto assoc = [&](Index x, Index y, Index z) {
    return L.meet(x, L.meet(y, z)) == L.meet(L.meet(x, y), z) &&
           L.join(x, L.join(y, z)) == L.join(L.join(x, y), z);
  };
  if (n <= assoc_limit) {
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        for (Index z = 0; z < n; ++z)
          if (!assoc(x, y, z)) return false;
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    for (int k = 0; k < 200000; ++k)
      if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

bool check_semidistributive(const FiniteLattice& L) {
  const Index n = static_cast<Index>(L.size());
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y) {
      Index xy_meet = L.meet(x, y), xy_join = L.join(x, y);
      for (Index z = 0; z < n; ++z) {
        Index jx = L.join(x, z);
        if (jx == L.join(y, z) && L.join(xy_meet, z) != jx) return false;
        Index mx = L.meet(x, z);
        if (mx == L.meet(y, z) && L.meet(xy_join, z) != mx) return false;
      }
    }
  return true;
}

bool check_distributive(const FiniteLattice& L) {
  const Index n = static_cast<Index>(L.size());
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
  return true;
}

bool check_selfdual(const FiniteLattice& L, const std::vector<Index>& anti) {
  const Index n = static_cast<Index>(L.size());
  if (anti.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Index x : anti) {
    if (x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (L.leq(a, b) != L.leq(anti[b], anti[a])) return false;
  return true;
}

std::vector<Index> join_irreducibles(const FiniteLattice& L) {
  std::vector<Index> out;
  for (Index x = 0; x < L.size(); ++x)
    if (L.lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

std::vector<Index> meet_irreducibles(const FiniteLattice& L) {
  std::vector<Index> out;
  for (Index x = 0; x < L.size(); ++x)
    if (L.upper_covers(x).size() == 1) out.push_back(x);
  return out;
}

namespace {

void chain_lengths(const FiniteLattice& L, std::vector<std::size_t>& from_bottom, std::vector<std::size_t>& to_top) {
  const auto& ord = L.linear_extension();
  from_bottom.assign(L.size(), 0);
  to_top.assign(L.size(), 0);
  for (Index x : ord)
    for (Index y : L.upper_covers(x)) from_bottom[y] = std::max(from_bottom[y], from_bottom[x] + 1);
  for (auto it = ord.rbegin(); it != ord.rend(); ++it)
    for (Index y : L.lower_covers(*it)) to_top[y] = std::max(to_top[y], to_top[*it] + 1);
}

}  // namespace

ExtremalReport check_extremal(const FiniteLattice& L) {
  ExtremalReport r;
  std::vector<std::size_t> fb, tt;
  chain_lengths(L, fb, tt);
  r.longest_chain = fb[L.top()];
  r.join_irr = join_irreducibles(L).size();
  r.meet_irr = meet_irreducibles(L).size();
  r.extremal = r.longest_chain == r.join_irr && r.longest_chain == r.meet_irr;
  return r;
}

bool is_trim(const FiniteLattice& L) { return check_semidistributive(L) && check_extremal(L).extremal; }

std::vector<bool> spine_by_chains(const FiniteLattice& L) {
  std::vector<std::size_t> fb, tt;
  chain_lengths(L, fb, tt);
  std::vector<bool> out(L.size());
  for (Index x = 0; x < L.size(); ++x) out[x] = fb[x] + tt[x] == fb[L.top()];
  return out;
}

std::pair<std::size_t, std::size_t> Polygon::shape() const {
  std::size_t a = side_a.size() - 1, b = side_b.size() - 1;
  return {std::min(a, b), std::max(a, b)};
}

namespace {

// Builds the polygon [lo, hi] or returns false.
bool interval_polygon(const FiniteLattice& L, Index lo, Index hi, Polygon& out) {
  auto inside = [&](Index z) { return L.leq(lo, z) && L.leq(z, hi); };
  std::vector<Index> starts;
  for (Index y : L.upper_covers(lo))
    if (inside(y)) starts.push_back(y);
  if (starts.size() != 2) return false;
  std::vector<std::vector<Index>> sides;
  for (Index s : starts) {
    std::vector<Index> chain{lo, s};
    Index cur = s;
    while (cur != hi) {
      Index next = 0;
      int cnt = 0;
      for (Index y : L.upper_covers(cur))
        if (inside(y)) next = y, ++cnt;
      if (cnt != 1) return false;
      int lower = 0;
      for (Index y : L.lower_covers(cur))
        if (inside(y)) ++lower;
      if (lower != 1) return false;
      chain.push_back(next);
      cur = next;
    }
    sides.push_back(std::move(chain));
  }
  std::size_t size = 0;
  for (Index z = 0; z < L.size(); ++z) size += inside(z);
  if (size != sides[0].size() + sides[1].size() - 2) return false;
  out.bottom = lo;
  out.top = hi;
  out.side_a = sides[0];
  out.side_b = sides[1];
  return true;
}

}  // namespace

std::vector<Polygon> polygons(const FiniteLattice& L, bool* ok) {
  std::vector<Polygon> out;
  std::set<std::pair<Index, Index>> seen;
  bool good = true;
  auto add = [&](Index lo, Index hi) {
    if (!seen.insert({lo, hi}).second) return;
    Polygon p;
    if (interval_polygon(L, lo, hi, p)) out.push_back(std::move(p));
    else good = false;
  };
  for (Index x = 0; x < L.size(); ++x) {
    const auto& up = L.upper_covers(x);
    for (std::size_t a = 0; a < up.size(); ++a)
      for (std::size_t b = a + 1; b < up.size(); ++b) add(x, L.join(up[a], up[b]));
    const auto& down = L.lower_covers(x);
    for (std::size_t a = 0; a < down.size(); ++a)
      for (std::size_t b = a + 1; b < down.size(); ++b) add(L.meet(down[a], down[b]), x);
  }
  if (ok) *ok = good;
  return out;
}

bool check_polygonal(const FiniteLattice& L, const std::set<std::pair<std::size_t, std::size_t>>& shapes) {
  bool ok = true;
  auto ps = polygons(L, &ok);
  if (!ok) return false;
  for (const auto& p : ps)
    if (!shapes.count(p.shape())) return false;
  return true;
}

std::unordered_map<std::uint64_t, Index> join_labelling(const FiniteLattice& L) {
  std::unordered_map<std::uint64_t, Index> out;
  auto ji = join_irreducibles(L);
  for (auto [x, y] : L.edges()) {
    int found = 0;
    Index label = 0;
    for (Index j : ji) {
      Index lower = L.lower_covers(j)[0];
      if (L.join(x, j) == y && L.join(x, lower) == x) label = j, ++found;
    }
    if (found == 1) out[edge_key(L, x, y)] = label;
  }
  return out;
}

bool verify_polygonal_labeling(const FiniteLattice& L, const std::function<int(Index, Index)>& label,
                               const std::function<int(int)>& rank) {
  bool ok = true;
  auto ps = polygons(L, &ok);
  if (!ok) return false;
  auto side_ok = [&](const std::vector<Index>& chain) {
    std::vector<int> r;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) r.push_back(rank(label(chain[k], chain[k + 1])));
    const std::size_t p = r.size() - 1;
    for (std::size_t k = 0; k + 1 <= p / 2; ++k) {
      int lo = std::max(r[k], r[p - k]);
      int hi = std::min(r[k + 1], r[p - k - 1]);
      if (!(lo < hi)) return false;
    }
    return true;
  };
  for (const auto& poly : ps) {
    const auto& a = poly.side_a;
    const auto& b = poly.side_b;
    int s0 = label(a[0], a[1]), sp = label(a[a.size() - 2], a.back());
    int t0 = label(b[0], b[1]), tq = label(b[b.size() - 2], b.back());
    if (s0 < 0 || sp < 0 || t0 < 0 || tq < 0) throw Error(ErrorKind::Unlabeled, "polygon edge without label");
    if (s0 != tq || t0 != sp) return false;
    if (!side_ok(a) || !side_ok(b)) return false;
  }
  return true;
}

std::vector<Index> congruence_of(const FiniteLattice& L, Index a, Index b) {
  const Index n = static_cast<Index>(L.size());
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::deque<std::pair<Index, Index>> todo{{a, b}};
  while (!todo.empty()) {
    auto [x, y] = todo.front();
    todo.pop_front();
    Index rx = find(x), ry = find(y);
    if (rx == ry) continue;
    parent[std::max(rx, ry)] = std::min(rx, ry);
    for (Index z = 0; z < n; ++z) {
      Index m1 = L.meet(x, z), m2 = L.meet(y, z);
      if (find(m1) != find(m2)) todo.push_back({m1, m2});
      Index j1 = L.join(x, z), j2 = L.join(y, z);
      if (find(j1) != find(j2)) todo.push_back({j1, j2});
    }
  }
  std::vector<Index> rep(n);
  std::vector<Index> least(n, n);
  for (Index x = 0; x < n; ++x) least[find(x)] = std::min(least[find(x)], x);
  for (Index x = 0; x < n; ++x) rep[x] = least[find(x)];
  return rep;
}

namespace {

bool refines(const std::vector<Index>& fine, const std::vector<Index>& coarse) {
  for (std::size_t x = 0; x < fine.size(); ++x)
    if (coarse[x] != coarse[fine[x]]) return false;
  return true;
}

int class_id(std::vector<std::vector<Index>>& list, const std::vector<Index>& c) {
  for (std::size_t k = 0; k < list.size(); ++k)
    if (list[k] == c) return static_cast<int>(k);
  list.push_back(c);
  return static_cast<int>(list.size() - 1);
}

}  // namespace

CongruenceLattice congruence_lattice(const FiniteLattice& L, std::size_t max_size) {
  if (L.size() > max_size)
    throw Error(ErrorKind::TooLarge, "congruence closure limited to " + std::to_string(max_size) + " elements");
  CongruenceLattice C;
  C.ji = join_irreducibles(L);
  C.mi = meet_irreducibles(L);
  for (Index j : C.ji) C.ji_class.push_back(class_id(C.congruences, congruence_of(L, L.lower_covers(j)[0], j)));
  for (Index m : C.mi) C.mi_class.push_back(class_id(C.congruences, congruence_of(L, m, L.upper_covers(m)[0])));
  // Every cover congruence is some con(j); keep only those reached from join-irreducibles.
  std::size_t k = C.congruences.size();
  std::vector<std::string> labels;
  std::vector<int> first_ji(k, -1);
  for (std::size_t a = 0; a < C.ji.size(); ++a)
    if (first_ji[C.ji_class[a]] < 0) first_ji[C.ji_class[a]] = static_cast<int>(a);
  std::vector<int> keep;
  for (std::size_t c = 0; c < k; ++c)
    if (first_ji[c] >= 0) keep.push_back(static_cast<int>(c));
  for (int c : keep) labels.push_back(std::to_string(C.ji[first_ji[c]]));
  std::vector<std::pair<int, int>> less;
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      if (a != b && refines(C.congruences[keep[a]], C.congruences[keep[b]]))
        less.push_back({static_cast<int>(a), static_cast<int>(b)});
  C.forcing = LabeledPoset::from_relations(labels, less);
  C.count = count_order_ideals(C.forcing);
  return C;
}

bool check_congruence_uniform(const CongruenceLattice& C) {
  std::set<int> from_ji(C.ji_class.begin(), C.ji_class.end());
  std::set<int> from_mi(C.mi_class.begin(), C.mi_class.end());
  return from_ji.size() == C.ji.size() && from_mi.size() == C.mi.size() && from_ji == from_mi &&
         from_ji.size() == C.congruences.size();
}

mpz_class count_congruences_by_closure(const FiniteLattice& L, const CongruenceLattice& C) {
  std::set<int> cls(C.ji_class.begin(), C.ji_class.end());
  std::vector<int> gens(cls.begin(), cls.end());
  if (gens.size() > 20) throw Error(ErrorKind::TooLarge, "too many join-irreducible congruences");
  const Index n = static_cast<Index>(L.size());
  std::set<std::vector<Index>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    std::vector<Index> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Index x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!((mask >> g) & 1u)) continue;
      const auto& rep = C.congruences[gens[g]];
      for (Index x = 0; x < n; ++x) {
        Index a = find(x), b = find(rep[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<Index> canon(n);
    for (Index x = 0; x < n; ++x) canon[x] = find(x);
    seen.insert(canon);
  }
  return mpz_class(static_cast<unsigned long>(seen.size()));
}

std::string lattice_to_dot(const FiniteLattice& L, const std::vector<std::string>& names,
                           const std::function<std::string(Index, Index)>& edge_label) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (Index x = 0; x < L.size(); ++x) {
    std::string name = x < names.size() ? names[x] : std::to_string(x);
    std::string esc;
    for (char ch : name) esc += ch == '\n' ? std::string("\\n") : std::string(1, ch);
    out += "  n" + std::to_string(x) + " [label=\"" + esc + "\"];\n";
  }
  for (auto [x, y] : L.edges()) {
    out += "  n" + std::to_string(x) + " -> n" + std::to_string(y);
    if (edge_label) out += " [label=\"" + edge_label(x, y) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace fbt
