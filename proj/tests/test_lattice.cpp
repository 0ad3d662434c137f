#include <doctest.h>

#include <algorithm>
#include <map>
#include <tuple>
#include <set>

#include "fbt/families.hpp"
#include "fbt/lattice.hpp"
#include "fbt/spine.hpp"

using namespace fbt;

namespace {

FiniteLattice from_pairs(std::size_t n, const std::vector<std::pair<Index, Index>>& less) {
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (Index k = 0; k < n; ++k) rel[k][k] = 1;
  for (auto [a, b] : less) rel[a][b] = 1;
  for (Index k = 0; k < n; ++k)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (rel[a][k] && rel[k][b]) rel[a][b] = 1;
  return FiniteLattice::build(n, [rel](Index a, Index b) { return rel[a][b] != 0; });
}

// 0 < a, b, c < 1 with a, b, c pairwise incomparable.
FiniteLattice diamond3() { return from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }
// 0 < a < b < 1 and 0 < c < 1.
FiniteLattice pentagon() { return from_pairs(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }
FiniteLattice square() { return from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }
FiniteLattice chain(std::size_t k) {
  std::vector<std::pair<Index, Index>> less;
  for (Index a = 0; a + 1 < k; ++a) less.push_back({a, a + 1});
  return from_pairs(k, less);
}

std::vector<Index> reversal(std::size_t k) {
  std::vector<Index> out(k);
  for (Index a = 0; a < k; ++a) out[a] = static_cast<Index>(k - 1 - a);
  return out;
}

int esTam_irr(int n) { return n * (n - 1) + (n - 1) * (n - 2) / 2; }

}  // namespace

TEST_CASE("small lattices: laws, distributivity, semidistributivity") {
  for (const auto& L : {diamond3(), pentagon(), square(), chain(4)}) CHECK(check_lattice_laws(L));
  CHECK_FALSE(check_semidistributive(diamond3()));
  CHECK(check_semidistributive(pentagon()));
  CHECK_FALSE(check_distributive(pentagon()));
  CHECK_FALSE(check_distributive(diamond3()));
  CHECK(check_distributive(square()));
  CHECK(check_distributive(chain(5)));
}

TEST_CASE("build rejects non-lattices") {
  // Two maximal elements.
  CHECK_THROWS_AS(from_pairs(3, {{0, 1}, {0, 2}}), Error);
  // Two minimal upper bounds of a, b.
  CHECK_THROWS_AS(from_pairs(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}), Error);
  CHECK_FALSE(check_partial_order(2, [](Index, Index) { return true; }));
  CHECK(check_partial_order(3, [](Index a, Index b) { return a <= b; }));
}

TEST_CASE("chains, squares and self-duality") {
  auto c = chain(2);
  auto ex = check_extremal(c);
  CHECK(ex.extremal);
  CHECK(ex.longest_chain == 1);
  CHECK(is_trim(c));
  CHECK(check_selfdual(chain(4), reversal(4)));
  std::vector<Index> id{0, 1, 2, 3};
  CHECK_FALSE(check_selfdual(chain(4), id));
  CHECK(check_selfdual(square(), {3, 1, 2, 0}));
  CHECK(check_selfdual(square(), {3, 2, 1, 0}));
  auto sp = spine_by_chains(chain(5));
  CHECK(std::count(sp.begin(), sp.end(), true) == 5);
  auto sq = spine_by_chains(square());
  CHECK(std::count(sq.begin(), sq.end(), true) == 4);
  auto pent = spine_by_chains(pentagon());
  CHECK_FALSE(pent[3]);
  CHECK(check_extremal(pentagon()).extremal);
  CHECK_FALSE(check_extremal(diamond3()).extremal);
}

TEST_CASE("congruences of small lattices") {
  auto C = congruence_lattice(square());
  CHECK(C.count == 4);
  CHECK(check_congruence_uniform(C));
  CHECK(count_congruences_by_closure(square(), C) == 4);
  auto P = congruence_lattice(pentagon());
  CHECK(P.count == 5);
  CHECK(check_congruence_uniform(P));
  auto M = congruence_lattice(diamond3());
  CHECK(M.count == 2);
  CHECK_FALSE(check_congruence_uniform(M));
  CHECK(congruence_lattice(chain(4)).count == 8);
}

TEST_CASE("polygons") {
  bool ok = false;
  auto ps = polygons(square(), &ok);
  CHECK(ok);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].shape() == std::make_pair<std::size_t, std::size_t>(2, 2));
  CHECK(check_polygonal(pentagon(), {{2, 3}}));
  CHECK_FALSE(check_polygonal(pentagon(), {{2, 2}}));
  CHECK(check_polygonal(diamond3(), {{2, 2}}) == false);
}

TEST_CASE("quadrilaterals carry no rank condition") {
  auto L = square();
  auto lab = [&](Index x, Index y) { return (x == 0 && y == 1) || (x == 2 && y == 3) ? 0 : 1; };
  CHECK(verify_polygonal_labeling(L, lab, [](int) { return 0; }));
  auto bad = [&](Index x, Index y) { return x == 0 && y == 1 ? 0 : 1; };
  CHECK_FALSE(verify_polygonal_labeling(L, bad, [](int) { return 0; }));
  CHECK_THROWS_AS(verify_polygonal_labeling(L, [](Index, Index) { return -1; }, [](int) { return 0; }), Error);
}

TEST_CASE("join labelling of the pentagon uses its three join-irreducibles") {
  auto L = pentagon();
  auto ji = join_irreducibles(L);
  CHECK(ji.size() == 3);
  auto lab = join_labelling(L);
  CHECK(lab.size() == L.edges().size());
  std::set<Index> used;
  for (auto& [k, j] : lab) used.insert(j);
  CHECK(used == std::set<Index>(ji.begin(), ji.end()));
}

TEST_CASE("tableau lattices: laws, table agreement, irreducibles") {
  struct Case {
    Family f;
    int n_max;
  };
  for (Case c : {Case{Family::ESTam, 4}, Case{Family::STam, 5}, Case{Family::Tam, 5}})
    for (int n = 1; n <= c.n_max; ++n) {
      CAPTURE(n);
      auto tl = build_tableau_lattice(n, c.f);
      const auto& L = tl.lattice;
      const auto& el = tl.elements;
      CHECK(check_lattice_laws(L));
      CHECK(el[L.bottom()] == bottom(n));
      CHECK(el[L.top()] == top(n));
      for (Index a = 0; a < L.size(); ++a)
        for (Index b = 0; b < L.size(); ++b) {
          CHECK(el[L.meet(a, b)] == meet(el[a], el[b]));
          CHECK(el[L.join(a, b)] == join(el[a], el[b]));
        }
      std::size_t irr = c.f == Family::ESTam ? esTam_irr(n) : c.f == Family::STam ? (n - 1) * (n - 1) : n * (n - 1) / 2;
      CHECK(join_irreducibles(L).size() == irr);
      CHECK(meet_irreducibles(L).size() == irr);
    }
}

TEST_CASE("self-duality through conjugation") {
  for (int n = 1; n <= 4; ++n) {
    auto tl = build_tableau_lattice(n, Family::ESTam);
    CHECK(check_selfdual(tl.lattice, tl.conjugation()));
  }
  for (int n = 1; n <= 5; ++n) {
    auto tl = build_tableau_lattice(n, Family::STam);
    CHECK(check_selfdual(tl.lattice, tl.conjugation()));
    auto tam = build_tableau_lattice(n, Family::Tam);
    CHECK(check_selfdual(tam.lattice, tam.conjugation()));
  }
}

TEST_CASE("semidistributive, extremal and trim") {
  for (int n = 1; n <= 3; ++n) {
    auto tl = build_tableau_lattice(n, Family::ESTam);
    CHECK(check_semidistributive(tl.lattice));
    auto ex = check_extremal(tl.lattice);
    CHECK(ex.extremal);
    CHECK(ex.longest_chain == static_cast<std::size_t>(esTam_irr(n)));
    CHECK(is_trim(tl.lattice));
  }
  auto e4 = build_tableau_lattice(4, Family::ESTam);
  CHECK(check_extremal(e4.lattice).longest_chain == 15);
  for (int n = 1; n <= 4; ++n) {
    auto tl = build_tableau_lattice(n, Family::STam);
    CHECK(check_semidistributive(tl.lattice));
    CHECK(check_extremal(tl.lattice).longest_chain == static_cast<std::size_t>((n - 1) * (n - 1)));
  }
  CHECK_FALSE(check_distributive(build_tableau_lattice(3, Family::ESTam).lattice));
}

TEST_CASE("polygon shapes per family") {
  for (int n = 2; n <= 4; ++n) CHECK(check_polygonal(build_tableau_lattice(n, Family::ESTam).lattice, {{2, 2}, {2, 5}}));
  for (int n = 2; n <= 5; ++n) {
    CHECK(check_polygonal(build_tableau_lattice(n, Family::STam).lattice, {{2, 2}, {2, 4}}));
    CHECK(check_polygonal(build_tableau_lattice(n, Family::Tam).lattice, {{2, 2}, {2, 3}}));
  }
  auto tam3 = build_tableau_lattice(3, Family::Tam);
  CHECK(tam3.lattice.size() == 5);
  CHECK(check_polygonal(tam3.lattice, {{2, 3}}));
}

TEST_CASE("polygonal labelling with doubled rank on esTam, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    auto tl = build_tableau_lattice(n, Family::ESTam);
    auto labels = tl.edge_labels();
    std::vector<EdgeLabel> irr = join_irr_labels(n);
    std::map<std::tuple<int, int, int>, int> pos;
    for (std::size_t k = 0; k < irr.size(); ++k) pos[{irr[k].i, irr[k].j, static_cast<int>(irr[k].sigma)}] = k;
    auto lab = [&](Index x, Index y) {
      auto it = labels.find(edge_key(tl.lattice, x, y));
      if (it == labels.end()) return -1;
      return pos.at({it->second.i, it->second.j, static_cast<int>(it->second.sigma)});
    };
    auto doubled = [&](int k) { return 2 * (irr[k].j - irr[k].i) + (irr[k].sigma == Sigma::Dot ? 1 : 0); };
    CHECK(verify_polygonal_labeling(tl.lattice, lab, doubled));
  }
}

TEST_CASE("polygonal labelling on sTam, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    auto tl = build_tableau_lattice(n, Family::STam);
    auto labels = tl.edge_labels();
    std::vector<EdgeLabel> irr = join_irr_labels(n, Family::STam);
    auto lab = [&](Index x, Index y) {
      const auto& l = labels.at(edge_key(tl.lattice, x, y));
      for (std::size_t k = 0; k < irr.size(); ++k)
        if (irr[k].i == l.i && irr[k].j == l.j && irr[k].sigma == l.sigma) return static_cast<int>(k);
      return -1;
    };
    CHECK(verify_polygonal_labeling(tl.lattice, lab, [&](int k) { return irr[k].j - irr[k].i; }));
  }
}

TEST_CASE("spine by chains equals the cohook predicate, esTam n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    auto tl = build_tableau_lattice(n, Family::ESTam);
    auto sp = spine_by_chains(tl.lattice);
    for (Index a = 0; a < tl.elements.size(); ++a) CHECK(sp[a] == is_on_spine(tl.elements[a]));
  }
}

TEST_CASE("congruence lattices of the families") {
  const long estam[] = {1, 4, 44};
  for (int n = 1; n <= 3; ++n) {
    auto tl = build_tableau_lattice(n, Family::ESTam);
    auto C = congruence_lattice(tl.lattice);
    CHECK(C.count == estam[n - 1]);
    CHECK(check_congruence_uniform(C));
    CHECK(count_congruences_by_closure(tl.lattice, C) == C.count);
  }
  const long stam[] = {1, 2, 7, 41};
  for (int n = 1; n <= 4; ++n) {
    auto C = congruence_lattice(build_tableau_lattice(n, Family::STam).lattice);
    CHECK(C.count == stam[n - 1]);
    CHECK(check_congruence_uniform(C));
  }
  const long tam[] = {1, 2, 5, 14};
  for (int n = 1; n <= 4; ++n) CHECK(congruence_lattice(build_tableau_lattice(n, Family::Tam).lattice).count == tam[n - 1]);
  CHECK_THROWS_AS(congruence_lattice(build_tableau_lattice(4, Family::ESTam).lattice, 100), Error);
}

TEST_CASE("DOT export") {
  auto tl = build_tableau_lattice(2, Family::ESTam);
  auto dot = lattice_to_dot(tl.lattice, tl.names());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') >= 2);
}
