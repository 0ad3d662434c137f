#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fbt/poset.hpp"

namespace fbt {

using Index = std::uint32_t;

// Dense finite lattice on indices 0..N-1 with brute-force meet/join tables.
class FiniteLattice {
 public:
  static constexpr std::size_t kDefaultCap = 20000;

  static FiniteLattice build(std::size_t n, const std::function<bool(Index, Index)>& leq,
                             std::size_t cap = kDefaultCap);

  std::size_t size() const { return n_; }
  Index bottom() const { return bottom_; }
  Index top() const { return top_; }
  bool leq(Index a, Index b) const { return (below_[b][a >> 6] >> (a & 63)) & 1u; }
  Index meet(Index a, Index b) const { return meet_[a * n_ + b]; }
  Index join(Index a, Index b) const { return join_[a * n_ + b]; }
  const std::vector<Index>& upper_covers(Index x) const { return up_[x]; }
  const std::vector<Index>& lower_covers(Index x) const { return down_[x]; }
  std::vector<std::pair<Index, Index>> edges() const;
  // Elements sorted so that x < y implies x comes first.
  const std::vector<Index>& linear_extension() const { return order_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> below_;  // bit x of below_[y]: x <= y
  std::vector<std::vector<std::uint64_t>> above_;
  std::vector<Index> meet_, join_;
  std::vector<std::vector<Index>> up_, down_;
  std::vector<Index> order_;
  Index bottom_ = 0, top_ = 0;
};

bool check_partial_order(std::size_t n, const std::function<bool(Index, Index)>& leq);
// Commutativity, idempotence, absorption on all pairs; associativity on all
// triples up to `assoc_limit` elements and on a fixed sample beyond.
bool check_lattice_laws(const FiniteLattice& L, std::size_t assoc_limit = 120);
bool check_semidistributive(const FiniteLattice& L);
bool check_distributive(const FiniteLattice& L);
bool check_selfdual(const FiniteLattice& L, const std::vector<Index>& anti);

std::vector<Index> join_irreducibles(const FiniteLattice& L);
std::vector<Index> meet_irreducibles(const FiniteLattice& L);

struct ExtremalReport {
  bool extremal = false;
  std::size_t longest_chain = 0;
  std::size_t join_irr = 0;
  std::size_t meet_irr = 0;
};
ExtremalReport check_extremal(const FiniteLattice& L);
bool is_trim(const FiniteLattice& L);

std::vector<bool> spine_by_chains(const FiniteLattice& L);

struct Polygon {
  Index bottom = 0, top = 0;
  std::vector<Index> side_a;  // full chains bottom..top
  std::vector<Index> side_b;
  std::pair<std::size_t, std::size_t> shape() const;  // sorted side lengths
};
// Intervals [x, y1 v y2] for distinct upper covers, and dually [y1 ^ y2, x]
// for distinct lower covers. Returns false via `ok` if one is not a polygon.
std::vector<Polygon> polygons(const FiniteLattice& L, bool* ok = nullptr);
bool check_polygonal(const FiniteLattice& L, const std::set<std::pair<std::size_t, std::size_t>>& shapes);

// Join-labelling: cover x < y gets the join-irreducible j with x v j = y, x v j_* = x.
std::unordered_map<std::uint64_t, Index> join_labelling(const FiniteLattice& L);
inline std::uint64_t edge_key(const FiniteLattice& L, Index x, Index y) {
  return static_cast<std::uint64_t>(x) * L.size() + y;
}
bool verify_polygonal_labeling(const FiniteLattice& L, const std::function<int(Index, Index)>& label,
                               const std::function<int(int)>& rank);

// Congruence generated by identifying a and b; returns the block representative of each element.
std::vector<Index> congruence_of(const FiniteLattice& L, Index a, Index b);

struct CongruenceLattice {
  mpz_class count;
  std::vector<std::vector<Index>> congruences;   // distinct join-irreducible congruences
  std::vector<Index> ji;                          // join-irreducibles of L
  std::vector<int> ji_class;                      // con(j) index for each join-irreducible
  std::vector<Index> mi;
  std::vector<int> mi_class;
  LabeledPoset forcing;                           // on join-irreducibles: a <= b iff con(a) within con(b)
};
CongruenceLattice congruence_lattice(const FiniteLattice& L, std::size_t max_size = 1000);
bool check_congruence_uniform(const CongruenceLattice& C);
// Brute count of all congruences by closing every subset of join-irreducible congruences.
mpz_class count_congruences_by_closure(const FiniteLattice& L, const CongruenceLattice& C);

std::string lattice_to_dot(const FiniteLattice& L, const std::vector<std::string>& names,
                           const std::function<std::string(Index, Index)>& edge_label = nullptr);

}  // namespace fbt
