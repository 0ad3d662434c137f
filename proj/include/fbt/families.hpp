#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "fbt/irreducibles.hpp"
#include "fbt/lattice.hpp"

namespace fbt {

// A class of tableaux of one size together with its brute-force lattice.
struct TableauLattice {
  Family family = Family::ESTam;
  int n = 1;
  std::vector<FbTableau> elements;
  std::unordered_map<FbTableau, Index, FbTableauHash> index;
  FiniteLattice lattice;

  Index index_of(const FbTableau& t) const;
  std::vector<Index> conjugation() const;
  // Join-labelling translated to (i,j,s) labels by classifying each join-irreducible.
  std::unordered_map<std::uint64_t, EdgeLabel> edge_labels() const;
  std::vector<std::string> names() const;
};

TableauLattice build_tableau_lattice(int n, Family f, std::size_t cap = FiniteLattice::kDefaultCap);

// Labels of the family: esTam and sTam use (i,j,s) with rank j - i + [s = dot].
EdgeLabel classify_in_family(const FbTableau& t, Family f);

}  // namespace fbt
