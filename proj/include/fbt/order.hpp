#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fbt/tableau.hpp"

namespace fbt {

enum class Sigma { Empty = 0, Dot = 1, Left = 2 };

struct EdgeLabel {
  int i = 1;
  int j = 1;
  Sigma sigma = Sigma::Dot;
  auto operator<=>(const EdgeLabel&) const = default;

  int rank() const { return j - i + (sigma == Sigma::Dot ? 1 : 0); }
};

bool is_legal_label(int n, const EdgeLabel& l);
// "(i,j,e)" style with e, l, b for empty, left-arrow, dot.
std::string label_string(const EdgeLabel& l);

enum class MoveType { I, II, III };

struct Move {
  Cell cell;
  MoveType type;
  auto operator<=>(const Move&) const = default;
};

bool leq(const FbTableau& s, const FbTableau& t);
FbTableau meet(const FbTableau& m, const FbTableau& n);
FbTableau join(const FbTableau& m, const FbTableau& n);
FbTableau join_by_conjugation(const FbTableau& m, const FbTableau& n);

std::vector<Move> changeable_cells(const FbTableau& t);
std::pair<FbTableau, EdgeLabel> apply_move(const FbTableau& t, const Move& m);
std::vector<std::pair<FbTableau, EdgeLabel>> covers(const FbTableau& t);
std::vector<FbTableau> cocovers(const FbTableau& t);
FbTableau from_changeables(int n, const std::vector<Move>& moves);

// Upper covers inside the sublattice of small tableaux, by the two moves on small tableaux.
std::vector<FbTableau> small_covers(const FbTableau& t);

}  // namespace fbt
