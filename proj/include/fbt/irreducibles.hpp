#pragma once

#include <string>
#include <vector>

#include "fbt/enumerate.hpp"
#include "fbt/order.hpp"
#include "fbt/poset.hpp"
#include "fbt/tableau.hpp"

namespace fbt {

enum class Family { ESTam, STam, Tam };

const char* family_name(Family f);
Family parse_family(const std::string& s);
TableauClass family_class(Family f);

// Join-irreducible labels (i,j,s) in a fixed order: by j, then i, then s.
std::vector<EdgeLabel> join_irr_labels(int n, Family f = Family::ESTam);
FbTableau join_irr_tableau(int n, const EdgeLabel& l);
EdgeLabel classify_join_irr(const FbTableau& t);
FbTableau meet_irr_tableau(int n, const EdgeLabel& l);  // conjugate of the join-irreducible

// Join-irreducibles of the small sublattice: s is empty or left-arrow.
FbTableau small_join_irr_tableau(int n, const EdgeLabel& l);
EdgeLabel classify_small_join_irr(const FbTableau& t);

LabeledPoset join_irr_poset(int n);
LabeledPoset forcing_poset(int n, Family f);

enum class Color { Red, Green, Blue };
struct ColoredInterval {
  int i = 1;
  int j = 1;
  Color color = Color::Red;
  EdgeLabel label() const;
};
std::vector<ColoredInterval> colored_intervals(int n);

enum class ColoredOrder { Inclusion, Product };
// Element names match label_string of the corresponding join-irreducible.
LabeledPoset colored_poset(int n, ColoredOrder kind);

}  // namespace fbt
