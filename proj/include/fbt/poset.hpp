#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace fbt {

// Small explicit poset on named elements. rel[a][b] means a <= b.
struct LabeledPoset {
  std::vector<std::string> labels;
  std::vector<std::vector<char>> rel;

  // Reflexive-transitive closure of the given strict relations (a < b).
  static LabeledPoset from_relations(std::vector<std::string> labels,
                                     const std::vector<std::pair<int, int>>& less);

  std::size_t size() const { return labels.size(); }
  bool leq(int a, int b) const { return rel[a][b] != 0; }
  int index_of(const std::string& label) const;
  bool is_partial_order() const;
  LabeledPoset opposite() const;
  std::vector<std::pair<int, int>> cover_pairs() const;
  // Same labels and same order, matching elements by label.
  bool same_as(const LabeledPoset& other) const;
};

constexpr std::size_t kMaxIdealPosetSize = 128;
// Memoized on element subsets; exponential in the worst case.
mpz_class count_order_ideals(const LabeledPoset& p);
std::string poset_to_dot(const LabeledPoset& p);

}  // namespace fbt
