#pragma once

#include <gmpxx.h>

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "fbt/order.hpp"
#include "fbt/tableau.hpp"

namespace fbt {

// Cells (i,j), i >= 2, j <= n-1, whose whole cohook is empty.
std::vector<Cell> forbidden_cohooks(const FbTableau& t);
bool is_on_spine(const FbTableau& t);

class SpineTable {
 public:
  // Summand (i,j,k) of the esTam count without its power-of-two factor; zero on negative arguments.
  mpz_class reduced(int i, int j, int k);
  // 2^(i(i-1)/2 + k(k-1)/2) * reduced(i,j,k); the count sums these over i+j+k = n-1.
  mpz_class term(int i, int j, int k);
  mpz_class small_term(int i, int j);  // the two-index recurrence for small tableaux

 private:
  std::map<std::tuple<int, int, int>, mpz_class> reduced_;
  std::map<std::pair<int, int>, mpz_class> small_;
};

mpz_class spine_count_estam(int n);
mpz_class spine_count_stam(int n);

// S(i,j,s): the join-irreducibles of the spine. Labels as for join_irr_labels.
FbTableau spine_join_irr_tableau(int n, const EdgeLabel& l);
std::vector<std::pair<EdgeLabel, FbTableau>> spine_join_irr(int n);

}  // namespace fbt
