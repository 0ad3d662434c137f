#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "fbt/tableau.hpp"

namespace fbt {

enum class TableauClass { All, Small, Binary };

// Pull-based generator. Order: lexicographic on (up-arrow rows, left-arrow
// columns, dot bitmask).
class TableauStream {
 public:
  TableauStream(int n, TableauClass cls = TableauClass::All,
                std::optional<std::vector<Letter>> border = std::nullopt);
  bool next(FbTableau& out);

 private:
  bool advance_up();
  bool advance_left();
  bool prepare_left();
  bool accept_arrows() const;

  int n_;
  TableauClass cls_;
  std::optional<std::vector<Letter>> border_;
  FbTableau cur_;
  std::vector<std::vector<int>> options_;  // admissible left-arrow columns per row
  std::vector<std::size_t> pos_;
  std::uint64_t free_ = 0;
  std::uint64_t sub_ = 0;
  bool in_dots_ = false;
  bool started_ = false;
  bool done_ = false;
};

std::vector<FbTableau> enumerate(int n, TableauClass cls = TableauClass::All,
                                 std::optional<std::vector<Letter>> border = std::nullopt);
void for_each_tableau(int n, TableauClass cls, const std::function<void(const FbTableau&)>& fn);
mpz_class count(int n, TableauClass cls = TableauClass::All);

mpz_class q2_factorial(int n);  // prod (2^i - 1)
mpz_class factorial(int n);
mpz_class catalan(int n);

using BracketVector = std::vector<int>;
bool is_bracket_vector(const BracketVector& v);
std::vector<BracketVector> all_bracket_vectors(int n);  // length n-1, brute filter
BracketVector bracket_of(const FbTableau& t);
FbTableau tableau_of(const BracketVector& v);
bool bracket_leq(const BracketVector& a, const BracketVector& b);

struct BorderQuotientReport {
  bool surjective = false;
  bool meet_hom = false;
  bool join_hom = false;
  bool fibers_are_congruence = false;
  bool fibers_are_intervals = false;
  std::map<std::vector<Letter>, std::size_t> fiber_sizes;
  bool ok() const {
    return surjective && meet_hom && join_hom && fibers_are_congruence && fibers_are_intervals;
  }
};
BorderQuotientReport border_quotient_check(int n);

}  // namespace fbt
