#include "fbt/families.hpp"

#include "fbt/enumerate.hpp"
#include "fbt/order.hpp"

namespace fbt {

Index TableauLattice::index_of(const FbTableau& t) const {
  auto it = index.find(t);
  if (it == index.end()) throw Error(ErrorKind::OutOfShape, "tableau not in this lattice");
  return it->second;
}

std::vector<Index> TableauLattice::conjugation() const {
  std::vector<Index> out;
  for (const auto& t : elements)
    out.push_back(index_of(family == Family::ESTam ? conjugate(t) : reflect_arrows(t)));
  return out;
}

EdgeLabel classify_in_family(const FbTableau& t, Family f) {
  if (f == Family::STam) return classify_small_join_irr(t);
  return classify_join_irr(t);
}

std::unordered_map<std::uint64_t, EdgeLabel> TableauLattice::edge_labels() const {
  std::unordered_map<std::uint64_t, EdgeLabel> out;
  for (auto& [key, j] : join_labelling(lattice)) out[key] = classify_in_family(elements[j], family);
  return out;
}

std::vector<std::string> TableauLattice::names() const {
  std::vector<std::string> out;
  for (const auto& t : elements) out.push_back(render_text(t));
  return out;
}

TableauLattice build_tableau_lattice(int n, Family f, std::size_t cap) {
  TableauLattice tl;
  tl.family = f;
  tl.n = n;
  tl.elements = enumerate(n, family_class(f));
  for (Index k = 0; k < tl.elements.size(); ++k) tl.index[tl.elements[k]] = k;
  const auto& el = tl.elements;
  tl.lattice = FiniteLattice::build(el.size(), [&](Index a, Index b) { return leq(el[a], el[b]); }, cap);
  return tl;
}

}  // namespace fbt
