#include "fbt/poset.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "fbt/tableau.hpp"

namespace fbt {

LabeledPoset LabeledPoset::from_relations(std::vector<std::string> labels,
                                          const std::vector<std::pair<int, int>>& less) {
  LabeledPoset p;
  const std::size_t n = labels.size();
  p.labels = std::move(labels);
  p.rel.assign(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) p.rel[a][a] = 1;
  for (auto [a, b] : less) p.rel[a][b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (p.rel[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (p.rel[k][b]) p.rel[a][b] = 1;
  return p;
}

int LabeledPoset::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return static_cast<int>(k);
  return -1;
}

bool LabeledPoset::is_partial_order() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!rel[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && rel[a][b] && rel[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (rel[a][b] && rel[b][c] && !rel[a][c]) return false;
    }
  }
  return true;
}

LabeledPoset LabeledPoset::opposite() const {
  LabeledPoset p = *this;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) p.rel[a][b] = rel[b][a];
  return p;
}

std::vector<std::pair<int, int>> LabeledPoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !rel[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (c != a && c != b && rel[a][c] && rel[c][b]) cover = false;
      if (cover) out.push_back({a, b});
    }
  return out;
}

bool LabeledPoset::same_as(const LabeledPoset& other) const {
  if (size() != other.size()) return false;
  std::vector<int> map(size());
  for (std::size_t k = 0; k < size(); ++k) {
    map[k] = other.index_of(labels[k]);
    if (map[k] < 0) return false;
  }
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (rel[a][b] != other.rel[map[a]][map[b]]) return false;
  return true;
}

namespace {

using Mask = unsigned __int128;

int lowest_bit(Mask m) {
  auto lo = static_cast<std::uint64_t>(m);
  return lo ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}

int bit_count(Mask m) {
  return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
}

struct MaskHash {
  std::size_t operator()(Mask m) const {
    return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(m) ^ (static_cast<std::uint64_t>(m >> 64) * 0x9e3779b97f4a7c15ull));
  }
};

struct IdealCounter {
  std::vector<Mask> down, up;
  std::unordered_map<Mask, mpz_class, MaskHash> memo;

  Mask component(Mask s) const {
    Mask comp = s & (~s + 1);
    Mask frontier = comp;
    while (frontier) {
      int x = lowest_bit(frontier);
      frontier &= frontier - 1;
      Mask nb = (down[x] | up[x]) & s & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    return comp;
  }

  mpz_class count(Mask s) {
    if (s == 0) return 1;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    mpz_class result;
    Mask comp = component(s);
    if (comp != s) {
      result = count(comp) * count(s & ~comp);
    } else {
      int best = -1, best_score = -1;
      for (Mask r = s; r; r &= r - 1) {
        int x = lowest_bit(r);
        int score = bit_count((down[x] | up[x]) & s);
        if (score > best_score) best = x, best_score = score;
      }
      result = count(s & ~up[best]) + count(s & ~down[best]);
    }
    memo.emplace(s, result);
    return result;
  }
};

}  // namespace

mpz_class count_order_ideals(const LabeledPoset& p) {
  const std::size_t n = p.size();
  if (n > kMaxIdealPosetSize) throw Error(ErrorKind::TooLarge, "order-ideal counting supports at most 128 elements");
  IdealCounter ic;
  ic.down.assign(n, 0);
  ic.up.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.rel[a][b]) {
        ic.up[a] |= Mask{1} << b;
        ic.down[b] |= Mask{1} << a;
      }
  Mask all = n == 128 ? ~Mask{0} : (Mask{1} << n) - 1;
  return ic.count(all);
}

std::string poset_to_dot(const LabeledPoset& p) {
  std::string out = "digraph poset {\n";
  for (std::size_t k = 0; k < p.size(); ++k)
    out += "  n" + std::to_string(k) + " [label=\"" + p.labels[k] + "\"];\n";
  for (auto [a, b] : p.cover_pairs())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace fbt
