#pragma once

#include <string>
#include <vector>

#include "fbt/enumerate.hpp"
#include "fbt/tableau.hpp"
#include "oracle.hpp"

// All tableaux of one size with the oracle order precomputed.
struct OracleOrder {
  std::vector<fbt::FbTableau> el;
  std::vector<std::string> text;
  std::vector<std::vector<char>> le;
  std::vector<std::size_t> down;

  explicit OracleOrder(int n, fbt::TableauClass cls = fbt::TableauClass::All) {
    el = fbt::enumerate(n, cls);
    for (const auto& t : el) text.push_back(fbt::render_text(t));
    std::vector<oracle::Grid> grids;
    for (const auto& s : text) grids.push_back(oracle::Grid::parse(s));
    std::vector<oracle::CellSet> col, row, fr;
    for (const auto& g : grids) {
      col.push_back(g.col_space());
      row.push_back(g.row_space());
      fr.push_back(g.free_cells());
    }
    const std::size_t m = el.size();
    le.assign(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        bool ok = oracle::subset(col[a], col[b]) && oracle::subset(row[b], row[a]);
        for (auto& rc : fr[a]) {
          if (!ok) break;
          if (fr[b].count(rc) && grids[a].dotted(rc.first, rc.second) && !grids[b].dotted(rc.first, rc.second))
            ok = false;
        }
        le[a][b] = ok;
      }
    down = oracle::down_sizes(m, [&](std::size_t a, std::size_t b) { return le[a][b] != 0; });
  }

  std::size_t size() const { return el.size(); }
  bool leq(std::size_t a, std::size_t b) const { return le[a][b] != 0; }
  std::size_t index(const fbt::FbTableau& t) const {
    for (std::size_t k = 0; k < el.size(); ++k)
      if (el[k] == t) return k;
    return el.size();
  }
};
