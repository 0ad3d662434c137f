// fbtab: command-line front end for fb-tableaux and their lattices.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fbt/congruence_count.hpp"
#include "fbt/enumerate.hpp"
#include "fbt/families.hpp"
#include "fbt/irreducibles.hpp"
#include "fbt/lattice.hpp"
#include "fbt/order.hpp"
#include "fbt/spine.hpp"

using namespace fbt;
using json = nlohmann::json;

namespace {

// Largest sizes each command will run at. Requests above these are refused.
constexpr int kEnumerateMax[] = {7, 9, 14};  // esTam, sTam, Tam
constexpr int kLatticeMax[] = {4, 5, 6};     // dense tables plus O(N^3) checks
constexpr int kHasseMax[] = {5, 5, 6};
constexpr int kCountElementsMax[] = {7, 9, 14};
constexpr int kDyckMax = 14;
constexpr int kSpineMax = 60;
constexpr int kSeriesMax = 60;

struct Refused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int family_slot(Family f) { return static_cast<int>(f); }

void require_size(int n, int lo, int hi, const std::string& what) {
  if (n < lo) throw Refused(what + ": --n must be at least " + std::to_string(lo));
  if (n > hi) throw Refused(what + ": n = " + std::to_string(n) + " is above the budget of " + std::to_string(hi));
}

TableauClass parse_class(const std::string& s) {
  if (s == "all") return TableauClass::All;
  if (s == "small") return TableauClass::Small;
  if (s == "binary") return TableauClass::Binary;
  throw Refused("unknown class '" + s + "'");
}

json tableau_json(const FbTableau& t) {
  json up = json::array(), left = json::array(), dots = json::array();
  for (int c = 1; c <= t.n - 1; ++c) up.push_back(t.up_row(c));
  for (int r = 2; r <= t.n; ++r) left.push_back(t.left_col(r));
  for (Cell c : shape_cells(t.n))
    if (cell_content(t, c) == Entry::Dot) dots.push_back({c.row, c.col});
  return {{"n", t.n}, {"up_row", up}, {"left_col", left}, {"dots", dots},
          {"border", border_string(border_word(t))}};
}

void emit_tableau(std::ostream& out, const FbTableau& t, const std::string& format, bool& first) {
  if (format == "jsonl") {
    out << tableau_json(t).dump() << "\n";
  } else {
    if (!first) out << "\n";
    out << render_text(t) << "\n";
  }
  first = false;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) out += ch == '\n' ? std::string("\\n") : std::string(1, ch);
  return out;
}

FbTableau read_tableau(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Refused("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

struct Options {
  std::string family = "estam";
  int n = 0;
  int n_max = 0;
  std::string cls;
  std::string border;
  std::string format;
  std::string sequence;
  std::string props;
  std::string which;
  std::string poset;
  int order = 10;
  int threads = 1;
  std::string op;
  std::vector<std::string> files;
};

int cmd_enumerate(const Options& o, std::ostream& out) {
  Family f = parse_family(o.family);
  TableauClass cls = o.cls.empty() ? family_class(f) : parse_class(o.cls);
  int slot = cls == TableauClass::All ? 0 : cls == TableauClass::Small ? 1 : 2;
  require_size(o.n, 1, kEnumerateMax[slot], "enumerate");
  std::optional<std::vector<Letter>> border;
  if (!o.border.empty()) border = parse_border(o.border, o.n);
  TableauStream s(o.n, cls, border);
  bool first = true;
  for (FbTableau t; s.next(t);) emit_tableau(out, t, o.format.empty() ? "text" : o.format, first);
  return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
  Family f = parse_family(o.family);
  if (o.n_max < 1) throw Refused("count: --n-max must be at least 1");
  const std::string& seq = o.sequence;
  for (int n = 1; n <= o.n_max; ++n) {
    mpz_class v;
    if (seq == "elements") {
      require_size(n, 1, kCountElementsMax[family_slot(f)], "count elements");
      v = count(n, family_class(f));
    } else if (seq == "join-irr") {
      if (f == Family::Tam) v = n * (n - 1) / 2;
      else v = n == 1 ? 0 : static_cast<long>(join_irr_labels(n, f).size());
    } else if (seq == "spine") {
      require_size(n, 1, kSpineMax, "count spine");
      if (f == Family::ESTam) v = spine_count_estam(n);
      else if (f == Family::STam) v = spine_count_stam(n);
      else throw Refused("count spine: only estam and stam");
    } else if (seq == "congruences") {
      if (f == Family::Tam) {
        v = catalan(n);
      } else {
        require_size(n, 1, kDyckMax, "count congruences");
        v = weighted_sum(n, f);
      }
    } else {
      throw Refused("count: --sequence must be elements, join-irr, spine or congruences");
    }
    out << v << "\n";
  }
  return 0;
}

int cmd_hasse(const Options& o, std::ostream& out) {
  Family f = parse_family(o.family);
  require_size(o.n, 1, kHasseMax[family_slot(f)], "hasse");
  const std::string format = o.format.empty() ? "dot" : o.format;
  std::vector<std::string> names;
  std::vector<std::tuple<Index, Index, std::string>> edges;
  if (f == Family::ESTam) {
    auto el = enumerate(o.n);
    std::map<FbTableau, Index> index;
    for (Index k = 0; k < el.size(); ++k) index[el[k]] = k;
    for (Index k = 0; k < el.size(); ++k) {
      names.push_back(render_text(el[k]));
      for (auto& [u, l] : covers(el[k])) edges.emplace_back(k, index.at(u), label_string(l));
    }
  } else {
    auto tl = build_tableau_lattice(o.n, f);
    names = tl.names();
    std::unordered_map<std::uint64_t, EdgeLabel> labels;
    if (f == Family::STam) labels = tl.edge_labels();
    for (auto [x, y] : tl.lattice.edges()) {
      auto it = labels.find(edge_key(tl.lattice, x, y));
      edges.emplace_back(x, y, it == labels.end() ? "" : label_string(it->second));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (format == "dot") {
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < names.size(); ++k)
      out << "  n" << k << " [label=\"" << dot_escape(names[k]) << "\"];\n";
    for (auto& [x, y, l] : edges) {
      out << "  n" << x << " -> n" << y;
      if (!l.empty()) out << " [label=\"" << l << "\"]";
      out << ";\n";
    }
    out << "}\n";
  } else if (format == "jsonl" || format == "json") {
    json doc{{"nodes", names}, {"edges", json::array()}};
    for (auto& [x, y, l] : edges) doc["edges"].push_back({{"src", x}, {"dst", y}, {"label", l}});
    out << doc.dump() << "\n";
  } else {
    throw Refused("hasse: --format must be dot or jsonl");
  }
  return 0;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');)
    if (!part.empty()) out.push_back(part);
  return out;
}

int cmd_check(const Options& o, std::ostream& out) {
  Family f = parse_family(o.family);
  auto props = split_csv(o.props.empty() ? "lattice" : o.props);
  static const std::set<std::string> known{"lattice", "semidistributive", "selfdual", "extremal",
                                           "polygonal", "labeling", "trim", "congruence-uniform"};
  for (auto& p : props)
    if (!known.count(p)) throw Refused("check: unknown property '" + p + "'");
  require_size(o.n, 1, kLatticeMax[family_slot(f)], "check");
  auto tl = build_tableau_lattice(o.n, f);
  const auto& L = tl.lattice;
  bool all = true;
  for (const auto& p : props) {
    bool ok = false;
    if (p == "lattice") {
      ok = check_partial_order(L.size(), [&](Index a, Index b) { return L.leq(a, b); }) && check_lattice_laws(L);
    } else if (p == "semidistributive") {
      ok = check_semidistributive(L);
    } else if (p == "selfdual") {
      ok = check_selfdual(L, tl.conjugation());
    } else if (p == "extremal") {
      ok = check_extremal(L).extremal;
    } else if (p == "trim") {
      ok = is_trim(L);
    } else if (p == "polygonal") {
      std::set<std::pair<std::size_t, std::size_t>> shapes{{2, 2}};
      shapes.insert(f == Family::ESTam ? std::make_pair<std::size_t, std::size_t>(2, 5)
                    : f == Family::STam ? std::make_pair<std::size_t, std::size_t>(2, 4)
                                        : std::make_pair<std::size_t, std::size_t>(2, 3));
      ok = check_polygonal(L, shapes);
    } else if (p == "labeling") {
      if (f == Family::Tam) throw Refused("check labeling: only estam and stam");
      auto labels = tl.edge_labels();
      std::vector<EdgeLabel> irr = o.n == 1 ? std::vector<EdgeLabel>{} : join_irr_labels(o.n, f);
      std::map<EdgeLabel, int> pos;
      for (std::size_t k = 0; k < irr.size(); ++k) pos[irr[k]] = static_cast<int>(k);
      auto lab = [&](Index x, Index y) {
        auto it = labels.find(edge_key(L, x, y));
        return it == labels.end() ? -1 : pos.at(it->second);
      };
      auto rank = [&](int k) { return f == Family::ESTam ? irr[k].rank() : irr[k].j - irr[k].i; };
      ok = verify_polygonal_labeling(L, lab, rank);
    } else if (p == "congruence-uniform") {
      ok = check_congruence_uniform(congruence_lattice(L));
    }
    out << p << ": " << (ok ? "PASS" : "FAIL") << "\n";
    all = all && ok;
  }
  return all ? 0 : 1;
}

int cmd_irr(const Options& o, std::ostream& out) {
  Family f = parse_family(o.family);
  require_size(o.n, 2, kMaxSize, "irr");
  if (!o.poset.empty()) {
    LabeledPoset p;
    if (o.poset == "join") p = join_irr_poset(o.n);
    else if (o.poset == "forcing") p = forcing_poset(o.n, f);
    else if (o.poset == "inclusion") p = colored_poset(o.n, ColoredOrder::Inclusion);
    else if (o.poset == "product") p = colored_poset(o.n, ColoredOrder::Product);
    else throw Refused("irr: --poset must be join, forcing, inclusion or product");
    out << poset_to_dot(p);
    return 0;
  }
  if (f == Family::Tam) throw Refused("irr: only estam and stam have (i,j,s) labels");
  const std::string format = o.format.empty() ? "text" : o.format;
  bool first = true;
  for (const auto& l : join_irr_labels(o.n, f)) {
    FbTableau t = f == Family::ESTam ? join_irr_tableau(o.n, l) : small_join_irr_tableau(o.n, l);
    if (format == "jsonl") {
      json j = tableau_json(t);
      j["label"] = label_string(l);
      out << j.dump() << "\n";
    } else {
      if (!first) out << "\n";
      out << label_string(l) << "\n" << render_text(t) << "\n";
    }
    first = false;
  }
  return 0;
}

int cmd_spine(const Options& o, std::ostream& out) {
  Family f = parse_family(o.family);
  const std::string format = o.format.empty() ? "text" : o.format;
  bool first = true;
  if (f == Family::ESTam) {
    require_size(o.n, 1, kEnumerateMax[0], "spine");
    for_each_tableau(o.n, TableauClass::All, [&](const FbTableau& t) {
      if (is_on_spine(t)) emit_tableau(out, t, format, first);
    });
  } else if (f == Family::STam) {
    require_size(o.n, 1, kLatticeMax[1] + 1, "spine");
    auto tl = build_tableau_lattice(o.n, f);
    auto sp = spine_by_chains(tl.lattice);
    for (Index k = 0; k < tl.elements.size(); ++k)
      if (sp[k]) emit_tableau(out, tl.elements[k], format, first);
  } else {
    throw Refused("spine: only estam and stam");
  }
  return 0;
}

int cmd_congruences(const Options& o, std::ostream& out) {
  Family f = parse_family(o.family);
  require_size(o.n, 1, kLatticeMax[family_slot(f)], "congruences");
  auto tl = build_tableau_lattice(o.n, f);
  auto C = congruence_lattice(tl.lattice);
  if (o.format == "dot") {
    LabeledPoset p = C.forcing;
    if (f != Family::Tam)
      for (auto& s : p.labels) s = label_string(classify_in_family(tl.elements[std::stoi(s)], f));
    out << poset_to_dot(p);
    return 0;
  }
  out << "count: " << C.count << "\n";
  out << "uniform: " << (check_congruence_uniform(C) ? "yes" : "no") << "\n";
  out << "predicted: " << (f == Family::Tam ? catalan(o.n) : weighted_sum(o.n, f)) << "\n";
  return 0;
}

int cmd_series(const Options& o, std::ostream& out) {
  if (o.order < 0 || o.order > kSeriesMax) throw Refused("series: --order must be in 0.." + std::to_string(kSeriesMax));
  PowerSeries s(0);
  if (o.which == "estam-cong") s = cf_series(estam_cf_a(), estam_cf_lambda(), o.order);
  else if (o.which == "stam-cong") s = cf_series(stam_cf_a(), stam_cf_lambda(), o.order);
  else if (o.which == "catalan") s = cf_series(constant_sequence(0), constant_sequence(1), o.order);
  else throw Refused("series: --which must be estam-cong, stam-cong or catalan");
  for (const auto& c : s.integer_coefficients()) out << c << "\n";
  return 0;
}

int cmd_op(const Options& o, std::ostream& out) {
  const std::size_t need = o.op == "covers" ? 1 : 2;
  if (o.files.size() != need)
    throw Refused("op " + o.op + ": expects " + std::to_string(need) + " tableau file(s)");
  FbTableau a = read_tableau(o.files[0]);
  if (o.op == "covers") {
    bool first = true;
    for (auto& [u, l] : covers(a)) {
      if (!first) out << "\n";
      out << label_string(l) << "\n" << render_text(u) << "\n";
      first = false;
    }
    return 0;
  }
  FbTableau b = read_tableau(o.files[1]);
  if (o.op == "meet") out << render_text(meet(a, b)) << "\n";
  else if (o.op == "join") out << render_text(join(a, b)) << "\n";
  else if (o.op == "leq") out << (leq(a, b) ? "true" : "false") << "\n";
  else throw Refused("op: must be meet, join, leq or covers");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fb-tableaux and the extra slow Tamari lattices"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "estam, stam or tam")->check(CLI::IsMember({"estam", "stam", "tam"}));
    sub->add_option("--threads", o.threads, "accepted for compatibility; work runs on one thread")
        ->check(CLI::PositiveNumber);
  };

  auto* en = app.add_subcommand("enumerate", "stream all tableaux of one size");
  add_common(en);
  en->add_option("--n", o.n)->required();
  en->add_option("--class", o.cls)->check(CLI::IsMember({"all", "small", "binary"}));
  en->add_option("--border", o.border, "border word over ^ o <");
  en->add_option("--format", o.format)->check(CLI::IsMember({"text", "jsonl"}));

  auto* co = app.add_subcommand("count", "one value per n = 1..n-max");
  add_common(co);
  co->add_option("--sequence", o.sequence)->required()->check(CLI::IsMember({"elements", "join-irr", "spine", "congruences"}));
  co->add_option("--n-max", o.n_max)->required();

  auto* ha = app.add_subcommand("hasse", "Hasse diagram, edges bottom to top");
  add_common(ha);
  ha->add_option("--n", o.n)->required();
  ha->add_option("--format", o.format)->check(CLI::IsMember({"dot", "jsonl", "json"}));

  auto* ch = app.add_subcommand("check", "run lattice property checks");
  add_common(ch);
  ch->add_option("--n", o.n)->required();
  ch->add_option("--props", o.props, "comma separated");

  auto* ir = app.add_subcommand("irr", "join-irreducible tableaux, or one of the posets on them");
  add_common(ir);
  ir->add_option("--n", o.n)->required();
  ir->add_option("--poset", o.poset, "join, forcing, inclusion or product (DOT)");
  ir->add_option("--format", o.format)->check(CLI::IsMember({"text", "jsonl"}));

  auto* sp = app.add_subcommand("spine", "elements on a longest chain");
  add_common(sp);
  sp->add_option("--n", o.n)->required();
  sp->add_option("--format", o.format)->check(CLI::IsMember({"text", "jsonl"}));

  auto* cg = app.add_subcommand("congruences", "brute-force congruence lattice");
  add_common(cg);
  cg->add_option("--n", o.n)->required();
  cg->add_option("--format", o.format, "text, or dot for the forcing poset")->check(CLI::IsMember({"text", "dot"}));

  auto* se = app.add_subcommand("series", "generating function coefficients");
  se->add_option("--which", o.which)->required()->check(CLI::IsMember({"estam-cong", "stam-cong", "catalan"}));
  se->add_option("--order", o.order);

  auto* op = app.add_subcommand("op", "meet, join, leq or covers on tableau text files");
  op->add_option("operation", o.op)->required()->check(CLI::IsMember({"meet", "join", "leq", "covers"}));
  op->add_option("files", o.files)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    std::ostringstream out;
    int status = 0;
    if (*en) status = cmd_enumerate(o, out);
    else if (*co) status = cmd_count(o, out);
    else if (*ha) status = cmd_hasse(o, out);
    else if (*ch) status = cmd_check(o, out);
    else if (*ir) status = cmd_irr(o, out);
    else if (*sp) status = cmd_spine(o, out);
    else if (*cg) status = cmd_congruences(o, out);
    else if (*se) status = cmd_series(o, out);
    else if (*op) status = cmd_op(o, out);
    std::cout << out.str();
    return status;
  } catch (const std::exception& e) {
    std::cerr << "fbtab: " << e.what() << "\n";
    return 2;
  }
}
