#include "horocalc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "horocalc/dynkin.hpp"
#include "horocalc/horospherical.hpp"
#include "horocalc/parabolic.hpp"
#include "horocalc/pasquier.hpp"
#include "horocalc/spinor.hpp"
#include "horocalc/vmrt.hpp"

namespace horocalc {

namespace {

using Json = nlohmann::ordered_json;

struct TableData {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const TableData& table) {
  std::ostringstream out;
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    if (j) out << ',';
    out << csv_cell(table.columns[j]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << csv_cell(row[j]);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_markdown(const TableData& table) {
  std::ostringstream out;
  out << '|';
  for (const auto& col : table.columns) out << ' ' << col << " |";
  out << "\n|";
  for (std::size_t j = 0; j < table.columns.size(); ++j) out << " --- |";
  out << '\n';
  for (const auto& row : table.rows) {
    out << '|';
    for (const auto& cell : row) out << ' ' << cell << " |";
    out << '\n';
  }
  return out.str();
}

std::string int_list(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

// "1,0;0,1" -> {{1,0},{0,1}}; empty string -> no generators.
std::vector<std::vector<long long>> parse_cone(const std::string& text) {
  std::vector<std::vector<long long>> out;
  if (text.empty()) return out;
  std::stringstream vectors(text);
  std::string vec;
  while (std::getline(vectors, vec, ';')) {
    std::vector<long long> coords;
    std::stringstream comps(vec);
    std::string comp;
    while (std::getline(comps, comp, ',')) {
      std::size_t used = 0;
      const long long value = std::stoll(comp, &used);
      if (used != comp.size()) throw std::invalid_argument("malformed cone component '" + comp + "'");
      coords.push_back(value);
    }
    if (coords.empty()) throw std::invalid_argument("empty cone generator in '" + text + "'");
    out.push_back(std::move(coords));
  }
  return out;
}

struct Rendered {
  Json payload;
  TableData table;                 // markdown
  std::optional<TableData> csv;    // when the csv column set differs
};

Rendered cmd_roots(const std::string& type_text) {
  const RootSystem rs = build_root_system(parse_dynkin_type(type_text));

  Json payload;
  payload["type"] = to_string(rs.type());
  payload["rank"] = rs.rank();
  payload["positive_root_count"] = rs.positive_roots().size();
  payload["cartan"] = rs.cartan_matrix();
  payload["positive_roots"] = rs.positive_roots();

  TableData table;
  for (int i = 1; i <= rs.rank(); ++i) table.columns.push_back("a_" + std::to_string(i));
  table.columns.push_back("height");
  for (const auto& beta : rs.positive_roots()) {
    std::vector<std::string> row;
    long long h = 0;
    for (int c : beta) {
      row.push_back(std::to_string(c));
      h += c;
    }
    row.push_back(std::to_string(h));
    table.rows.push_back(std::move(row));
  }
  return {std::move(payload), std::move(table)};
}

Rendered cmd_flag_dim(const std::string& type_text, const std::vector<int>& marked) {
  const RootSystem rs = build_root_system(parse_dynkin_type(type_text));
  const IndexSet marks(marked);
  if (marks.empty()) throw std::invalid_argument("flag-dim requires at least one marked node");
  const IndexSet levi = IndexSet::full(rs.rank()).minus(marks);
  const long long dim = flag_dim(rs, levi);

  Json payload;
  payload["type"] = to_string(rs.type());
  payload["marked"] = marks.ids();
  payload["levi"] = levi.ids();
  payload["dim"] = dim;

  TableData table;
  table.columns = {"type", "marked", "dim"};
  table.rows = {{to_string(rs.type()), int_list(marks.ids()), std::to_string(dim)}};
  return {std::move(payload), std::move(table)};
}

Rendered cmd_index(const std::string& type_text, const std::vector<int>& marked) {
  const RootSystem rs = build_root_system(parse_dynkin_type(type_text));
  const IndexSet marks(marked);
  if (marks.empty()) throw std::invalid_argument("index requires at least one marked node");
  const IndexSet levi = IndexSet::full(rs.rank()).minus(marks);
  const std::map<int, long long> coeffs = fano_index_vector(rs, levi);

  Json payload;
  payload["type"] = to_string(rs.type());
  payload["marked"] = marks.ids();
  Json list = Json::array();
  for (const auto& [node, c] : coeffs) {
    list.push_back(Json{{"node", node}, {"coefficient", c}});
  }
  payload["coefficients"] = std::move(list);

  TableData table;
  table.columns = {"type", "node", "coefficient"};
  for (const auto& [node, c] : coeffs) {
    table.rows.push_back({to_string(rs.type()), std::to_string(node), std::to_string(c)});
  }
  return {std::move(payload), std::move(table)};
}

Rendered cmd_pasquier_table(int max_rank) {
  const std::vector<TripleRecord> records = emit_table(max_rank);

  Json payload = Json::array();
  for (const TripleRecord& r : records) {
    Json row;
    row["case"] = to_string(r.triple.tag);
    row["label"] = r.triple.label();
    row["group"] = to_string(r.triple.group());
    if (r.triple.tag == CaseTag::i || r.triple.tag == CaseTag::iii) row["m"] = r.triple.m;
    if (r.triple.tag == CaseTag::iii) row["k"] = r.triple.k;
    row["mark1"] = r.triple.mark1();
    row["mark2"] = r.triple.mark2();
    row["d1"] = r.d1;
    row["d2"] = r.d2;
    row["c1"] = r.c1;
    row["c2"] = r.c2;
    row["r1"] = r.r1;
    row["r2"] = r.r2;
    row["r_x"] = r.r_x;
    row["dim_x"] = r.dim_x;
    row["obstruction_holds"] = r.obstruction_holds;
    payload.push_back(std::move(row));
  }

  TableData table;
  table.columns = {"Case", "d1", "d2", "r1", "r2", "Obstruction holds?"};
  for (const TripleRecord& r : records) {
    table.rows.push_back({r.triple.label(), std::to_string(r.d1), std::to_string(r.d2),
                          std::to_string(r.r1), std::to_string(r.r2),
                          r.obstruction_holds ? "Yes" : "No"});
  }

  // csv carries the full record in field order
  TableData csv;
  csv.columns = {"case", "m", "k", "d1", "d2", "c1", "c2", "r1", "r2", "r_x", "dim_x",
                 "obstruction_holds"};
  for (const TripleRecord& r : records) {
    const bool has_m = r.triple.tag == CaseTag::i || r.triple.tag == CaseTag::iii;
    const bool has_k = r.triple.tag == CaseTag::iii;
    csv.rows.push_back({to_string(r.triple.tag), has_m ? std::to_string(r.triple.m) : "",
                        has_k ? std::to_string(r.triple.k) : "", std::to_string(r.d1),
                        std::to_string(r.d2), std::to_string(r.c1), std::to_string(r.c2),
                        std::to_string(r.r1), std::to_string(r.r2), std::to_string(r.r_x),
                        std::to_string(r.dim_x), r.obstruction_holds ? "true" : "false"});
  }
  return {std::move(payload), std::move(table), std::move(csv)};
}

Rendered cmd_orbit_dim(const std::string& type_text, const std::vector<int>& levi_nodes,
                       int rank_m, const std::string& cone_text,
                       const std::vector<int>& color_nodes) {
  const RootSystem rs = build_root_system(parse_dynkin_type(type_text));
  const IndexSet levi(levi_nodes);
  const LatticeData lat{rank_m};
  ColoredFanEntry entry;
  entry.cone_generators = parse_cone(cone_text);
  entry.colors = IndexSet(color_nodes);

  const long long dim = orbit_dimension(rs, levi, lat, entry);
  const long long flag = flag_dim(rs, levi.unite(entry.colors));

  Json payload;
  payload["type"] = to_string(rs.type());
  payload["levi"] = levi.ids();
  payload["rank_m"] = rank_m;
  payload["cone_generators"] = entry.cone_generators;
  payload["colors"] = entry.colors.ids();
  payload["orthogonal_rank"] = dim - flag;
  payload["flag_dim"] = flag;
  payload["dim"] = dim;

  TableData table;
  table.columns = {"type", "levi", "rank_m", "colors", "orthogonal_rank", "flag_dim", "dim"};
  table.rows = {{to_string(rs.type()), int_list(levi.ids()), std::to_string(rank_m),
                 int_list(entry.colors.ids()), std::to_string(dim - flag), std::to_string(flag),
                 std::to_string(dim)}};
  return {std::move(payload), std::move(table)};
}

Rendered cmd_vmrt_stratify(int m, int k, const std::string& at, int samples,
                           std::uint64_t seed) {
  const SkewFormSpace sp = standard_odd_symplectic(m);
  const bool closed = at == "closed";
  const Subspace v_k = random_isotropic(sp, k, closed, seed);
  const VmrtStratification st = stratify(sp, v_k, samples, seed + 1);

  Json payload;
  payload["m"] = st.m;
  payload["k"] = st.k;
  payload["at"] = at;
  payload["samples"] = samples;
  payload["seed"] = seed;
  payload["point_in_z"] = st.point_in_z;
  payload["generic_fiber_dim"] = st.generic_fiber_dim;
  if (st.jump_fiber_dim) {
    payload["jump_fiber_dim"] = *st.jump_fiber_dim;
  } else {
    payload["jump_fiber_dim"] = nullptr;
  }
  payload["jump_locus"] = st.jump_locus;
  payload["smooth"] = st.smooth;
  payload["samples_generic"] = st.samples_generic;
  payload["samples_jump"] = st.samples_jump;

  TableData table;
  table.columns = {"m", "k", "at", "point_in_z", "generic_fiber_dim", "jump_fiber_dim",
                   "jump_locus", "smooth"};
  table.rows = {{std::to_string(st.m), std::to_string(st.k), at,
                 st.point_in_z ? "true" : "false", std::to_string(st.generic_fiber_dim),
                 st.jump_fiber_dim ? std::to_string(*st.jump_fiber_dim) : "-", st.jump_locus,
                 st.smooth ? "true" : "false"}};
  return {std::move(payload), std::move(table)};
}

Rendered cmd_spinor_check(int samples, std::uint64_t seed) {
  const QuadraticSpace7 q = standard_split_form7();
  RationalMatrix v2_basis(QuadraticSpace7::kDim, 2);
  v2_basis.at(0, 0) = 1;  // u_1
  v2_basis.at(1, 1) = 1;  // u_2
  const Lemma45Report report = lemma45_check(q, Subspace(std::move(v2_basis)), samples, seed);

  Json payload;
  payload["samples"] = samples;
  payload["seed"] = seed;
  payload["pencil_span_dim"] = report.pencil_span_dim;
  Json lines = Json::array();
  for (const Lemma45Line& line : report.lines) {
    lines.push_back(Json{{"line", line.line_coeffs},
                         {"family_span_dim", line.family_span_dim},
                         {"contains_pencil", line.contains_pencil}});
  }
  payload["lines"] = std::move(lines);
  payload["clifford_samples"] = report.clifford_samples;
  payload["kernel_samples"] = report.kernel_samples;
  payload["all_pass"] = report.all_pass;

  TableData table;
  table.columns = {"line", "family_span_dim", "contains_pencil"};
  for (const Lemma45Line& line : report.lines) {
    std::string coeffs;
    for (std::size_t i = 0; i < line.line_coeffs.size(); ++i) {
      if (i) coeffs += ' ';
      coeffs += std::to_string(line.line_coeffs[i]);
    }
    table.rows.push_back({coeffs, std::to_string(line.family_span_dim),
                          line.contains_pencil ? "true" : "false"});
  }
  return {std::move(payload), std::move(table)};
}

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
  CommandResult result;
  if (argv.empty()) {
    result.exit_code = 2;
    result.diagnostics.push_back("empty argument vector");
    return result;
  }

  CLI::App app{"Root-system, flag-variety and horospherical computations", "horocalc"};
  app.require_subcommand(1);

  std::string format = "json";
  std::function<Rendered()> action;

  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}))
        ->capture_default_str();
  };

  {
    auto* sub = app.add_subcommand("roots", "Positive roots and Cartan matrix of a simple type");
    auto type_text = std::make_shared<std::string>();
    sub->add_option("type", *type_text, "Dynkin type, e.g. B3")->required();
    add_format(sub);
    sub->callback([&action, type_text] {
      action = [type_text] { return cmd_roots(*type_text); };
    });
  }
  {
    auto* sub = app.add_subcommand("flag-dim", "Dimension of G/P for marked diagram nodes");
    auto type_text = std::make_shared<std::string>();
    auto marked = std::make_shared<std::vector<int>>();
    sub->add_option("type", *type_text, "Dynkin type, e.g. B3")->required();
    sub->add_option("--marked", *marked, "Marked (crossed) nodes")->required()->delimiter(',');
    add_format(sub);
    sub->callback([&action, type_text, marked] {
      action = [type_text, marked] { return cmd_flag_dim(*type_text, *marked); };
    });
  }
  {
    auto* sub = app.add_subcommand("index", "Fano index coefficients of G/P");
    auto type_text = std::make_shared<std::string>();
    auto marked = std::make_shared<std::vector<int>>();
    sub->add_option("type", *type_text, "Dynkin type, e.g. B3")->required();
    sub->add_option("--marked", *marked, "Marked (crossed) nodes")->required()->delimiter(',');
    add_format(sub);
    sub->callback([&action, type_text, marked] {
      action = [type_text, marked] { return cmd_index(*type_text, *marked); };
    });
  }
  {
    auto* sub = app.add_subcommand(
        "pasquier-table", "Classification table of Picard-rank-one horospherical varieties");
    auto max_rank = std::make_shared<int>(8);
    sub->add_option("--max-rank", *max_rank, "Largest group rank enumerated")
        ->capture_default_str();
    add_format(sub);
    sub->callback([&action, max_rank] {
      action = [max_rank] { return cmd_pasquier_table(*max_rank); };
    });
  }
  {
    auto* sub = app.add_subcommand("orbit-dim", "Orbit dimension of a colored-fan entry");
    auto type_text = std::make_shared<std::string>();
    auto levi = std::make_shared<std::vector<int>>();
    auto rank_m = std::make_shared<int>(0);
    auto cone = std::make_shared<std::string>();
    auto colors = std::make_shared<std::vector<int>>();
    sub->add_option("type", *type_text, "Dynkin type, e.g. B3")->required();
    sub->add_option("--levi", *levi, "Levi subset of the open orbit")->delimiter(',');
    sub->add_option("--rank-m", *rank_m, "Rank of the character lattice M")->required();
    sub->add_option("--cone", *cone,
                    "Cone generators: components comma-separated, vectors "
                    "semicolon-separated; empty for the zero cone");
    sub->add_option("--colors", *colors, "Colors of the fan entry")->delimiter(',');
    add_format(sub);
    sub->callback([&action, type_text, levi, rank_m, cone, colors] {
      action = [type_text, levi, rank_m, cone, colors] {
        return cmd_orbit_dim(*type_text, *levi, *rank_m, *cone, *colors);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("vmrt-stratify",
                                   "Fiber dimensions of the line fibration at a point of an odd "
                                   "symplectic Grassmannian");
    auto m = std::make_shared<int>();
    auto k = std::make_shared<int>();
    auto at = std::make_shared<std::string>("generic");
    auto samples = std::make_shared<int>(50);
    auto seed = std::make_shared<std::uint64_t>(1);
    sub->add_option("--m", *m, "Half-rank of the skew form")->required();
    sub->add_option("--k", *k, "Dimension of the isotropic subspaces")->required();
    sub->add_option("--at", *at, "Point location: generic or closed")
        ->check(CLI::IsMember({"generic", "closed"}))
        ->capture_default_str();
    sub->add_option("--samples", *samples, "Sampled hyperplanes")->capture_default_str();
    sub->add_option("--seed", *seed, "Sampling seed")->capture_default_str();
    add_format(sub);
    sub->callback([&action, m, k, at, samples, seed] {
      action = [m, k, at, samples, seed] {
        return cmd_vmrt_stratify(*m, *k, *at, *samples, *seed);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("spinor-check",
                                   "Pencil/family incidence certificate on the spinor variety");
    auto samples = std::make_shared<int>(5);
    auto seed = std::make_shared<std::uint64_t>(1);
    sub->add_option("--samples", *samples, "Sampled lines in V_2")->capture_default_str();
    sub->add_option("--seed", *seed, "Sampling seed")->capture_default_str();
    add_format(sub);
    sub->callback([&action, samples, seed] {
      action = [samples, seed] { return cmd_spinor_check(*samples, *seed); };
    });
  }

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const std::string& a : argv) raw.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp& e) {
    result.output = app.help();
    result.exit_code = 0;
    return result;
  } catch (const CLI::ParseError& e) {
    result.diagnostics.push_back(e.what());
    result.exit_code = e.get_exit_code() == 0 ? 2 : e.get_exit_code();
    return result;
  }

  try {
    const Rendered rendered = action();
    if (format == "json") {
      result.output = rendered.payload.dump(2) + "\n";
    } else if (format == "csv") {
      result.output = render_csv(rendered.csv ? *rendered.csv : rendered.table);
    } else {
      result.output = render_markdown(rendered.table);
    }
  } catch (const std::exception& e) {
    result.diagnostics.push_back(e.what());
    result.exit_code = 1;
  }
  return result;
}

}  // namespace horocalc
