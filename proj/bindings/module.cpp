#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "horocalc/cli.hpp"
#include "horocalc/dynkin.hpp"
#include "horocalc/horospherical.hpp"
#include "horocalc/parabolic.hpp"
#include "horocalc/pasquier.hpp"
#include "horocalc/spinor.hpp"
#include "horocalc/vmrt.hpp"

namespace py = pybind11;

namespace {

using namespace horocalc;

RootSystem rs_of(const std::string& type_text) {
  return build_root_system(parse_dynkin_type(type_text));
}

py::dict record_to_dict(const TripleRecord& r) {
  py::dict d;
  d["case"] = to_string(r.triple.tag);
  d["label"] = r.triple.label();
  d["group"] = to_string(r.triple.group());
  d["m"] = r.triple.m;
  d["k"] = r.triple.k;
  d["mark1"] = r.triple.mark1();
  d["mark2"] = r.triple.mark2();
  d["d1"] = r.d1;
  d["d2"] = r.d2;
  d["c1"] = r.c1;
  d["c2"] = r.c2;
  d["r1"] = r.r1;
  d["r2"] = r.r2;
  d["r_x"] = r.r_x;
  d["dim_x"] = r.dim_x;
  d["obstruction_holds"] = r.obstruction_holds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Root-system, flag-variety and horospherical computations";

  m.def(
      "positive_root_count",
      [](const std::string& type) { return rs_of(type).positive_roots().size(); },
      py::arg("type"));

  m.def(
      "positive_roots",
      [](const std::string& type) { return rs_of(type).positive_roots(); },
      py::arg("type"));

  m.def(
      "cartan_matrix", [](const std::string& type) { return rs_of(type).cartan_matrix(); },
      py::arg("type"));

  m.def(
      "subdiagram_components",
      [](const std::string& type, const std::vector<int>& nodes) {
        std::vector<std::vector<int>> out;
        for (const IndexSet& block : subdiagram_components(rs_of(type), IndexSet(nodes))) {
          out.push_back(block.ids());
        }
        return out;
      },
      py::arg("type"), py::arg("nodes"));

  m.def(
      "components_disjoint",
      [](const std::string& type, const std::vector<int>& a, const std::vector<int>& b) {
        return components_disjoint(rs_of(type), IndexSet(a), IndexSet(b));
      },
      py::arg("type"), py::arg("a"), py::arg("b"));

  m.def(
      "flag_dim",
      [](const std::string& type, const std::vector<int>& levi) {
        return flag_dim(rs_of(type), IndexSet(levi));
      },
      py::arg("type"), py::arg("levi"));

  m.def(
      "parabolic_quotient_dim",
      [](const std::string& type, const std::vector<int>& levi_big,
         const std::vector<int>& levi_small) {
        return parabolic_quotient_dim(rs_of(type), IndexSet(levi_big), IndexSet(levi_small));
      },
      py::arg("type"), py::arg("levi_big"), py::arg("levi_small"));

  m.def(
      "fano_index_vector",
      [](const std::string& type, const std::vector<int>& levi) {
        return fano_index_vector(rs_of(type), IndexSet(levi));
      },
      py::arg("type"), py::arg("levi"));

  m.def(
      "fano_index",
      [](const std::string& type, int marked) { return fano_index(rs_of(type), marked); },
      py::arg("type"), py::arg("marked"));

  m.def(
      "pasquier_table",
      [](int max_rank) {
        py::list out;
        for (const TripleRecord& r : emit_table(max_rank)) out.append(record_to_dict(r));
        return out;
      },
      py::arg("max_rank") = 8);

  m.def(
      "orbit_dimension",
      [](const std::string& type, const std::vector<int>& levi, int rank_m,
         const std::vector<std::vector<long long>>& cone_generators,
         const std::vector<int>& colors) {
        ColoredFanEntry entry{cone_generators, IndexSet(colors)};
        return orbit_dimension(rs_of(type), IndexSet(levi), LatticeData{rank_m}, entry);
      },
      py::arg("type"), py::arg("levi"), py::arg("rank_m"), py::arg("cone_generators"),
      py::arg("colors"));

  m.def(
      "color_partition_check",
      [](const std::string& type, const std::vector<int>& levi, const std::vector<int>& j_set,
         const std::vector<int>& d_set) {
        return color_partition_check(rs_of(type), IndexSet(levi), IndexSet(j_set),
                                     IndexSet(d_set));
      },
      py::arg("type"), py::arg("levi"), py::arg("j_set"), py::arg("d_set"));

  m.def(
      "fibration_dim_identity",
      [](const std::string& type, const std::vector<int>& levi, const std::vector<int>& j_set) {
        return fibration_dim_identity(rs_of(type), IndexSet(levi), IndexSet(j_set));
      },
      py::arg("type"), py::arg("levi"), py::arg("j_set"));

  m.def("odd_grassmannian_dim", &odd_grassmannian_dim, py::arg("i"), py::arg("m"));

  m.def(
      "vmrt_stratify",
      [](int m_param, int k, bool at_closed, int samples, std::uint64_t seed) {
        const SkewFormSpace sp = standard_odd_symplectic(m_param);
        const Subspace v_k = random_isotropic(sp, k, at_closed, seed);
        const VmrtStratification st = stratify(sp, v_k, samples, seed + 1);
        py::dict d;
        d["m"] = st.m;
        d["k"] = st.k;
        d["point_in_z"] = st.point_in_z;
        d["generic_fiber_dim"] = st.generic_fiber_dim;
        d["jump_fiber_dim"] =
            st.jump_fiber_dim ? py::cast(*st.jump_fiber_dim) : py::none().cast<py::object>();
        d["jump_locus"] = st.jump_locus;
        d["smooth"] = st.smooth;
        d["samples_generic"] = st.samples_generic;
        d["samples_jump"] = st.samples_jump;
        return d;
      },
      py::arg("m"), py::arg("k"), py::arg("at_closed"), py::arg("samples") = 50,
      py::arg("seed") = 1);

  m.def(
      "spinor_check",
      [](int samples, std::uint64_t seed) {
        const QuadraticSpace7 q = standard_split_form7();
        RationalMatrix basis(QuadraticSpace7::kDim, 2);
        basis.at(0, 0) = 1;
        basis.at(1, 1) = 1;
        const Lemma45Report report = lemma45_check(q, Subspace(std::move(basis)), samples, seed);
        py::dict d;
        d["pencil_span_dim"] = report.pencil_span_dim;
        py::list lines;
        for (const Lemma45Line& line : report.lines) {
          py::dict ld;
          ld["line"] = line.line_coeffs;
          ld["family_span_dim"] = line.family_span_dim;
          ld["contains_pencil"] = line.contains_pencil;
          lines.append(ld);
        }
        d["lines"] = lines;
        d["clifford_samples"] = report.clifford_samples;
        d["kernel_samples"] = report.kernel_samples;
        d["all_pass"] = report.all_pass;
        return d;
      },
      py::arg("samples") = 5, py::arg("seed") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> argv = {"horocalc"};
        argv.insert(argv.end(), args.begin(), args.end());
        const CommandResult result = run(argv);
        return py::make_tuple(result.exit_code, result.output, result.diagnostics);
      },
      py::arg("args"));
}
