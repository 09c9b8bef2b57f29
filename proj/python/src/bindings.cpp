#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "arrangeclass/enumerate.hpp"
#include "arrangeclass/groupcmp.hpp"
#include "arrangeclass/lattice.hpp"
#include "arrangeclass/moves.hpp"
#include "arrangeclass/pi1.hpp"
#include "arrangeclass/render.hpp"
#include "arrangeclass/sigs.hpp"
#include "arrangeclass/similarity.hpp"

namespace py = pybind11;
using namespace arrangeclass;

namespace {

LefschetzList make_list(int lines, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Pair> ps;
  for (auto [a, b] : pairs) ps.emplace_back(a, b);
  return LefschetzList(lines, std::move(ps));
}

std::vector<LefschetzList> all_lists(const OmegaList& omega) {
  std::vector<LefschetzList> out;
  out.reserve(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) out.push_back(omega.at(i));
  return out;
}

GroupPresentation make_presentation(int generators, const std::vector<Word>& relators) {
  std::ostringstream text;
  text << "gens: " << generators << '\n';
  for (const Word& r : relators) {
    for (int x : r) text << x << ' ';
    text << '\n';
  }
  std::istringstream in(text.str());
  return GroupPresentation::parse_plain(in);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wiring diagrams of real line arrangements: enumeration, similarity, lattices, groups.";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_AssertionError);

  py::class_<LefschetzList>(m, "LefschetzList")
      .def(py::init(&make_list), py::arg("lines"), py::arg("pairs"))
      .def_static("parse", [](const std::string& text) { return LefschetzList::parse(text); })
      .def_property_readonly("lines", &LefschetzList::lines)
      .def_property_readonly("pairs", [](const LefschetzList& l) {
        std::vector<std::pair<int, int>> out;
        for (const Pair& p : l.pairs()) out.emplace_back(p.a, p.b);
        return out;
      })
      .def("__len__", &LefschetzList::size)
      .def("__str__", &LefschetzList::to_string)
      .def("__repr__", [](const LefschetzList& l) { return "LefschetzList('" + l.to_string() + "')"; })
      .def("__eq__", [](const LefschetzList& x, const LefschetzList& y) { return x == y; })
      .def("__lt__", [](const LefschetzList& x, const LefschetzList& y) { return x < y; })
      .def("__hash__", [](const LefschetzList& l) { return std::hash<std::string>{}(l.to_string()); });

  m.def("check_uip", &check_uip);
  m.def("signature_of", [](const LefschetzList& l) { return signature_of(l).to_string(); });
  m.def("admissible_signatures", [](int lines) {
    std::vector<std::string> out;
    for (const auto& s : admissible_signatures(lines)) out.push_back(s.to_string());
    return out;
  });
  m.def("classify_signatures", [](int lines) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& v : classify_signatures(lines)) out.emplace_back(v.signature.to_string(), v.admissible, v.reason);
    return out;
  });

  m.def("equiv_class_min", &equiv_class_min);
  m.def("equiv_class_size", &equiv_class_size);
  m.def("tau", &tau);
  m.def("mu", &mu);
  m.def("sigma", &sigma);
  m.def("triangle_moves", [](const LefschetzList& l) { return triangle_moves(l); });

  m.def("enumerate_omega", [](const std::string& sig, int p0, double mem_gb) {
    EnumerateOptions opts;
    opts.p0 = p0;
    opts.mem_gb = mem_gb;
    OmegaList omega;
    {
      py::gil_scoped_release release;
      omega = enumerate_omega(Signature::parse(sig), opts);
    }
    return all_lists(omega);
  }, py::arg("signature"), py::arg("p0") = 0, py::arg("mem_gb") = 2.0);

  m.def("similarity_classes", [](const std::string& sig, const std::string& rels) {
    std::vector<LefschetzList> out;
    py::gil_scoped_release release;
    const OmegaList omega = enumerate_omega(Signature::parse(sig));
    const auto cls = classify(omega, RelationSet::parse(rels));
    for (std::size_t i : cls.representatives()) out.push_back(omega.at(i));
    return out;
  }, py::arg("signature"), py::arg("relations") = "stmx");

  m.def("relation_table", [](const std::string& sig) {
    std::vector<std::pair<std::string, std::size_t>> out;
    py::gil_scoped_release release;
    for (const auto& row : relation_table(enumerate_omega(Signature::parse(sig)))) {
      out.emplace_back(row.relations.marks(), row.classes);
    }
    return out;
  });

  m.def("canonical_lattice", [](const LefschetzList& l) { return canonical_form(lattice_of(l)).rows; });
  m.def("lattices_isomorphic", [](const LefschetzList& x, const LefschetzList& y) {
    return lattices_isomorphic(lattice_of(x), lattice_of(y));
  });
  m.def("structured_group", [](const LefschetzList& l, const std::string& mode) -> std::optional<std::string> {
    auto g = structured_group_oracle(lattice_of(l), parse_group_mode(mode));
    if (!g) return std::nullopt;
    return g->to_string();
  }, py::arg("list"), py::arg("mode") = "projective");

  m.def("skeleton", [](const LefschetzList& l, std::size_t i) { return compute_skeleton(l, i).to_string(); });

  py::class_<GroupPresentation>(m, "GroupPresentation")
      .def(py::init(&make_presentation), py::arg("generators"), py::arg("relators"))
      .def_readonly("generators", &GroupPresentation::generators)
      .def_readonly("relators", &GroupPresentation::relators)
      .def("to_plain", &GroupPresentation::to_plain)
      .def("to_gap", &GroupPresentation::to_gap);

  m.def("presentation", [](const LefschetzList& l, const std::string& mode) {
    return presentation(l, parse_group_mode(mode));
  }, py::arg("list"), py::arg("mode") = "affine");
  m.def("structured_group_presentation", [](const std::string& text) {
    return structured_group_presentation(StructuredGroup::parse(text));
  });

  m.def("abelianization", [](const GroupPresentation& p) {
    const Abelianization a = abelianization(p);
    return py::make_tuple(a.rank, a.torsion);
  });
  m.def("quotient_count", [](const GroupPresentation& p, const std::string& target) {
    const QuotientCount q = quotient_count(p, finite_group(target));
    return py::make_tuple(q.homs, q.surjections);
  });
  m.def("lcs_ranks", &lcs_ranks, py::arg("presentation"), py::arg("depth") = 3);
  m.def("profile", [](const GroupPresentation& p) { return invariant_profile(p).to_string(); });
  m.def("profiles_match", [](const GroupPresentation& x, const GroupPresentation& y) {
    return std::string(to_string(profiles_match(x, y)));
  });

  m.def("render_svg", [](const LefschetzList& l, const std::string& kind) {
    return render_svg(l, parse_render_kind(kind));
  }, py::arg("list"), py::arg("kind") = "wiring");
}
