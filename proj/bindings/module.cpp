#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "dyck/dyck.hpp"
#include "dyck/enumeration.hpp"
#include "dyck/grothendieck.hpp"
#include "dyck/oracle.hpp"
#include "dyck/partition.hpp"
#include "dyck/series.hpp"
#include "dyck/svg.hpp"
#include "dyck/syzygy.hpp"

namespace py = pybind11;

namespace {

py::int_ big(const dyck::Int& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::tuple box_tuple(const dyck::Box& b) { return py::make_tuple(b.x, b.y); }

py::list box_list(const std::vector<dyck::Box>& boxes) {
  py::list out;
  for (const dyck::Box& b : boxes) out.append(box_tuple(b));
  return out;
}

dyck::Box as_box(const py::handle& h) {
  auto [x, y] = h.cast<std::pair<int, int>>();
  return dyck::Box{x, y};
}

std::vector<dyck::Box> as_boxes(const py::iterable& it) {
  std::vector<dyck::Box> boxes;
  for (const py::handle& h : it) boxes.push_back(as_box(h));
  return boxes;
}

dyck::DyckPath as_path(const py::iterable& cells) {
  dyck::PathCheck check = dyck::validate_dyck_path(as_boxes(cells));
  if (!check) throw py::value_error(check.error);
  return *check.path;
}

dyck::DyckPattern as_pattern(const py::iterable& paths, const py::iterable& bullets) {
  std::vector<dyck::DyckPath> ps;
  for (const py::handle& h : paths) ps.push_back(as_path(h.cast<py::iterable>()));
  dyck::PatternCheck check = dyck::make_pattern(std::move(ps), as_boxes(bullets));
  if (!check) throw py::value_error(check.error);
  return *check.pattern;
}

py::dict member_dict(const dyck::FamilyMember& m, bool b_side) {
  py::dict d;
  d["pattern"] = py::cast(m.pattern);
  d["label"] = py::cast(m.label);
  if (b_side) d["mu"] = py::cast(m.base);
  d["d"] = m.d;
  d["b"] = m.b;
  return d;
}

py::list family_list(const dyck::PatternFamily& family) {
  py::list out;
  for (const dyck::FamilyMember& m : family.members)
    out.append(member_dict(m, family.kind == dyck::FamilyKind::BSide));
  return out;
}

py::list series_terms(const dyck::HilbertSeries& s) {
  py::list out;
  for (const auto& [deg, coeff] : s.terms())
    out.append(py::make_tuple(deg, big(coeff)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dyck pattern calculus for GL-invariant ideals of a matrix coordinate ring";

  py::class_<dyck::Partition>(m, "Partition")
      .def(py::init<>())
      .def(py::init<std::vector<int>>(), py::arg("parts"))
      .def_property_readonly("parts", &dyck::Partition::parts)
      .def_property_readonly("size", &dyck::Partition::size)
      .def_property_readonly("length", &dyck::Partition::length)
      .def("part", &dyck::Partition::part, py::arg("row"))
      .def("contains", [](const dyck::Partition& p, const py::tuple& box) {
        return p.contains(as_box(box));
      })
      .def("boxes", [](const dyck::Partition& p) { return box_list(p.boxes()); })
      .def("corners", [](const dyck::Partition& p) { return box_list(p.corners()); })
      .def("conjugate", &dyck::Partition::conjugate)
      .def("__len__", &dyck::Partition::length)
      .def("__eq__", [](const dyck::Partition& a, const dyck::Partition& b) { return a == b; },
           py::is_operator())
      .def("__hash__", [](const dyck::Partition& p) {
        return py::hash(py::tuple(py::cast(p.parts())));
      })
      .def("__str__", [](const dyck::Partition& p) { return dyck::to_string(p); })
      .def("__repr__", [](const dyck::Partition& p) {
        return "Partition(" + dyck::to_string(p) + ")";
      });

  py::class_<dyck::DyckPath>(m, "DyckPath")
      .def_property_readonly("cells", [](const dyck::DyckPath& p) { return box_list(p.cells()); })
      .def_property_readonly("level", &dyck::DyckPath::level)
      .def_property_readonly("start", [](const dyck::DyckPath& p) { return box_tuple(p.start()); })
      .def_property_readonly("end", [](const dyck::DyckPath& p) { return box_tuple(p.end()); })
      .def("corners", [](const dyck::DyckPath& p) {
        const auto c = p.corners();
        py::dict d;
        d["inner"] = box_list(c.inner);
        d["outer"] = box_list(c.outer);
        return d;
      })
      .def("__len__", &dyck::DyckPath::length)
      .def("__str__", [](const dyck::DyckPath& p) { return dyck::to_string(p); })
      .def("__repr__", [](const dyck::DyckPath& p) { return "DyckPath(" + dyck::to_string(p) + ")"; });

  py::class_<dyck::DyckPattern>(m, "DyckPattern")
      .def_property_readonly("paths", [](const dyck::DyckPattern& p) {
        py::list out;
        for (const dyck::DyckPath& path : p.paths()) out.append(py::cast(path));
        return out;
      })
      .def_property_readonly("bullets", [](const dyck::DyckPattern& p) { return box_list(p.bullets()); })
      .def_property_readonly("d", &dyck::DyckPattern::d)
      .def_property_readonly("b", &dyck::DyckPattern::b)
      .def("support", [](const dyck::DyckPattern& p) { return box_list(p.support()); })
      .def("empty", &dyck::DyckPattern::empty)
      .def("__eq__", [](const dyck::DyckPattern& a, const dyck::DyckPattern& b) { return a == b; },
           py::is_operator())
      .def("__str__", [](const dyck::DyckPattern& p) { return dyck::to_string(p); })
      .def("__repr__", [](const dyck::DyckPattern& p) {
        return "DyckPattern(" + dyck::to_string(p) + ")";
      });

  py::class_<dyck::HilbertSeries>(m, "HilbertSeries")
      .def_property_readonly("ord", &dyck::HilbertSeries::ord)
      .def_property_readonly("max_deg", &dyck::HilbertSeries::max_deg)
      .def("is_zero", &dyck::HilbertSeries::is_zero)
      .def("coeff", [](const dyck::HilbertSeries& s, int deg) { return big(s.coeff(deg)); },
           py::arg("deg"))
      .def("terms", &series_terms)
      .def("__eq__", [](const dyck::HilbertSeries& a, const dyck::HilbertSeries& b) { return a == b; },
           py::is_operator())
      .def("__str__", &dyck::HilbertSeries::to_string)
      .def("__repr__", [](const dyck::HilbertSeries& s) {
        return "HilbertSeries(" + s.to_string() + ")";
      });

  py::class_<dyck::BettiTable>(m, "BettiTable")
      .def_property_readonly("base", [](const dyck::BettiTable& t) { return t.lambda; })
      .def_readonly("m", &dyck::BettiTable::m)
      .def_readonly("n", &dyck::BettiTable::n)
      .def_property_readonly("rows", [](const dyck::BettiTable& t) {
        py::dict rows;
        for (const auto& [r, cols] : t.rows) {
          py::dict row;
          for (const auto& [c, v] : cols) row[py::int_(c)] = big(v);
          rows[py::int_(r)] = row;
        }
        return rows;
      })
      .def("to_text", &dyck::BettiTable::to_text)
      .def("__str__", &dyck::BettiTable::to_text);

  m.def("parse_partition", &dyck::parse_partition, py::arg("text"));
  m.def("schur_dim", [](const dyck::Partition& p, int k) { return big(dyck::schur_dim(p, k)); },
        py::arg("p"), py::arg("k"));
  m.def("leq", &dyck::leq, py::arg("a"), py::arg("b"),
        "Rowwise containment of partition diagrams.");
  m.def("union_of", &dyck::union_of, py::arg("a"), py::arg("b"));

  m.def("make_path", &as_path, py::arg("cells"),
        "Validated Dyck path from a list of (x, y) boxes.");
  m.def("make_pattern", &as_pattern, py::arg("paths"), py::arg("bullets"),
        "Validated pattern from lists of paths and bullet boxes.");
  m.def("is_admissible", [](const dyck::Partition& lambda, const dyck::DyckPattern& pattern) {
    const dyck::AdmissibilityReport r = dyck::is_admissible(lambda, pattern);
    py::dict d;
    d["ok"] = r.ok;
    d["condition"] = r.condition;
    d["witness"] = box_tuple(r.witness);
    d["message"] = r.message;
    return d;
  }, py::arg("base"), py::arg("pattern"));
  m.def("label_of", [](const dyck::Partition& lambda, const dyck::DyckPattern& pattern) {
    return dyck::lambda_of(lambda, pattern);
  }, py::arg("base"), py::arg("pattern"),
        "The partition obtained by adding the pattern support, or None.");

  m.def("kac_patterns", [](const dyck::Partition& lambda, int n, int size_bound, int jobs) {
    return family_list(dyck::enumerate_kac_patterns(lambda, n, size_bound, jobs));
  }, py::arg("base"), py::arg("n"), py::arg("size_bound") = -1, py::arg("jobs") = 1);
  m.def("syzygy_patterns", [](const dyck::Partition& lambda, int n, int jobs) {
    return family_list(dyck::enumerate_syzygy_patterns(lambda, n, jobs));
  }, py::arg("base"), py::arg("n"), py::arg("jobs") = 1);
  m.def("b_side_patterns", [](const dyck::Partition& lambda, int b, int n, int jobs) {
    return family_list(dyck::enumerate_b_side(lambda, b, n, jobs));
  }, py::arg("base"), py::arg("b"), py::arg("n"), py::arg("jobs") = 1);
  m.def("a_to_b", &dyck::a_to_b, py::arg("base"), py::arg("pattern"));
  m.def("b_to_a", &dyck::b_to_a, py::arg("base"), py::arg("mu"), py::arg("paths"));

  m.def("kac_class", [](const dyck::Partition& lambda, int n) {
    py::dict out;
    for (const auto& [label, count] : dyck::kac_class(lambda, n).multiplicities)
      out[py::cast(label)] = big(count);
    return out;
  }, py::arg("base"), py::arg("n"),
        "Multiplicities of the simple classes in a Kac class.");
  m.def("hilbert_series_kac", &dyck::hilbert_series_kac, py::arg("mu"), py::arg("m"), py::arg("n"));
  m.def("hilbert_series_simple", [](const dyck::Partition& mu, int m, int n, int trunc) {
    return dyck::hilbert_series_simple(mu, m, n, trunc);
  }, py::arg("mu"), py::arg("m"), py::arg("n"), py::arg("trunc") = -1);
  m.def("simple_in_kac_basis", [](const dyck::Partition& mu, int n, int size_limit) {
    py::dict out;
    for (const auto& [label, coeff] : dyck::simple_in_kac_basis(mu, n, size_limit))
      out[py::cast(label)] = big(coeff);
    return out;
  }, py::arg("mu"), py::arg("n"), py::arg("size_limit"));

  m.def("homology_classes", [](const dyck::Partition& lambda, int m, int n, int jobs) {
    const dyck::HomologyClasses h = dyck::homology_classes(lambda, m, n, jobs);
    py::dict out;
    out["base"] = py::cast(h.lambda);
    out["m"] = h.m;
    out["n"] = h.n;
    py::list strands;
    for (const dyck::Strand& s : h.strands) {
      py::dict strand;
      strand["b"] = s.b;
      strand["row"] = s.row;
      py::list members;
      for (const dyck::StrandMember& member : s.members) {
        py::dict entry;
        entry["pattern"] = py::cast(member.pattern);
        entry["label"] = py::cast(member.label);
        entry["series"] = py::cast(member.series);
        members.append(entry);
      }
      strand["members"] = members;
      strand["total"] = py::cast(s.total);
      strands.append(strand);
    }
    out["strands"] = strands;
    return out;
  }, py::arg("base"), py::arg("m"), py::arg("n"), py::arg("jobs") = 1);
  m.def("betti_table", [](const dyck::Partition& lambda, int m, int n, int jobs) {
    return dyck::betti_table(lambda, m, n, jobs);
  }, py::arg("base"), py::arg("m"), py::arg("n"), py::arg("jobs") = 1);
  m.def("general_ideal_terms", [](const std::vector<dyck::Partition>& lambdas) {
    py::list out;
    for (const dyck::GeneralTerm& term : dyck::general_ideal_terms(lambdas))
      out.append(py::make_tuple(term.indices, py::cast(term.merged), term.sign));
    return out;
  }, py::arg("bases"),
        "Signed inclusion-exclusion terms (indices, union, sign) for a sum of ideals.");

  m.def("render_svg", &dyck::render_pattern_svg, py::arg("base"), py::arg("pattern"));

  m.def("ssyt_count", [](const dyck::Partition& p, int k) { return big(dyck::ssyt_count(p, k)); },
        py::arg("p"), py::arg("k"));
  m.def("cube_complex_check", [](int n, unsigned seed) {
    const dyck::CubeComplexReport r = dyck::cube_complex_check(n, seed);
    py::dict d;
    d["n"] = r.n;
    d["square_zero"] = r.square_zero;
    d["exact"] = r.exact;
    d["ranks"] = r.ranks;
    d["message"] = r.message;
    return d;
  }, py::arg("n"), py::arg("seed") = 0u);
  m.def("euler_check", [](const dyck::Partition& lambda, int m, int n, int d_max) {
    const dyck::EulerReport r = dyck::euler_check(lambda, m, n, d_max);
    py::dict d;
    d["ok"] = r.ok;
    d["first_mismatch"] = r.first_mismatch;
    py::list degrees;
    for (const auto& [deg, lhs, rhs] : r.degrees)
      degrees.append(py::make_tuple(deg, big(lhs), big(rhs)));
    d["degrees"] = degrees;
    d["message"] = r.message;
    return d;
  }, py::arg("base"), py::arg("m"), py::arg("n"), py::arg("d_max"));
  m.def("eagon_northcott_betti", [](int m, int n) {
    py::list out;
    for (const dyck::Int& v : dyck::eagon_northcott_betti(m, n)) out.append(big(v));
    return out;
  }, py::arg("m"), py::arg("n"));
}
