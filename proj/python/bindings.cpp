#include "swelling/coset.hpp"
#include "swelling/interval_set.hpp"
#include "swelling/orbit.hpp"
#include "swelling/search.hpp"
#include "swelling/sweep.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace swelling;

namespace {

// Scalars cross the boundary as canonical strings; Python callers never see
// the exact representation, only text in and text out.
QuadScalar qs(const std::string& text) { return parse_quad(text); }

std::optional<std::string> opt_quad(const std::optional<QuadScalar>& v) {
  if (!v) return std::nullopt;
  return format_quad(*v);
}

py::dict real_verdict_dict(const RealSwellingVerdict& v) {
  py::dict d;
  d["union_inclusion"] = v.union_inclusion;
  d["union_equality"] = v.union_equality;
  d["inter_inclusion"] = v.inter_inclusion;
  d["inter_equality"] = v.inter_equality;
  d["all_hold"] = v.all_hold();
  d["union_witness"] = opt_quad(v.union_witness);
  d["inter_witness"] = opt_quad(v.inter_witness);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verifiers for translate-inclusion problems on groups";

  py::class_<IntervalSet>(m, "IntervalSet")
      .def(py::self == py::self)
      .def_static("parse", [](const std::string& text) { return parse_interval_set(text); })
      .def("__str__", [](const IntervalSet& s) { return format_interval_set(s); })
      .def("__repr__",
           [](const IntervalSet& s) { return "IntervalSet('" + format_interval_set(s) + "')"; })
      .def("empty", &IntervalSet::empty)
      .def("contains",
           [](const IntervalSet& s, const std::string& x) { return s.contains(qs(x)); })
      .def("measure", [](const IntervalSet& s) { return format_quad(measure(s)); })
      .def("pieces", [](const IntervalSet& s) {
        py::list out;
        for (const auto& iv : s.pieces())
          out.append(py::make_tuple(format_quad(iv.lo), format_quad(iv.hi)));
        return out;
      });

  m.def("set_union",
        [](const IntervalSet& a, const IntervalSet& b) { return set_union(a, b); });
  m.def("set_intersection",
        [](const IntervalSet& a, const IntervalSet& b) { return set_intersection(a, b); });
  m.def("translate_set",
        [](const std::string& t, const IntervalSet& a) { return translate_set(qs(t), a); });

  m.def(
      "check_swelling_real",
      [](const IntervalSet& a_set, const IntervalSet& b_set, const std::string& a,
         const std::string& b, const std::string& c) {
        return real_verdict_dict(check_swelling_real(a_set, b_set, qs(a), qs(b), qs(c)));
      },
      py::arg("a_set"), py::arg("b_set"), py::arg("a"), py::arg("b"), py::arg("c"),
      "Verdict on aA u bB vs A u B and aA n bB vs c(A n B), inclusion and equality each");

  m.def(
      "interval_example",
      [](const std::string& u, const std::string& v, const std::string& w,
         const std::string& t) {
        const IntervalExample ex = interval_example(qs(u), qs(v), qs(w), qs(t));
        py::dict d;
        d["A"] = ex.a_set;
        d["B"] = ex.b_set;
        d["a"] = format_quad(ex.a);
        d["b"] = format_quad(ex.b);
        d["c"] = format_quad(ex.c);
        d["verdict"] = real_verdict_dict(ex.verdict);
        return d;
      },
      py::arg("u"), py::arg("v"), py::arg("w"), py::arg("t"),
      "The two-interval family on u < v < w < t; every condition holds by construction");

  m.def(
      "quotient_project",
      [](const IntervalSet& a_set, const std::string& b) {
        const QuotientCoverage q = quotient_project(a_set, qs(b));
        py::dict d;
        d["modulus"] = format_quad(q.modulus);
        d["covered"] = q.covered;
        d["deficit"] = format_quad(q.deficit);
        d["full"] = q.full();
        return d;
      },
      py::arg("a_set"), py::arg("b"), "Coverage of the fundamental domain [0, |b|)");

  m.def(
      "necessary_condition_filter",
      [](const IntervalSet& a_set, const IntervalSet& b_set, const std::string& a,
         const std::string& b) {
        const CoverageFilter f = necessary_condition_filter(a_set, b_set, qs(a), qs(b));
        py::dict d;
        d["applicable"] = f.applicable;
        d["passes"] = f.passes;
        d["deficit_a_mod_b"] = format_quad(f.deficit_a_mod_b);
        d["deficit_b_mod_a"] = format_quad(f.deficit_b_mod_a);
        return d;
      },
      py::arg("a_set"), py::arg("b_set"), py::arg("a"), py::arg("b"));

  m.def(
      "run_orbit",
      [](const IntervalSet& a_set, const IntervalSet& b_set, const std::string& a,
         const std::string& b, const std::string& x0, std::size_t max_steps) {
        OrbitParams p;
        p.a_set = a_set;
        p.b_set = b_set;
        p.a = qs(a);
        p.b = qs(b);
        p.x0 = x0.empty() ? a_set.pieces().front().lo : qs(x0);
        p.max_steps = max_steps;
        const OrbitTrace t = run_orbit(p);
        const auto cert = escape_certifies_failure(t);
        py::list steps;
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
          py::dict s;
          s["n"] = i + 1;
          s["x"] = format_quad(t.steps[i].x);
          s["s"] = t.steps[i].s == StepKind::AStep ? "a" : "b";
          s["inA"] = t.steps[i].in_a;
          s["inB"] = t.steps[i].in_b;
          steps.append(s);
        }
        py::dict d;
        d["steps"] = steps;
        d["escape_index"] =
            t.escape_index ? py::object(py::int_(*t.escape_index)) : py::object(py::none());
        d["a_steps"] = t.a_step_count();
        d["b_steps"] = t.b_step_count();
        if (cert) {
          py::dict c;
          c["y"] = format_quad(cert->y);
          c["valid"] = cert->valid();
          d["certificate"] = c;
        } else {
          d["certificate"] = py::none();
        }
        return d;
      },
      py::arg("a_set"), py::arg("b_set"), py::arg("a"), py::arg("b"), py::arg("x0") = "",
      py::arg("max_steps") = 10'000,
      "Iterate x -> a+x while x in A else b+x; stops at escape from A u B");

  m.def(
      "sweep",
      [](const std::string& group, bool weak, int jobs) {
        const GroupDescriptor g = parse_group_spec(group);
        SweepOptions opts;
        opts.jobs = jobs;
        opts.audit_chains = true;
        const SweepSummary s =
            weak ? sweep_weak_two_swelling(g, opts) : sweep_two_swelling(g, opts);
        py::dict d;
        d["group"] = format_group_spec(g);
        d["tuples_checked"] = s.tuples_checked;
        d["inclusions_satisfied"] = s.inclusions_satisfied;
        d["audits_run"] = s.audits_run;
        d["violations"] = s.violations.size();
        return d;
      },
      py::arg("group"), py::arg("weak") = false, py::arg("jobs") = 1,
      "Exhaustive (A,B,a,b,c) sweep over a small finite group");

  m.def(
      "coset_count_bound",
      [](const std::string& group, const std::string& k_elems, const std::string& h_gens) {
        const GroupDescriptor g = parse_group_spec(group);
        const FiniteSubset k = FiniteSubset::of(g, parse_element_list(g, k_elems));
        const auto h = SubgroupDescriptor::build(g, parse_element_list(g, h_gens));
        const CosetBoundReport r = check_coset_count_bound(k, h);
        py::dict d;
        d["max_coset_count"] = r.max_coset_count;
        d["difference_bound"] = r.difference_bound;
        d["holds"] = r.holds;
        return d;
      },
      py::arg("group"), py::arg("K"), py::arg("H"),
      "max_x |K n Hx| <= |K K^-1 n H| for K listed elementwise, H by generators");

  m.def(
      "verify_finite",
      [](const std::string& group, const std::string& a_elems, const std::string& b_elems,
         const std::string& a, const std::string& b, const std::string& c) {
        const GroupDescriptor g = parse_group_spec(group);
        const SwellingVerdict v = check_swelling_pair(
            g, FiniteSubset::of(g, parse_element_list(g, a_elems)),
            FiniteSubset::of(g, parse_element_list(g, b_elems)), parse_element(g, a),
            parse_element(g, b), parse_element(g, c));
        py::dict d;
        d["union_inclusion"] = v.union_inclusion;
        d["union_equality"] = v.union_equality;
        d["inter_inclusion"] = v.inter_inclusion;
        d["inter_equality"] = v.inter_equality;
        d["all_hold"] = v.all_hold();
        return d;
      },
      py::arg("group"), py::arg("A"), py::arg("B"), py::arg("a"), py::arg("b"), py::arg("c"));
}
