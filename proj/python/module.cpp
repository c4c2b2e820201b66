#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unitals/automorphisms.hpp"
#include "unitals/classical.hpp"
#include "unitals/configurations.hpp"
#include "unitals/errors.hpp"
#include "unitals/field.hpp"
#include "unitals/unital.hpp"
#include "unitals/wilbrink.hpp"

namespace py = pybind11;
using namespace unitals;

namespace {

py::dict report_to_dict(const DesignReport& rep) {
  py::dict d;
  d["pass"] = rep.pass;
  d["v"] = rep.v;
  d["b"] = rep.b;
  d["r"] = rep.r;
  py::list viols;
  for (const DesignViolation& viol : rep.violations)
    viols.append(viol.describe());
  d["violations"] = viols;
  return d;
}

py::dict condition_to_dict(const ConditionReport& rep) {
  py::dict d;
  d["condition"] = to_string(rep.condition);
  d["holds"] = rep.holds;
  d["exhaustive"] = rep.exhaustive;
  d["samples"] = rep.samples;
  d["seed"] = rep.seed;
  d["instances_checked"] = rep.instances_checked;
  d["premise_hits"] = rep.premise_hits;
  d["trivial_cases"] = rep.trivial_cases;
  d["used_uniqueness_shortcut"] = rep.used_uniqueness_shortcut;
  if (rep.onan_witness) {
    py::dict w;
    w["blocks"] = rep.onan_witness->blocks;
    w["points"] = rep.onan_witness->points;
    d["witness"] = w;
  } else if (rep.ii_witness) {
    py::dict w;
    w["L"] = rep.ii_witness->block_l;
    w["x"] = rep.ii_witness->x;
    w["y"] = rep.ii_witness->y;
    d["witness"] = w;
  } else if (rep.iii_witness) {
    py::dict w;
    w["x"] = rep.iii_witness->x;
    w["m"] = rep.iii_witness->m;
    w["y"] = rep.iii_witness->y;
    w["z"] = rep.iii_witness->z;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hermitian unitals, O'Nan configurations, translations and "
            "Wilbrink's conditions";

  py::register_exception<NotPrimePower>(m, "NotPrimePowerError",
                                        PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<VersionError>(m, "VersionError", PyExc_ValueError);

  py::class_<FieldTables>(m, "FieldTables")
      .def_static("build", &FieldTables::build, py::arg("q"))
      .def_property_readonly("q", &FieldTables::q)
      .def_property_readonly("size", &FieldTables::size)
      .def("add", &FieldTables::add)
      .def("mul", &FieldTables::mul)
      .def("neg", &FieldTables::neg)
      .def("inv", &FieldTables::inv)
      .def("conj", &FieldTables::conj)
      .def("trace", &FieldTables::trace)
      .def("norm", &FieldTables::norm)
      .def("in_subfield", &FieldTables::in_subfield)
      .def("extension_poly", &FieldTables::extension_poly)
      .def("base_poly", &FieldTables::base_poly);

  py::class_<Unital>(m, "Unital")
      .def(py::init<int, int, std::vector<Block>>(), py::arg("order"),
           py::arg("num_points"), py::arg("blocks"))
      .def_property_readonly("order", &Unital::order)
      .def_property_readonly("num_points", &Unital::num_points)
      .def_property_readonly("num_blocks", &Unital::num_blocks)
      .def("blocks", &Unital::blocks)
      .def("block", &Unital::block, py::arg("id"))
      .def("blocks_through", &Unital::blocks_through, py::arg("point"))
      .def("joining_block", &Unital::joining_block, py::arg("x"), py::arg("y"))
      .def("verify", [](const Unital& u) { return report_to_dict(u.verify()); })
      .def("__eq__", [](const Unital& a, const Unital& b) { return a == b; });

  m.def("is_prime_power",
        [](long long q) { return is_prime_power(q, nullptr, nullptr); });
  m.def("classical_unital", py::overload_cast<int>(&classical_unital),
        py::arg("q"));
  m.def("verify_design", [](const std::vector<Block>& blocks, int q) {
    return report_to_dict(verify_design(blocks, q));
  });
  m.def("load_unital",
        [](const std::string& path, bool linear_space) {
          return load_unital(path, linear_space ? LoadMode::LinearSpace
                                                : LoadMode::Strict);
        },
        py::arg("path"), py::arg("linear_space") = false);
  m.def("save_unital", &save_unital, py::arg("unital"), py::arg("path"));
  m.def("relabel", [](const Unital& u, const std::vector<int>& perm) {
    return relabel(u, perm);
  });

  m.def("find_onan",
        [](const Unital& u, int threads) -> py::object {
          std::optional<ONanWitness> w = find_onan(u, threads);
          if (!w) return py::none();
          py::dict d;
          d["blocks"] = w->blocks;
          d["points"] = w->points;
          return d;
        },
        py::arg("unital"), py::arg("threads") = 1);
  m.def("x_parallel_blocks", &x_parallel_blocks, py::arg("unital"),
        py::arg("block"), py::arg("x"));

  m.def("is_automorphism",
        [](const Unital& u, const std::vector<int>& image) {
          return is_automorphism(u, PointPermutation{image});
        });
  m.def("translations_with_center",
        [](const Unital& u, int center) {
          std::vector<std::vector<int>> out;
          for (const PointPermutation& pi : translations_with_center(u, center))
            out.push_back(pi.image);
          return out;
        },
        py::arg("unital"), py::arg("center"));
  m.def("admits_all_translations", &admits_all_translations);
  m.def("find_isomorphism", [](const Unital& a, const Unital& b) -> py::object {
    IsomorphismResult res = find_isomorphism(a, b);
    if (res.map) return py::cast(res.map->image);
    return py::none();
  });

  m.def("check_condition_i",
        [](const Unital& u, int threads) {
          return condition_to_dict(check_condition_i(u, threads));
        },
        py::arg("unital"), py::arg("threads") = 1);
  m.def("check_condition_ii",
        [](const Unital& u, std::optional<std::uint64_t> samples,
           std::uint64_t seed, int threads) {
          SweepMode mode = samples ? SweepMode::sampled(*samples, seed)
                                   : SweepMode::full();
          return condition_to_dict(check_condition_ii(u, mode, threads));
        },
        py::arg("unital"), py::arg("samples") = py::none(),
        py::arg("seed") = 0, py::arg("threads") = 1);
  m.def("check_condition_iii",
        [](const Unital& u, std::optional<std::uint64_t> samples,
           std::uint64_t seed, bool full_enumeration, int threads) {
          SweepMode mode = samples ? SweepMode::sampled(*samples, seed)
                                   : SweepMode::full();
          ShortcutPolicy policy = full_enumeration ? ShortcutPolicy::Disable
                                                   : ShortcutPolicy::Auto;
          return condition_to_dict(check_condition_iii(u, mode, policy, threads));
        },
        py::arg("unital"), py::arg("samples") = py::none(),
        py::arg("seed") = 0, py::arg("full_enumeration") = false,
        py::arg("threads") = 1);

  m.def("classify",
        [](const Unital& u, std::uint64_t samples,
           std::optional<std::uint64_t> seed, int threads) {
          ClassifyOptions opts;
          opts.samples = samples;
          opts.seed = seed;
          opts.threads = threads;
          ClassificationVerdict res = classify(u, opts);
          py::dict d;
          d["translations_ok"] = res.translations_ok;
          d["onan_free"] = res.onan_free;
          d["verdict"] = to_string(res.verdict);
          d["detail"] = res.detail;
          d["consistency_alert"] = res.consistency_alert;
          py::list conds;
          for (const ConditionReport& rep : res.conditions)
            conds.append(condition_to_dict(rep));
          d["conditions"] = conds;
          if (res.iso_witness)
            d["iso_witness"] = res.iso_witness->image;
          else
            d["iso_witness"] = py::none();
          return d;
        },
        py::arg("unital"), py::arg("samples") = 1'000'000,
        py::arg("seed") = py::none(), py::arg("threads") = 1);
}
