#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "antibch/error.hpp"
#include "antibch/json_io.hpp"
#include "antibch/parallel.hpp"
#include "antibch/verify.hpp"

namespace py = pybind11;
using namespace antibch;

namespace {

// Results cross the boundary as JSON text; the Python side parses it.
std::string dump(const Json& j) { return j.dump(); }

Budgets budgets(std::uint64_t codewords, std::uint64_t support, std::uint64_t subcode) {
  Budgets b;
  b.codewords = codewords;
  b.support_leaves = support;
  b.subcode_codewords = subcode;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Antiprimitive BCH codes over finite fields";
  static py::exception<Error> error(m, "AntibchError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  const Budgets def;
  m.def("set_thread_count", &set_thread_count, py::arg("n"));
  m.def("thread_count", &thread_count);
  m.def("coset", &coset, py::arg("q"), py::arg("n"), py::arg("s"));
  m.def("cosets_json", [](std::uint64_t q, std::uint32_t mm) { return dump(to_json(leaders_brute_force(q, mm))); },
        py::arg("q"), py::arg("m"));
  m.def("is_leader_closed_form",
        [](std::uint64_t q, std::uint32_t mm, std::uint64_t a) {
          return leader_verdict_name(is_leader_closed_form(q, mm, a).verdict);
        },
        py::arg("q"), py::arg("m"), py::arg("a"));
  m.def("largest_leaders_m2", &largest_leaders_m2, py::arg("q"));
  m.def("gcd_special", &gcd_special, py::arg("a"), py::arg("u"), py::arg("v"));
  m.def("code_json",
        [](std::uint64_t q, std::uint32_t mm, std::uint64_t delta, std::int64_t b) {
          return dump(to_json(build_code(q, mm, delta, b)));
        },
        py::arg("q"), py::arg("m"), py::arg("delta"), py::arg("b"));
  m.def("dimension_formula", &dimension_formula, py::arg("q"), py::arg("m"), py::arg("delta"), py::arg("b"));
  m.def("bch_bound",
        [](std::uint64_t q, std::uint32_t mm, std::uint64_t delta, std::int64_t b) {
          return bch_bound(build_code(q, mm, delta, b));
        },
        py::arg("q"), py::arg("m"), py::arg("delta"), py::arg("b"));
  m.def("certificate_json",
        [](std::uint64_t q, std::uint32_t mm, std::uint64_t delta, std::int64_t b, std::uint64_t codewords,
           std::uint64_t support, std::uint64_t subcode) {
          CertifyOptions opt;
          opt.budgets = budgets(codewords, support, subcode);
          py::gil_scoped_release release;
          return dump(to_json(certify(build_code(q, mm, delta, b), opt)));
        },
        py::arg("q"), py::arg("m"), py::arg("delta"), py::arg("b"), py::arg("codeword_budget") = def.codewords,
        py::arg("support_budget") = def.support_leaves, py::arg("subcode_budget") = def.subcode_codewords);
  m.def("block_set_json",
        [](std::uint64_t q, std::uint64_t k, std::uint64_t l, std::uint64_t budget) {
          return dump(to_json(block_set(q, k, l, budget)));
        },
        py::arg("q"), py::arg("k"), py::arg("l"), py::arg("budget") = kDefaultSubsetBudget);
  m.def("zetterberg_json",
        [](std::uint64_t p, std::uint32_t mm, std::uint64_t wmax, std::uint64_t budget) {
          return dump(to_json(zetterberg_low_weight(p, mm, wmax, budget)));
        },
        py::arg("p"), py::arg("m"), py::arg("wmax"), py::arg("budget") = kDefaultSubsetBudget);
  m.def("esp_distance_condition", &esp_distance_condition, py::arg("q"), py::arg("eta"), py::arg("w"),
        py::arg("budget") = kDefaultSubsetBudget);
  m.def("verify_json",
        [](const std::string& suite, std::uint64_t seed, const std::string& path) {
          py::gil_scoped_release release;
          return dump(to_json(run_verify(suite, seed, Budgets{}, path)));
        },
        py::arg("suite"), py::arg("seed") = 7, py::arg("golden_path") = default_golden_path());
#ifdef VERSION_INFO
#define ANTIBCH_STR2(x) #x
#define ANTIBCH_STR(x) ANTIBCH_STR2(x)
  m.attr("__version__") = ANTIBCH_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
