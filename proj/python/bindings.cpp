#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "emcg/classifier.hpp"
#include "emcg/error.hpp"
#include "emcg/f2_forms.hpp"
#include "emcg/io.hpp"
#include "emcg/sl2z.hpp"
#include "emcg/smallgrp.hpp"
#include "emcg/verify.hpp"

namespace py = pybind11;
using namespace emcg;

namespace {

sl2z::BigInt to_big(const py::int_& x) { return sl2z::BigInt(py::str(x).cast<std::string>()); }

py::int_ to_py(const sl2z::BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

sl2z::UniModMat2 to_matrix(const std::vector<std::vector<py::int_>>& rows) {
  if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
    throw Error(ErrorKind::Parse, "expected a 2x2 nested list");
  return sl2z::UniModMat2(to_big(rows[0][0]), to_big(rows[0][1]), to_big(rows[1][0]), to_big(rows[1][1]));
}

py::list from_matrix(const sl2z::UniModMat2& m) {
  py::list out;
  out.append(py::make_tuple(to_py(m.d1()), to_py(m.d2())));
  out.append(py::make_tuple(to_py(m.d3()), to_py(m.d4())));
  return out;
}

f2::QuadraticRefinement refinement(const std::vector<int>& values, const std::optional<std::vector<std::vector<int>>>& gram) {
  if (values.empty() || values.size() % 2) throw Error(ErrorKind::DimensionMismatch, "values must have even length");
  const auto space = gram ? f2::SymplecticSpace(f2::Matrix::from_rows(*gram))
                          : f2::SymplecticSpace::standard(static_cast<int>(values.size() / 2));
  return f2::QuadraticRefinement(space, values);
}

cls::KnotFamily family(const std::string& name, std::optional<int> n, std::optional<int> p, std::optional<int> q) {
  auto need = [&](std::optional<int> v, const char* what) {
    if (!v) throw Error(ErrorKind::Parse, name + " needs " + what);
    return *v;
  };
  if (name == "unknot") return cls::UnknotSphere{need(n, "n")};
  if (name == "equal-product") return cls::EqualProduct{need(p, "p")};
  if (name == "unequal-product") return cls::UnequalProduct{need(p, "p"), need(q, "q")};
  if (name == "adjacent-product") return cls::AdjacentProduct{need(p, "p")};
  throw Error(ErrorKind::Parse, "unknown family '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact algebra for extendable mapping classes of product knots";

  static py::handle error_type = PyErr_NewException("emcg._core.Error", PyExc_ValueError, nullptr);
  m.attr("Error") = error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("arf", [](const std::vector<int>& values, std::optional<std::vector<std::vector<int>>> gram) {
    return f2::arf(refinement(values, gram));
  }, py::arg("values"), py::arg("gram") = py::none());
  m.def("sp_order", [](int k) { return f2::enumerate_sp(k).size(); }, py::arg("k"));
  m.def("stabilizer", [](const std::vector<int>& values) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& s : f2::stabilizer(refinement(values, std::nullopt))) out.push_back(s.rows());
    return out;
  }, py::arg("values"));
  m.def("orbit", [](const std::vector<int>& values) {
    std::vector<std::vector<int>> out;
    for (const auto& q : f2::orbit(refinement(values, std::nullopt))) out.push_back(q.basis_value_list());
    return out;
  }, py::arg("values"));

  m.def("is_member", [](const std::vector<std::vector<py::int_>>& rows) { return sl2z::is_member(to_matrix(rows)); });
  m.def("reduce_mod2", [](const std::vector<std::vector<py::int_>>& rows) {
    return std::string(sl2z::to_string(sl2z::reduce_mod2(to_matrix(rows))));
  });
  m.def("decompose", [](const std::vector<std::vector<py::int_>>& rows) {
    return sl2z::format_word(sl2z::decompose(to_matrix(rows)));
  });
  m.def("eval_word", [](const std::string& word) { return from_matrix(sl2z::eval_word(sl2z::parse_word(word))); });
  m.def("normal_form", [](const std::string& word) { return sl2z::format_word(sl2z::normal_form(sl2z::parse_word(word))); });

  m.def("coset_count", [](const std::string& presentation, std::size_t max_cosets) {
    return grp::enumerate_cosets(grp::parse_presentation(presentation), max_cosets).live_cosets;
  }, py::arg("presentation"), py::arg("max_cosets") = 100000);
  m.def("group_table", [](const std::string& presentation, std::size_t max_cosets) {
    return grp::todd_coxeter(grp::parse_presentation(presentation), max_cosets).table();
  }, py::arg("presentation"), py::arg("max_cosets") = 100000);
  m.def("is_isomorphic", [](const std::vector<std::vector<std::size_t>>& a, const std::vector<std::vector<std::size_t>>& b) {
    return grp::is_isomorphic(grp::MulTableGroup(a), grp::MulTableGroup(b));
  });

  m.def("classify_json", [](const std::string& name, std::optional<int> n, std::optional<int> p, std::optional<int> q) {
    return io::to_json(cls::classify(family(name, n, p, q))).dump();
  }, py::arg("family"), py::arg("n") = py::none(), py::arg("p") = py::none(), py::arg("q") = py::none());

  m.def("verify_all", [] {
    std::vector<py::dict> out;
    for (const auto& r : verify::run_acceptance()) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      d["citation"] = r.citation;
      out.push_back(d);
    }
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
