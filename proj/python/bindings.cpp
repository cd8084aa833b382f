#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "quantion/cli.hpp"
#include "quantion/io.hpp"
#include "quantion/quantal.hpp"
#include "quantion/quantion.hpp"
#include "quantion/representations.hpp"
#include "quantion/suite.hpp"
#include "quantion/tables.hpp"

namespace py = pybind11;
using namespace quantion;

namespace {

using Vec4 = std::array<double, 4>;

Vec4 as_tuple(const FourVector& p) { return {p.p0, p.p1, p.p2, p.p3}; }
FourVector as_four_vector(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

py::list reports_to_python(const std::vector<VerificationReport>& reports) {
  py::list out;
  for (const auto& r : reports) {
    py::dict d;
    d["algebra"] = r.algebra;
    d["identity"] = r.identity;
    d["samples"] = r.samples;
    d["seed"] = r.seed;
    d["tol"] = r.tol;
    d["max_residual"] = r.max_residual;
    d["verdict"] = r.pass() ? "pass" : "fail";
    out.append(std::move(d));
  }
  return out;
}

AnyAlgebra algebra_from_spec(const std::string& spec, std::optional<int> a) {
  AnyAlgebra alg = cli::parse_algebra_spec(spec);
  if (a) std::visit([&](auto& x) { if (x.a != *a) x = with_a(x, *a); }, alg);
  return alg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantion algebra, quantal-algebra identity checks and the left representation";

  py::register_exception<NullDivisor>(m, "NullDivisorError", PyExc_ArithmeticError);
  py::register_exception<NotHermitian>(m, "NotHermitianError", PyExc_ValueError);

  py::class_<Quantion>(m, "Quantion")
      .def(py::init([](Complex a, Complex b, Complex c, Complex d) { return Quantion::checked(a, b, c, d); }),
           py::arg("a") = Complex{}, py::arg("b") = Complex{}, py::arg("c") = Complex{}, py::arg("d") = Complex{})
      .def_static("identity", &Quantion::identity)
      .def_static("from_matrix", &Quantion::from_matrix)
      .def_readwrite("a", &Quantion::a)
      .def_readwrite("b", &Quantion::b)
      .def_readwrite("c", &Quantion::c)
      .def_readwrite("d", &Quantion::d)
      .def("matrix", &Quantion::matrix)
      .def("norm", &Quantion::norm)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const Quantion& q, Complex s) { return q * s; })
      .def("__rmul__", [](const Quantion& q, Complex s) { return s * q; })
      .def("__matmul__", &beta_mul)
      .def("__repr__", [](const Quantion& q) { return "Quantion" + to_string(q); });

  m.def("beta_mul", &beta_mul, "the quantion product (2x2 matrix product)");
  m.def("beta_geometric", &beta_geometric, "beta from the Minkowski/Hodge formula on tetrad components");
  m.def("pauli_decompose", &pauli_decompose);
  m.def("from_tetrad_components", &from_tetrad_components);
  m.def("star", &star);
  m.def("sharp", &sharp);
  m.def("met_norm", &met_norm);
  m.def("alg_norm", [](const Quantion& q) { return as_tuple(alg_norm(q)); });
  m.def("inverse", &inverse);
  m.def("is_null", &is_null);
  m.def("to_four_vector", [](const Quantion& q) { return as_tuple(to_four_vector(q)); });
  m.def("from_four_vector", [](const Vec4& p) { return from_four_vector(as_four_vector(p)); });
  m.def("minkowski_dot",
        [](const Vec4& u, const Vec4& v) { return minkowski_dot(as_four_vector(u), as_four_vector(v)); });
  m.def("null_tetrad", [] {
    const NullTetrad t = null_tetrad();
    return std::array<Quantion, 4>{t.l, t.n, t.m, t.m_bar};
  });
  m.def("quaternion_embed", [](double h0, double h1, double h2, double h3) {
    return quaternion_embed(Eigen::Quaterniond(h0, h1, h2, h3));
  });

  m.def(
      "basis_table",
      [](const std::string& name) {
        const auto basis = parse_basis(name);
        if (!basis) throw py::value_error("unknown basis: " + name);
        const BasisTable t = basis_table(*basis);
        std::vector<std::vector<std::string>> labels(4);
        for (int r = 0; r < 4; ++r)
          for (int c = 0; c < 4; ++c) labels[r].push_back(entry_label(t, t.entries[r][c]));
        py::dict d;
        d["basis"] = std::string(basis_name(t.name));
        d["labels"] = t.labels;
        d["cells"] = labels;
        d["entries"] = t.entries;
        d["matches_reference"] = !diff_against_golden(t).has_value();
        return d;
      },
      py::arg("name"));

  m.def(
      "verify",
      [](const std::string& spec, std::uint64_t samples, std::uint64_t seed, double tol, std::optional<int> a,
         unsigned threads) {
        const AnyAlgebra alg = algebra_from_spec(spec, a);
        std::vector<VerificationReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_suite(alg, {samples, seed, tol, threads});
        }
        return reports_to_python(reports);
      },
      py::arg("algebra"), py::arg("samples") = 1000, py::arg("seed") = 0, py::arg("tol") = kIdentityTol,
      py::arg("a") = py::none(), py::arg("threads") = 1);

  m.def(
      "compose_verify",
      [](const std::string& left, const std::string& right, std::uint64_t samples, std::uint64_t seed, double tol,
         unsigned threads) {
        const MatrixAlgebra composed = compose(cli::parse_algebra_spec(left), cli::parse_algebra_spec(right));
        const SuiteOptions opts{samples, seed, tol, threads};
        std::vector<VerificationReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_suite(composed, opts);
          reports.push_back(
              run_closure(composed, reference_algebra(static_cast<int>(composed.unit.rows()), composed.a), opts));
        }
        return reports_to_python(reports);
      },
      py::arg("left"), py::arg("right"), py::arg("samples") = 1000, py::arg("seed") = 0,
      py::arg("tol") = kIdentityTol, py::arg("threads") = 1);

  m.def("kahler_decompose",
        [](const Eigen::VectorXcd& phi, const Eigen::VectorXcd& psi, double hbar) {
          const KahlerParts k = kahler_decompose(phi, psi, hbar);
          return std::make_pair(k.G, k.W);
        },
        py::arg("phi"), py::arg("psi"), py::arg("hbar") = 1.0);

  m.def("left_rep", [](const Quantion& q) { return Eigen::Matrix4cd(left_rep(q).matrix()); });
  m.def("act_right", [](const Eigen::RowVector4cd& phi, const Quantion& q) { return act_right(phi, q); });
  m.def("zovko_current", [](const Quantion& q) {
    const ZovkoCurrent j = zovko_current(q);
    return std::make_pair(as_tuple(j.j), std::string(causal_class_name(j.cls)));
  });
}
