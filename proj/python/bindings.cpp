#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitwidth/gkm.hpp"
#include "orbitwidth/kks.hpp"
#include "orbitwidth/serialize.hpp"
#include "orbitwidth/subspace.hpp"
#include "orbitwidth/weyl.hpp"
#include "orbitwidth/width.hpp"

namespace py = pybind11;
using namespace orbitwidth;

namespace {

RationalVector to_rationals(const std::vector<std::string>& tokens) {
  RationalVector v;
  for (const std::string& t : tokens) v.push_back(Rational::parse(t));
  return v;
}

std::vector<std::string> to_strings(const RationalVector& v) {
  std::vector<std::string> out;
  for (const Rational& r : v) out.push_back(r.str());
  return out;
}

py::dict report_dict(const WidthReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["flag_type"] = r.flag.cumulative;
  d["multiplicities"] = r.flag.multiplicities;
  d["upper"] = r.upper ? py::object(py::str(r.upper->str())) : py::none();
  d["upper_pair"] = r.upper_pair
                        ? py::object(py::make_tuple(r.upper_pair->first, r.upper_pair->second))
                        : py::none();
  d["lower"] = r.lower ? py::object(py::str(r.lower->str())) : py::none();
  d["lower_applicable"] = r.lower_applicable;
  d["exact"] = r.exact;
  d["degenerate"] = r.degenerate;
  d["regular"] = r.regular;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Width bounds, moment graphs and numerical certification for "
            "isospectral Hermitian orbits";

  py::register_exception<Error>(m, "OrbitError");

  // exact spectrum combinatorics; rationals cross the boundary as strings
  m.def("parse_spectrum",
        [](const std::string& text) { return to_strings(parse_spectrum(text).values()); },
        py::arg("text"), "Parse and canonicalize a comma-separated rational spectrum.");
  m.def("flag_type",
        [](const std::string& text) {
          FlagType f = flag_type(parse_spectrum(text));
          return py::make_tuple(f.cumulative, f.multiplicities);
        },
        py::arg("text"), "Cumulative dimensions and multiplicities of the eigenvalue blocks.");
  m.def("orbit_dimensions",
        [](const std::string& text) {
          OrbitDimensions d = orbit_dimensions(flag_type(parse_spectrum(text)));
          return py::make_tuple(d.complex_dim, d.real_dim);
        },
        py::arg("text"));
  m.def("minimal_coset_reps",
        [](const std::string& text, int cap) {
          std::vector<std::pair<std::vector<int>, long>> out;
          for (const CosetRep& rep : minimal_coset_reps(flag_type(parse_spectrum(text)), cap))
            out.emplace_back(rep.perm.images, rep.length);
          return out;
        },
        py::arg("text"), py::arg("cap") = kDefaultEnumerationCap,
        "One-line notation and length of every minimal coset representative.");
  m.def("poincare_polynomial",
        [](const std::string& text, int cap) {
          return poincare_polynomial(flag_type(parse_spectrum(text)), cap);
        },
        py::arg("text"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("h2_generators",
        [](const std::string& text) {
          std::vector<std::pair<int, int>> out;
          for (const H2Generator& g : h2_generators(flag_type(parse_spectrum(text))))
            out.push_back(g.transposition);
          return out;
        },
        py::arg("text"));

  // width bounds
  m.def("width_report",
        [](const std::string& text) { return report_dict(width_report(parse_spectrum(text))); },
        py::arg("text"), "Upper/lower width bounds and exactness as a dict.");
  m.def("width_report_json",
        [](const std::string& text) {
          return width_report_to_json(width_report(parse_spectrum(text)));
        },
        py::arg("text"));
  m.def("difference_gcd",
        [](const std::string& text) -> py::object {
          auto g = difference_gcd(parse_spectrum(text));
          return g ? py::object(py::str(g->str())) : py::none();
        },
        py::arg("text"));

  // moment map, polytope and graph
  m.def("moment_map",
        [](const Eigen::MatrixXcd& a) { return moment_map(HermitianMatrix(a)); },
        py::arg("hermitian"), "Real diagonal of a Hermitian matrix.");
  m.def("fixed_points",
        [](const std::string& text, int cap) {
          std::vector<std::vector<std::string>> out;
          for (const RationalVector& v : fixed_points(parse_spectrum(text), cap))
            out.push_back(to_strings(v));
          return out;
        },
        py::arg("text"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("hull_membership",
        [](const std::vector<std::string>& point, const std::string& text) {
          return hull_membership(to_rationals(point), parse_spectrum(text));
        },
        py::arg("point"), py::arg("text"),
        "Exact moment-polytope membership by majorization; point entries are "
        "rational strings.");
  m.def("gkm_graph_json",
        [](const std::string& text, int cap) {
          return gkm_to_json(gkm_graph(parse_spectrum(text), cap));
        },
        py::arg("text"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("gkm_graph_dot",
        [](const std::string& text, int cap) {
          return gkm_to_dot(gkm_graph(parse_spectrum(text), cap));
        },
        py::arg("text"), py::arg("cap") = kDefaultEnumerationCap);

  // numerical subspace geometry; matrices are numpy arrays of bases
  m.def("orthonormalize",
        [](const Eigen::MatrixXcd& mat) { return orthonormalize(mat).basis(); },
        py::arg("matrix"));
  m.def("intersect",
        [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
          return intersect(orthonormalize(a), orthonormalize(b)).basis();
        },
        py::arg("a"), py::arg("b"));
  m.def("subspace_sum",
        [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
          return subspace_sum(orthonormalize(a), orthonormalize(b)).basis();
        },
        py::arg("a"), py::arg("b"));
  m.def("contains",
        [](const Eigen::MatrixXcd& big, const Eigen::MatrixXcd& small) {
          return contains(orthonormalize(big), orthonormalize(small));
        },
        py::arg("big"), py::arg("small"));
  m.def("subspace_distance",
        [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
          return subspace_distance(orthonormalize(a), orthonormalize(b));
        },
        py::arg("a"), py::arg("b"));
  m.def("line_through",
        [](const Eigen::MatrixXcd& w, const Eigen::MatrixXcd& line,
           const Eigen::MatrixXcd& hyperplane) {
          GrassmannLine g =
              line_through(orthonormalize(w), orthonormalize(line), orthonormalize(hyperplane));
          return py::make_tuple(g.kernel.basis(), g.span.basis());
        },
        py::arg("w"), py::arg("line"), py::arg("hyperplane"),
        "Kernel and span bases of the unique curve through w meeting the "
        "incidence locus of (line, hyperplane).");
  m.def("flag_to_hermitian",
        [](const std::vector<Eigen::MatrixXcd>& flag, const std::string& text) {
          std::vector<Subspace> steps;
          for (const Eigen::MatrixXcd& basis : flag) steps.push_back(orthonormalize(basis));
          return flag_to_hermitian(steps, parse_spectrum(text)).entries();
        },
        py::arg("flag"), py::arg("text"),
        "Hermitian matrix whose block eigenspaces realize the given flag.");

  // symplectic pairing and sphere areas
  m.def("kks_eval",
        [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
          return kks_eval(HermitianMatrix(a), SkewHermitianMatrix(x), SkewHermitianMatrix(y));
        },
        py::arg("a"), py::arg("x"), py::arg("y"), "Trace(iA[X,Y]) with structure checks.");
  m.def("sphere_point",
        [](const std::vector<std::string>& fixed_point, int i, int j, double theta, double phi) {
          SpherePatch patch{to_rationals(fixed_point), i, j};
          SpherePointFrame f = sphere_point(patch, theta, phi);
          return py::make_tuple(f.point.entries(), f.theta_generator.entries(),
                                f.phi_generator.entries());
        },
        py::arg("fixed_point"), py::arg("i"), py::arg("j"), py::arg("theta"), py::arg("phi"));
  m.def("sphere_area",
        [](const std::vector<std::string>& fixed_point, int i, int j, int grid_theta,
           int grid_phi) {
          SpherePatch patch{to_rationals(fixed_point), i, j, grid_theta, grid_phi};
          return sphere_area(patch);
        },
        py::arg("fixed_point"), py::arg("i"), py::arg("j"),
        py::arg("grid_theta") = kDefaultGrid, py::arg("grid_phi") = kDefaultGrid,
        "Quadrature of the sphere swapping positions (i, j); converges to "
        "|F_i - F_j|.");

#ifdef VERSION_INFO
#define ORBITWIDTH_STR(x) #x
#define ORBITWIDTH_XSTR(x) ORBITWIDTH_STR(x)
  m.attr("__version__") = ORBITWIDTH_XSTR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
