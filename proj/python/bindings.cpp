#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvcount/arith.hpp"
#include "mvcount/counting.hpp"
#include "mvcount/error.hpp"
#include "mvcount/euler.hpp"
#include "mvcount/prototypes.hpp"
#include "mvcount/qforms.hpp"
#include "mvcount/volume.hpp"
#include "mvcount/zagier.hpp"

namespace py = pybind11;
using namespace mvcount;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python side wraps them
// in fractions.Fraction.
std::string q(const Rational& r) { return r.str(); }

py::dict pi_dict(const PiQuantity& p) {
  py::dict d;
  d["coeff"] = p.coeff.str();
  d["pi_power"] = p.pi_power;
  return d;
}

}  // namespace

PYBIND11_MODULE(_mvcount, m) {
  m.doc() = "Exact Euler characteristics and lattice-point volume estimates";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("sl2_order", [](std::uint64_t d) { return arith::sl2_order(d).get_str(); });
  m.def("e_value", [](std::uint64_t D, std::uint64_t k) { return q(prototypes::e_value(D, k)); },
        py::arg("D"), py::arg("k") = 1);
  m.def("prototypes", [](std::uint64_t D, std::uint64_t k) {
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
    for (const auto& p : prototypes::enumerate_prototypes(D, k)) out.emplace_back(p.a, p.b, p.c);
    return out;
  }, py::arg("D"), py::arg("k") = 1);
  m.def("ek_coeff", [](std::uint64_t k, std::uint64_t n) { return q(qforms::ek_coeff(k, n)); });
  m.def("check_e_and_a", &qforms::check_e_and_a);
  m.def("ebar1", [](std::uint64_t d) { return q(zagier::ebar1_exact(d)); });
  m.def("ebar6", [](std::uint64_t d) { return q(zagier::ebar6_exact(d)); });

  m.def("chi_G", [](std::uint64_t D, std::uint64_t r, const std::string& mode) {
    return q(euler::chi_G(D, r, euler::parse_mode(mode)).value);
  }, py::arg("D"), py::arg("r") = 1, py::arg("mode") = "main_term");
  m.def("chi_W2", [](std::uint64_t D) { return q(euler::chi_W2(D)); });

  m.def("cd_count", [](const std::string& locus, std::uint64_t d, const std::string& mode) {
    auto l = counting::parse_locus(locus);
    auto md = mode.empty() ? counting::default_mode(l) : euler::parse_mode(mode);
    return q(counting::cd_count(l, d, md));
  }, py::arg("locus"), py::arg("d"), py::arg("mode") = "");
  m.def("h2_permutation_oracle", [](std::uint64_t d) {
    return q(counting::h2_permutation_oracle(d));
  });

  m.def("sk_sum", [](std::uint64_t k, std::uint64_t D) { return volume::sk_sum(k, D).get_str(); });
  m.def("volume_exact", [](const std::string& locus) {
    return pi_dict(volume::volume_exact(counting::parse_locus(locus)));
  });
  m.def("convert_convention", [](const std::string& locus) {
    return pi_dict(volume::convert_convention(counting::parse_locus(locus)));
  });
  m.def("volume_estimate", [](const std::string& locus, std::uint64_t D,
                              const std::string& estimator, const std::string& mode,
                              unsigned threads) {
    auto l = counting::parse_locus(locus);
    auto md = mode.empty() ? counting::default_mode(l) : euler::parse_mode(mode);
    volume::VolumeEstimate est;
    {
      py::gil_scoped_release release;
      est = volume::volume_estimate(l, D, volume::parse_estimator(estimator), md, threads);
    }
    py::dict out;
    out["value"] = est.value;
    out["relative_error"] = est.relative_error;
    out["extrapolated"] = est.extrapolated;
    out["extrapolated_relative_error"] = est.extrapolated_relative_error;
    out["exact_target"] = pi_dict(est.exact_target);
    py::list series;
    for (const auto& cp : est.series) series.append(py::make_tuple(cp.D, cp.value));
    out["checkpoints"] = series;
    return out;
  }, py::arg("locus"), py::arg("D"), py::arg("estimator") = "direct", py::arg("mode") = "",
     py::arg("threads") = 0);
}
