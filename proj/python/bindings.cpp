#include "rieszpair/cantor_set.hpp"
#include "rieszpair/diagnostics.hpp"
#include "rieszpair/experiments.hpp"
#include "rieszpair/riesz_coeffs.hpp"
#include "rieszpair/spectral_gap.hpp"
#include "rieszpair/symbolic_sequences.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <utility>

namespace py = pybind11;
using namespace rieszpair;

namespace {

CantorParams params_from_string(const std::string& gamma) {
    return CantorParams(parse_rational(gamma));
}

std::vector<std::pair<std::string, std::string>> arcs_as_strings(const IntervalSet& set) {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(set.arc_count());
    for (const Arc& arc : set.arcs())
        out.emplace_back(to_fraction_string(arc.lo), to_fraction_string(arc.hi));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "ternary fat Cantor sets, Riesz-product Fourier tables, and alpha(B, F_n)";

    py::class_<CantorParams>(m, "CantorParams")
        .def(py::init(&params_from_string), py::arg("gamma"),
             "gamma as an exact fraction string, e.g. '3/4' or '0.75'")
        .def_property_readonly("gamma",
                               [](const CantorParams& p) { return to_fraction_string(p.gamma()); })
        .def("interval_length",
             [](const CantorParams& p, int j) { return to_fraction_string(p.interval_length(j)); },
             py::arg("j"))
        .def("gap_offset",
             [](const CantorParams& p, int j) { return to_fraction_string(p.gap_offset(j)); },
             py::arg("j"))
        .def("gap_length",
             [](const CantorParams& p, int j) { return to_fraction_string(p.gap_length(j)); },
             py::arg("j"))
        .def("__repr__", [](const CantorParams& p) {
            return "CantorParams(gamma=" + to_fraction_string(p.gamma()) + ")";
        });

    py::class_<IntervalSet>(m, "IntervalSet")
        .def_static("from_arcs",
                    [](const std::vector<std::pair<std::string, std::string>>& arcs) {
                        std::vector<Arc> parsed;
                        parsed.reserve(arcs.size());
                        for (const auto& [lo, hi] : arcs)
                            parsed.push_back({parse_rational(lo), parse_rational(hi)});
                        return IntervalSet::from_arcs(std::move(parsed));
                    },
                    py::arg("arcs"))
        .def_static("full_circle", &IntervalSet::full_circle)
        .def("arcs", &arcs_as_strings)
        .def("arc_count", &IntervalSet::arc_count)
        .def("measure", [](const IntervalSet& s) { return to_fraction_string(s.measure()); })
        .def("measure_float", [](const IntervalSet& s) { return to_double(s.measure()); })
        .def("translate",
             [](const IntervalSet& s, const std::string& t) {
                 return s.translate(parse_rational(t));
             },
             py::arg("t"))
        .def("symmetric_difference", &IntervalSet::symmetric_difference, py::arg("other"))
        .def("contains", &IntervalSet::contains, py::arg("other"))
        .def("to_json", &IntervalSet::to_json);

    m.def("level_set", &level_set, py::arg("params"), py::arg("level"),
          py::arg("max_depth") = kDefaultMaxDepth);

    m.def("thue_morse_bit", &thue_morse_bit, py::arg("n"));

    py::class_<IndexSet>(m, "IndexSet")
        .def_static("thue_morse", &IndexSet::thue_morse)
        .def_static("arithmetic", &IndexSet::arithmetic, py::arg("residue"), py::arg("modulus"))
        .def_static("shifted", &IndexSet::shifted, py::arg("base"), py::arg("offset"))
        .def_static("explicit_window", &IndexSet::explicit_window, py::arg("start"),
                    py::arg("bits"))
        .def("contains", &IndexSet::contains, py::arg("m"))
        .def("describe", &IndexSet::describe)
        .def("__repr__", [](const IndexSet& s) { return "IndexSet(" + s.describe() + ")"; });

    m.def("parse_index_set", &parse_index_set, py::arg("descriptor"));
    m.def("enumerate_members", &rieszpair::enumerate, py::arg("set"), py::arg("a"), py::arg("b"));
    m.def("truncate", &rieszpair::truncate, py::arg("set"), py::arg("n"));
    m.def(
        "is_cover",
        [](const std::vector<IndexSet>& sets, std::int64_t a, std::int64_t b) {
            const CoverResult r = is_cover(sets, a, b);
            return py::make_tuple(r.covered,
                                  r.covered ? py::object(py::none()) : py::cast(r.first_uncovered));
        },
        py::arg("sets"), py::arg("a"), py::arg("b"));
    m.def(
        "upper_beurling_estimate",
        [](const IndexSet& set, std::int64_t k, std::int64_t a, std::int64_t b) {
            return to_fraction_string(upper_beurling_estimate(set, k, a, b));
        },
        py::arg("set"), py::arg("window_len"), py::arg("a"), py::arg("b"));

    py::class_<FourierTable>(m, "FourierTable")
        .def_property_readonly("gamma",
                               [](const FourierTable& t) { return to_fraction_string(t.gamma); })
        .def_readonly("max_freq", &FourierTable::max_freq)
        .def_readonly("depth", &FourierTable::depth)
        .def_readonly("eps", &FourierTable::eps)
        .def_readonly("err_bound", &FourierTable::err_bound)
        .def("at", &FourierTable::at, py::arg("k"))
        .def("values", [](const FourierTable& t) { return t.values; });

    m.def("coefficient", &coefficient, py::arg("params"), py::arg("k"), py::arg("depth"));
    m.def("choose_depth", &choose_depth, py::arg("params"), py::arg("max_freq"), py::arg("eps"));
    m.def("build_table", &build_table, py::arg("params"), py::arg("max_freq"), py::arg("eps"),
          py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("level_coefficient_exact", &level_coefficient_exact, py::arg("params"),
          py::arg("level"), py::arg("k"));
    m.def("level_coefficient_direct", &level_coefficient_direct, py::arg("params"),
          py::arg("level"), py::arg("k"), py::arg("max_depth") = kDefaultMaxDepth);
    m.def("parseval_partial",
          py::overload_cast<const FourierTable&, std::int64_t>(&parseval_partial),
          py::arg("table"), py::arg("cutoff"));

    py::class_<RestrictedGram>(m, "RestrictedGram")
        .def_readonly("indices", &RestrictedGram::indices)
        .def_readonly("entries", &RestrictedGram::entries)
        .def_property_readonly(
            "gamma", [](const RestrictedGram& g) { return to_fraction_string(g.gamma); })
        .def("size", &RestrictedGram::size);

    m.def("build_gram", &build_gram, py::arg("table"), py::arg("indices"));

    py::class_<MinEigenPair>(m, "MinEigenPair")
        .def_readonly("value", &MinEigenPair::value)
        .def_readonly("vector", &MinEigenPair::vector)
        .def_readonly("residual", &MinEigenPair::residual)
        .def_readonly("norm_bound", &MinEigenPair::norm_bound);

    m.def("min_eigenpair", &min_eigenpair, py::arg("gram"),
          py::call_guard<py::gil_scoped_release>());
    m.def("all_eigenvalues", &all_eigenvalues, py::arg("gram"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<AlphaPoint>(m, "AlphaPoint")
        .def_readonly("n", &AlphaPoint::n)
        .def_readonly("set_size", &AlphaPoint::set_size)
        .def_readonly("alpha", &AlphaPoint::alpha);

    m.def("alpha_sequence",
          py::overload_cast<const CantorParams&, const IndexSet&,
                            const std::vector<std::int64_t>&, double>(&alpha_sequence),
          py::arg("params"), py::arg("frequencies"), py::arg("schedule"),
          py::arg("eps") = 1e-12, py::call_guard<py::gil_scoped_release>());

    py::class_<SobolevProbe>(m, "SobolevProbe")
        .def_readonly("s", &SobolevProbe::s)
        .def_readonly("cutoffs", &SobolevProbe::cutoffs)
        .def_readonly("partial_sums", &SobolevProbe::partial_sums)
        .def_readonly("growth_ratios", &SobolevProbe::growth_ratios)
        .def_readonly("p", &SobolevProbe::p)
        .def_readonly("c", &SobolevProbe::c)
        .def("to_json", &SobolevProbe::to_json);

    m.def("sobolev_threshold_exponent", &sobolev_threshold_exponent);
    m.def("sobolev_partial_sums", &sobolev_partial_sums, py::arg("table"), py::arg("s"),
          py::arg("cutoffs"));

    py::class_<TranslationCheck>(m, "TranslationCheck")
        .def_readonly("j", &TranslationCheck::j)
        .def_readonly("level", &TranslationCheck::level)
        .def_readonly("step_ok", &TranslationCheck::step_ok)
        .def_readonly("combined_ok", &TranslationCheck::combined_ok)
        .def("passed", &TranslationCheck::passed)
        .def("to_json", &TranslationCheck::to_json);

    m.def("translation_inequality_check", &translation_inequality_check, py::arg("params"),
          py::arg("j"), py::arg("level"), py::arg("max_depth") = kDefaultMaxDepth);

    py::class_<DensityVerdict>(m, "DensityVerdict")
        .def_property_readonly(
            "estimate", [](const DensityVerdict& v) { return to_fraction_string(v.estimate); })
        .def_property_readonly("estimate_float",
                               [](const DensityVerdict& v) { return to_double(v.estimate); })
        .def_readonly("alpha_must_vanish", &DensityVerdict::alpha_must_vanish)
        .def_readonly("verdict", &DensityVerdict::verdict)
        .def("to_json", &DensityVerdict::to_json);

    m.def("density_vs_measure", &density_vs_measure, py::arg("set"), py::arg("params"),
          py::arg("window_len"), py::arg("search_lo"), py::arg("search_hi"));
}
