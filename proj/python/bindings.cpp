#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dcglearn/coherence.hpp"
#include "dcglearn/config.hpp"
#include "dcglearn/csv.hpp"
#include "dcglearn/encoding.hpp"
#include "dcglearn/errors.hpp"
#include "dcglearn/evaluation.hpp"
#include "dcglearn/factorization.hpp"
#include "dcglearn/learner.hpp"
#include "dcglearn/plot.hpp"
#include "dcglearn/ranking.hpp"
#include "dcglearn/simulation.hpp"

namespace py = pybind11;
using namespace dcglearn;

PYBIND11_MODULE(_dcglearn, m) {
  m.doc() = "DCG utility learning: encodings, coherency checks, preference fitting, "
            "rank-one factorization and the simulation harness";

  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<GainVector>(m, "GainVector")
      .def(py::init<>())
      .def(py::init([](std::vector<double> gains) { return GainVector{std::move(gains)}; }),
           py::arg("gains"))
      .def_readwrite("gains", &GainVector::gains)
      .def("levels", &GainVector::levels)
      .def("at_grade", &GainVector::at_grade, py::arg("grade"));

  py::class_<DiscountVector>(m, "DiscountVector")
      .def(py::init<>())
      .def(py::init([](std::vector<double> d) { return DiscountVector{std::move(d)}; }),
           py::arg("discounts"))
      .def_readwrite("discounts", &DiscountVector::discounts)
      .def("positions", &DiscountVector::positions);

  py::class_<LabeledSet>(m, "LabeledSet")
      .def(py::init<>())
      .def(py::init([](std::vector<int> grades) { return LabeledSet{std::move(grades)}; }),
           py::arg("grades"))
      .def_readwrite("grades", &LabeledSet::grades)
      .def("size", &LabeledSet::size);

  m.def("is_compatible", &is_compatible, py::arg("gains"));
  m.def("is_valid_discount", &is_valid_discount, py::arg("discounts"));
  m.def("log_discounts", &log_discounts, py::arg("positions"), py::arg("base") = 2.0);
  m.def("dcg", &dcg, py::arg("grades"), py::arg("gains"), py::arg("discounts"), py::arg("k"));
  m.def("optimal_ranking", &optimal_ranking, py::arg("set"), py::arg("gains"),
        py::arg("discounts"), py::arg("k"));
  m.def("grades_of", &grades_of, py::arg("set"), py::arg("ranking"), py::arg("k"));
  m.def("apply_power_transform", &apply_power_transform, py::arg("gains"), py::arg("exponent"));

  py::class_<Encoding>(m, "Encoding")
      .def(py::init<>())
      .def_readwrite("bits", &Encoding::bits)
      .def_readwrite("block_size", &Encoding::block_size)
      .def("blocks", &Encoding::blocks)
      .def("__len__", &Encoding::size);

  py::class_<UtilityVector>(m, "UtilityVector")
      .def(py::init<>())
      .def(py::init([](std::vector<double> w, int block) {
             return UtilityVector{std::move(w), block};
           }),
           py::arg("weights"), py::arg("block_size"))
      .def_readwrite("weights", &UtilityVector::weights)
      .def_readwrite("block_size", &UtilityVector::block_size)
      .def("blocks", &UtilityVector::blocks)
      .def("__len__", &UtilityVector::size);

  m.def("encode_grades", &encode_grades, py::arg("grades"), py::arg("levels"));
  m.def("decode_grades", &decode_grades, py::arg("encoding"));
  m.def("encode_permutation", &encode_permutation, py::arg("permutation"));
  m.def("utility", &utility, py::arg("weights"), py::arg("encoding"));
  m.def("dcg_weights", &dcg_weights, py::arg("gains"), py::arg("discounts"));

  py::class_<CoherenceVerdict>(m, "CoherenceVerdict")
      .def_readonly("coherent", &CoherenceVerdict::coherent)
      .def_readonly("witness", &CoherenceVerdict::witness)
      .def_readonly("a_pi1", &CoherenceVerdict::a_pi1)
      .def_readonly("a_pi2", &CoherenceVerdict::a_pi2)
      .def_readonly("b_pi1", &CoherenceVerdict::b_pi1)
      .def_readonly("b_pi2", &CoherenceVerdict::b_pi2);

  m.def("check_coherence", &check_coherence, py::arg("set"), py::arg("gains_a"),
        py::arg("gains_b"), py::arg("discounts"), py::arg("k"));
  m.def("verify_binary_coherence", &verify_binary_coherence, py::arg("trials"), py::arg("n"),
        py::arg("k"), py::arg("seed"));
  m.def("find_counterexample_exponent", &find_counterexample_exponent, py::arg("set"),
        py::arg("gains"), py::arg("discounts"), py::arg("k"), py::arg("k_max"));

  py::class_<PreferencePair>(m, "PreferencePair")
      .def(py::init<>())
      .def(py::init([](Encoding w, Encoding l, double margin) {
             return PreferencePair{std::move(w), std::move(l), margin};
           }),
           py::arg("winner"), py::arg("loser"), py::arg("margin") = 1.0)
      .def_readwrite("winner", &PreferencePair::winner)
      .def_readwrite("loser", &PreferencePair::loser)
      .def_readwrite("margin", &PreferencePair::margin);

  py::class_<FitConfig>(m, "FitConfig")
      .def(py::init<>())
      .def_readwrite("c", &FitConfig::c)
      .def_readwrite("monotone", &FitConfig::monotone)
      .def_readwrite("tolerance", &FitConfig::tolerance)
      .def_readwrite("max_iterations", &FitConfig::max_iterations)
      .def_readwrite("seed", &FitConfig::seed);

  py::class_<FitReport>(m, "FitReport")
      .def_readonly("weights", &FitReport::weights)
      .def_readonly("iterations", &FitReport::iterations)
      .def_readonly("objective", &FitReport::objective)
      .def_readonly("max_relative_increase", &FitReport::max_relative_increase)
      .def_readonly("converged", &FitReport::converged);

  m.def("fit", &fit, py::arg("pairs"), py::arg("config") = FitConfig{});
  m.def("fit_report", &fit_report, py::arg("pairs"), py::arg("config") = FitConfig{});
  m.def("isotonic_project", &isotonic_project, py::arg("values"));
  m.def("label_pair", &label_pair, py::arg("truth"), py::arg("first"), py::arg("second"));

  py::class_<WeightMatrix>(m, "WeightMatrix")
      .def(py::init<>())
      .def_readwrite("rows", &WeightMatrix::rows)
      .def_readwrite("cols", &WeightMatrix::cols)
      .def_readwrite("entries", &WeightMatrix::entries)
      .def_static("from_utility", &WeightMatrix::from_utility, py::arg("weights"))
      .def("to_utility", &WeightMatrix::to_utility)
      .def("at", static_cast<double (WeightMatrix::*)(int, int) const>(&WeightMatrix::at),
           py::arg("row"), py::arg("col"));

  py::class_<RankOneFactors>(m, "RankOneFactors")
      .def_readonly("gains_est", &RankOneFactors::gains_est)
      .def_readonly("discounts_est", &RankOneFactors::discounts_est)
      .def_readonly("sigma1", &RankOneFactors::sigma1)
      .def_readonly("residual_ratio", &RankOneFactors::residual_ratio);

  m.def("rank_one_factorize", &rank_one_factorize, py::arg("matrix"), py::arg("tol") = 1e-12);

  m.def("precision", &precision, py::arg("weights"), py::arg("test_pairs"));
  m.def("t_transform", &t_transform, py::arg("weights"));
  m.def("similarity", &similarity, py::arg("truth"), py::arg("estimate"));
  m.def("hamming", &hamming, py::arg("a"), py::arg("b"));

  py::enum_<DataSetting>(m, "DataSetting")
      .value("Data1", DataSetting::data1)
      .value("Data2", DataSetting::data2);
  py::enum_<PairMode>(m, "PairMode")
      .value("general", PairMode::general)
      .value("optimalSameList", PairMode::optimal_same_list)
      .value("optimalDifferentLists", PairMode::optimal_different_lists);
  py::enum_<ModelKind>(m, "ModelKind")
      .value("base", ModelKind::base)
      .value("hammingMargin", ModelKind::hamming_margin)
      .value("gradeFree", ModelKind::grade_free);

  py::class_<GroundTruthSpec>(m, "GroundTruthSpec")
      .def(py::init<>())
      .def_readwrite("setting", &GroundTruthSpec::setting)
      .def_readwrite("positions", &GroundTruthSpec::positions)
      .def_readwrite("levels", &GroundTruthSpec::levels)
      .def_readwrite("log_base", &GroundTruthSpec::log_base);

  py::class_<NoiseSpec>(m, "NoiseSpec")
      .def(py::init<>())
      .def_readwrite("pair_flips", &NoiseSpec::pair_flips)
      .def_readwrite("grade_flips", &NoiseSpec::grade_flips);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("truth", &ExperimentConfig::truth)
      .def_readwrite("base_list", &ExperimentConfig::base_list)
      .def_readwrite("train_sizes", &ExperimentConfig::train_sizes)
      .def_readwrite("test_pairs", &ExperimentConfig::test_pairs)
      .def_readwrite("validation_pairs", &ExperimentConfig::validation_pairs)
      .def_readwrite("noise", &ExperimentConfig::noise)
      .def_readwrite("pair_mode", &ExperimentConfig::pair_mode)
      .def_readwrite("model", &ExperimentConfig::model)
      .def_readwrite("seeds", &ExperimentConfig::seeds)
      .def_readwrite("c_grid", &ExperimentConfig::c_grid)
      .def_readwrite("c", &ExperimentConfig::c)
      .def_readwrite("tolerance", &ExperimentConfig::tolerance)
      .def_readwrite("max_iterations", &ExperimentConfig::max_iterations)
      .def_readwrite("threads", &ExperimentConfig::threads);

  py::class_<ResultRow>(m, "ResultRow")
      .def_readonly("seed", &ResultRow::seed)
      .def_readonly("train_pairs", &ResultRow::train_pairs)
      .def_readonly("pair_flips", &ResultRow::pair_flips)
      .def_readonly("grade_flips", &ResultRow::grade_flips)
      .def_readonly("model", &ResultRow::model)
      .def_readonly("pair_mode", &ResultRow::pair_mode)
      .def_readonly("chosen_c", &ResultRow::chosen_c)
      .def_readonly("precision", &ResultRow::precision)
      .def_readonly("similarity", &ResultRow::similarity);

  m.def("make_ground_truth", &make_ground_truth, py::arg("spec"));
  m.def("make_grade_free_truth", &make_grade_free_truth, py::arg("spec"), py::arg("base_list"));
  m.def("run_experiment", &run_experiment, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("parse_config", &parse_config, py::arg("text"), py::arg("base") = ExperimentConfig{});
  m.def("format_config", &format_config, py::arg("config"));
  m.def("to_csv", &to_csv, py::arg("rows"));
  m.def("render_svg", &render_svg, py::arg("rows"), py::arg("metric"), py::arg("title") = "");
}
