#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "mos/distribution.hpp"
#include "mos/error.hpp"
#include "mos/experiment.hpp"
#include "mos/idx.hpp"
#include "mos/mode_memory.hpp"
#include "mos/pgm.hpp"
#include "mos/pipeline.hpp"
#include "mos/reconstruction.hpp"
#include "mos/rules.hpp"
#include "mos/sample.hpp"

namespace py = pybind11;

namespace {

std::vector<std::uint8_t> as_bytes(const py::bytes& b)
{
    const std::string s = b;
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Mode synthesizer: frequency-ranked mode learning over image streams";

    static py::exception<mos::Error> mos_error(m, "MosError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const mos::Error& e) {
            py::object err = mos_error;
            py::object exc = err(e.what());
            exc.attr("code") = std::string(mos::to_string(e.code()));
            PyErr_SetObject(mos_error.ptr(), exc.ptr());
        }
    });

    py::enum_<mos::TransferKind>(m, "TransferKind")
        .value("Logistic", mos::TransferKind::Logistic)
        .value("Linear", mos::TransferKind::Linear)
        .value("HyperbolicTangent", mos::TransferKind::HyperbolicTangent);

    py::enum_<mos::RuleKind>(m, "RuleKind")
        .value("Maximal", mos::RuleKind::Maximal)
        .value("Minimal", mos::RuleKind::Minimal)
        .value("Equivalency", mos::RuleKind::Equivalency)
        .value("Fuzzy", mos::RuleKind::Fuzzy);

    py::class_<mos::Sample>(m, "Sample")
        .def(py::init([](const std::vector<std::uint8_t>& pixels, std::size_t height,
                         std::size_t width, std::size_t source_index) {
                 return mos::Sample(pixels, height, width, source_index);
             }),
             py::arg("pixels"), py::arg("height"), py::arg("width"), py::arg("source_index") = 1)
        .def_property_readonly("pixels",
                               [](const mos::Sample& s) {
                                   return std::vector<std::uint8_t>(s.pixels().begin(),
                                                                    s.pixels().end());
                               })
        .def_property_readonly("height", &mos::Sample::height)
        .def_property_readonly("width", &mos::Sample::width)
        .def_property_readonly("source_index", &mos::Sample::source_index)
        .def("__eq__", [](const mos::Sample& a, const mos::Sample& b) { return a == b; });

    py::class_<mos::SampleStream>(m, "SampleStream")
        .def(py::init<std::vector<mos::Sample>, int>(), py::arg("samples"), py::arg("class_digit"))
        .def_property_readonly("n", &mos::SampleStream::n)
        .def_property_readonly("class_digit", &mos::SampleStream::class_digit)
        .def_property_readonly("samples",
                               [](const mos::SampleStream& s) {
                                   return std::vector<mos::Sample>(s.samples().begin(),
                                                                   s.samples().end());
                               })
        .def("at", &mos::SampleStream::at, py::arg("source_index"));

    py::class_<mos::ModeDistribution>(m, "ModeDistribution")
        .def_readonly("probs", &mos::ModeDistribution::probs)
        .def_readonly("net_sum", &mos::ModeDistribution::net_sum);

    py::class_<mos::ReconstructionParams>(m, "ReconstructionParams")
        .def(py::init([](double bias, mos::TransferKind transfer) {
                 return mos::ReconstructionParams{.bias = bias, .transfer = transfer};
             }),
             py::arg("bias") = 0.0, py::arg("transfer") = mos::TransferKind::Logistic)
        .def_readonly_static("weight", &mos::ReconstructionParams::weight)
        .def_readwrite("bias", &mos::ReconstructionParams::bias)
        .def_readwrite("transfer", &mos::ReconstructionParams::transfer);

    py::class_<mos::RuleConfig>(m, "RuleConfig")
        .def(py::init<double, double, std::set<mos::RuleKind>, double>(), py::arg("ts1"),
             py::arg("ts2"), py::arg("active_rules"),
             py::arg("equivalency_tolerance") = mos::RuleConfig::default_equivalency_tolerance)
        .def_static("defaults_for", &mos::RuleConfig::defaults_for, py::arg("n"),
                    py::arg("active_rules") = std::set<mos::RuleKind>{mos::RuleKind::Maximal})
        .def_static("accept_all", &mos::RuleConfig::accept_all)
        .def_property_readonly("ts1", &mos::RuleConfig::ts1)
        .def_property_readonly("ts2", &mos::RuleConfig::ts2)
        .def_property_readonly("active_rules", &mos::RuleConfig::active_rules)
        .def("accepts", &mos::RuleConfig::accepts, py::arg("p"));

    py::class_<mos::ModeRecord>(m, "ModeRecord")
        .def(py::init<>())
        .def_readwrite("generation", &mos::ModeRecord::generation)
        .def_readwrite("mode_value", &mos::ModeRecord::mode_value)
        .def_readwrite("frequency", &mos::ModeRecord::frequency)
        .def_readwrite("indices", &mos::ModeRecord::indices)
        .def_readwrite("aggregate_prob", &mos::ModeRecord::aggregate_prob)
        .def("__repr__", [](const mos::ModeRecord& r) {
            return "ModeRecord(generation=" + std::to_string(r.generation) +
                   ", mode_value=" + std::to_string(r.mode_value) +
                   ", frequency=" + std::to_string(r.frequency) + ")";
        });

    py::class_<mos::ModeMemory>(m, "ModeMemory")
        .def(py::init<>())
        .def("append", &mos::ModeMemory::append, py::arg("record"))
        .def_property_readonly("records",
                               [](const mos::ModeMemory& mem) {
                                   return std::vector<mos::ModeRecord>(mem.records().begin(),
                                                                       mem.records().end());
                               })
        .def("__len__", &mos::ModeMemory::size);

    py::class_<mos::Reconstruction>(m, "Reconstruction")
        .def_readonly("canvas", &mos::Reconstruction::canvas)
        .def_readonly("height", &mos::Reconstruction::height)
        .def_readonly("width", &mos::Reconstruction::width)
        .def_readonly("pooled_indices", &mos::Reconstruction::pooled_indices);

    py::class_<mos::LossReport>(m, "LossReport")
        .def_readonly("per_sample", &mos::LossReport::per_sample)
        .def_readonly("mean_loss", &mos::LossReport::mean_loss);

    py::class_<mos::RunResult>(m, "RunResult")
        .def_property_readonly("masses",
                               [](const mos::RunResult& r) { return r.accumulator.masses; })
        .def_readonly("distribution", &mos::RunResult::distribution)
        .def_readonly("hidden", &mos::RunResult::hidden)
        .def_readonly("activations", &mos::RunResult::activations)
        .def_readonly("memory", &mos::RunResult::memory)
        .def_readonly("reconstruction", &mos::RunResult::reconstruction)
        .def_readonly("loss", &mos::RunResult::loss);

    m.def("sample_mass", &mos::sample_mass, py::arg("sample"));
    m.def("net_sum", [](std::vector<std::uint64_t> masses) {
        return mos::net_sum(mos::Accumulator{std::move(masses)});
    }, py::arg("masses"));
    m.def("normalize", [](std::vector<std::uint64_t> masses) {
        return mos::normalize(mos::Accumulator{std::move(masses)});
    }, py::arg("masses"));
    m.def("hidden_activation", &mos::hidden_activation, py::arg("dist"), py::arg("bias") = 0.0);
    m.def("transfer",
          [](const std::vector<double>& values, mos::TransferKind kind) {
              return mos::transfer(values, kind);
          },
          py::arg("values"), py::arg("kind"));
    m.def("rule_fires", &mos::rule_fires, py::arg("p"), py::arg("rule"), py::arg("config"));
    m.def("mode_select",
          [](std::vector<std::uint64_t> masses, const mos::ModeMemory& memory) {
              return mos::mode_select(mos::Accumulator{std::move(masses)}, memory);
          },
          py::arg("masses"), py::arg("memory") = mos::ModeMemory{});
    m.def("pool_modes", &mos::pool_modes, py::arg("memory"), py::arg("stream"));
    m.def("reconstruct",
          [](const std::vector<mos::Sample>& pooled) { return mos::reconstruct(pooled); },
          py::arg("pooled"));
    m.def("reconstruction_loss", &mos::reconstruction_loss, py::arg("stream"),
          py::arg("representative"));
    m.def("run_generations", &mos::run_generations, py::arg("stream"), py::arg("params"),
          py::arg("rules"), py::arg("generations") = 3);
    m.def("learned_indices", &mos::learned_indices, py::arg("memory"), py::arg("rows"));

    m.def("parse_idx_images",
          [](const py::bytes& data) {
              const auto img = mos::idx::parse_idx_images(as_bytes(data));
              py::dict out;
              out["count"] = img.count;
              out["rows"] = img.rows;
              out["cols"] = img.cols;
              out["data"] = py::bytes(reinterpret_cast<const char*>(img.data.data()), img.data.size());
              return out;
          },
          py::arg("data"));
    m.def("parse_idx_labels",
          [](const py::bytes& data) { return mos::idx::parse_idx_labels(as_bytes(data)).labels; },
          py::arg("data"));
    m.def("load_class",
          [](const std::filesystem::path& data_dir, int digit, std::size_t n) {
              const auto data = mos::experiment::load_dataset(data_dir);
              return mos::idx::select_class(data.images, data.labels, digit, n);
          },
          py::arg("data_dir"), py::arg("digit"), py::arg("n"));
    m.def("encode_pgm",
          [](const std::vector<std::uint8_t>& pixels, std::size_t height, std::size_t width) {
              return py::bytes(mos::pgm::encode(pixels, height, width));
          },
          py::arg("pixels"), py::arg("height"), py::arg("width"));
}
