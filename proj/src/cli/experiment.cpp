#include "mos/experiment.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "mos/error.hpp"
#include "mos/pgm.hpp"

namespace mos::experiment {

namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw Error(ErrorCode::IoFailure, "write failed on " + path.string());
    }
}

void ensure_out_dir(const fs::path& dir)
{
    if (dir.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no output directory given");
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw Error(ErrorCode::IoFailure, "cannot create output directory " + dir.string());
    }
}

RunResult run_class(const Dataset& data, const RunConfig& config, const RuleConfig& rules,
                    int digit, std::optional<SampleStream>& stream_out)
{
    stream_out.emplace(idx::select_class(data.images, data.labels, digit, config.n));
    const ReconstructionParams params{.bias = config.bias, .transfer = config.transfer};
    auto result = run_generations(*stream_out, params, rules, config.generations);
    if (result.memory.empty()) {
        throw Error(ErrorCode::Exhausted,
                    "digit " + std::to_string(digit) + ": no mode passed the active rules (" +
                        format_rule_set(rules.active_rules()) + ")");
    }
    return result;
}

void check_run_config(const RunConfig& config)
{
    if (config.n == 0) {
        throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    }
    if (config.generations == 0) {
        throw Error(ErrorCode::InvalidArgument, "generations must be at least 1");
    }
}

}  // namespace

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidDigit:
    case ErrorCode::IoFailure:
        return kExitConfig;
    default:
        return kExitData;
    }
}

DataFiles locate_data(const fs::path& dir)
{
    static constexpr std::array<std::array<const char*, 2>, 4> kCandidates{{
        {"t10k-images-idx3-ubyte", "t10k-labels-idx1-ubyte"},
        {"t10k-images.idx3-ubyte", "t10k-labels.idx1-ubyte"},
        {"train-images-idx3-ubyte", "train-labels-idx1-ubyte"},
        {"train-images.idx3-ubyte", "train-labels.idx1-ubyte"},
    }};
    if (!fs::is_directory(dir)) {
        throw Error(ErrorCode::IoFailure, "data directory " + dir.string() + " does not exist");
    }
    for (const auto& [images, labels] : kCandidates) {
        if (fs::is_regular_file(dir / images) && fs::is_regular_file(dir / labels)) {
            return {dir / images, dir / labels};
        }
    }
    throw Error(ErrorCode::IoFailure,
                "no decompressed MNIST IDX files (t10k-images-idx3-ubyte, "
                "t10k-labels-idx1-ubyte) in " + dir.string());
}

Dataset load_dataset(const fs::path& dir)
{
    const auto files = locate_data(dir);
    return {idx::parse_idx_images(idx::read_file(files.images)),
            idx::parse_idx_labels(idx::read_file(files.labels))};
}

RuleConfig resolve_rules(const RunConfig& config)
{
    const auto defaults = RuleConfig::defaults_for(config.n, config.rules);
    const double ts1 = config.ts1.value_or(defaults.ts1());
    const double ts2 = config.ts2.value_or(std::min(defaults.ts2(), ts1));
    return RuleConfig(ts1, ts2, config.rules);
}

std::string column_name(int digit)
{
    return "digit" + std::to_string(digit);
}

std::size_t table_rows(std::size_t generations, std::size_t longest_column)
{
    return std::max(generations + 1, longest_column);
}

std::string format_index_table(const std::vector<int>& digits,
                               const std::vector<const ModeMemory*>& memories,
                               std::size_t generations)
{
    if (digits.size() != memories.size()) {
        throw Error(ErrorCode::InvalidArgument, "one memory per digit column required");
    }
    std::size_t longest = 0;
    for (const auto* m : memories) {
        longest = std::max(longest, m->learned_count());
    }
    const std::size_t rows = table_rows(generations, longest);

    std::vector<std::vector<std::optional<std::size_t>>> columns;
    columns.reserve(memories.size());
    for (const auto* m : memories) {
        columns.push_back(learned_indices(*m, rows));
    }

    std::ostringstream out;
    for (std::size_t c = 0; c < digits.size(); ++c) {
        out << (c ? "," : "") << column_name(digits[c]);
    }
    out << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "");
            if (columns[c][r]) {
                out << *columns[c][r];
            } else {
                out << "none";
            }
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::ordered_json run_report(const RunConfig& config, const RuleConfig& rules,
                                  const SampleStream& stream, const RunResult& result)
{
    using nlohmann::ordered_json;

    ordered_json cfg;
    cfg["data_dir"] = config.data_dir.generic_string();
    cfg["digit"] = config.digit;
    cfg["n"] = config.n;
    cfg["generations"] = config.generations;
    cfg["ts1"] = rules.ts1();
    cfg["ts2"] = rules.ts2();
    cfg["equivalency_tolerance"] = rules.equivalency_tolerance();
    ordered_json rule_names = ordered_json::array();
    for (const auto r : rules.active_rules()) {
        rule_names.push_back(std::string(to_string(r)));
    }
    cfg["rules"] = rule_names;
    cfg["transfer"] = std::string(to_string(config.transfer));
    cfg["weight"] = ReconstructionParams::weight;
    cfg["bias"] = config.bias;

    ordered_json gens = ordered_json::array();
    for (const auto& rec : result.memory.records()) {
        ordered_json g;
        g["generation"] = rec.generation;
        g["mode_value"] = rec.mode_value;
        g["frequency"] = rec.frequency;
        g["indices"] = rec.indices;
        g["aggregate_prob"] = rec.aggregate_prob;
        gens.push_back(std::move(g));
    }

    const auto& probs = result.distribution.probs;
    const auto [lo, hi] = std::minmax_element(probs.begin(), probs.end());
    ordered_json dist;
    dist["count"] = probs.size();
    dist["net_sum"] = result.distribution.net_sum;
    dist["min_prob"] = *lo;
    dist["max_prob"] = *hi;
    const auto [alo, ahi] =
        std::minmax_element(result.activations.begin(), result.activations.end());
    dist["min_activation"] = *alo;
    dist["max_activation"] = *ahi;

    ordered_json report;
    report["config"] = std::move(cfg);
    report["sample_height"] = stream.height();
    report["sample_width"] = stream.width();
    report["generations"] = std::move(gens);
    if (result.reconstruction) {
        ordered_json rec;
        rec["height"] = result.reconstruction->height;
        rec["width"] = result.reconstruction->width;
        rec["pooled_indices"] = result.reconstruction->pooled_indices;
        report["reconstruction"] = std::move(rec);
    }
    if (result.loss) {
        report["mean_loss"] = result.loss->mean_loss;
    }
    report["distribution"] = std::move(dist);
    return report;
}

RunOutcome cmd_run(const RunConfig& config)
{
    check_run_config(config);
    if (config.digit < 0 || config.digit > 9) {
        throw Error(ErrorCode::InvalidDigit,
                    "digit " + std::to_string(config.digit) + " outside 0..9");
    }
    const auto rules = resolve_rules(config);
    const auto data = load_dataset(config.data_dir);

    std::optional<SampleStream> stream;
    auto result = run_class(data, config, rules, config.digit, stream);

    ensure_out_dir(config.out_dir);
    const Sample& original = stream->at(1);
    pgm::write(config.out_dir / "original.pgm", original.pixels(), original.height(),
               original.width());
    const auto& recon = *result.reconstruction;
    pgm::write(config.out_dir / "reconstruction.pgm", recon.canvas, recon.height, recon.width);
    write_text(config.out_dir / "indices.csv",
               format_index_table({config.digit}, {&result.memory}, config.generations));
    write_text(config.out_dir / "run.json",
               run_report(config, rules, *stream, result).dump(2) + "\n");

    return {rules, std::move(result)};
}

std::string cmd_table(const RunConfig& config)
{
    check_run_config(config);
    const auto rules = resolve_rules(config);
    const auto data = load_dataset(config.data_dir);

    std::vector<int> digits;
    std::vector<RunResult> results;
    for (int digit = 0; digit <= 9; ++digit) {
        std::optional<SampleStream> stream;
        results.push_back(run_class(data, config, rules, digit, stream));
        digits.push_back(digit);
    }
    std::vector<const ModeMemory*> memories;
    for (const auto& r : results) {
        memories.push_back(&r.memory);
    }
    const auto table = format_index_table(digits, memories, config.generations);

    ensure_out_dir(config.out_dir);
    write_text(config.out_dir / "table.csv", table);
    return table;
}

}  // namespace mos::experiment
