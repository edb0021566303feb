#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mos/distribution.hpp"
#include "mos/error.hpp"
#include "mos/idx.hpp"
#include "mos/pipeline.hpp"
#include "mos/rules.hpp"

namespace mos::experiment {

struct RunConfig {
    std::filesystem::path data_dir;
    int digit = 0;
    std::size_t n = 12;
    std::size_t generations = 3;
    std::optional<double> ts1;
    std::optional<double> ts2;
    std::set<RuleKind> rules{RuleKind::Maximal};
    TransferKind transfer = TransferKind::Logistic;
    double bias = 0.0;
    std::filesystem::path out_dir;
};

// Exit statuses of the command-line runner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;

// Configuration problems map to kExitConfig, problems with the data or the
// run itself to kExitData.
int exit_code_for(ErrorCode code);

struct DataFiles {
    std::filesystem::path images;
    std::filesystem::path labels;
};

// Looks for decompressed MNIST IDX files, test split first. Throws IoFailure
// when the directory holds no usable pair.
DataFiles locate_data(const std::filesystem::path& dir);

struct Dataset {
    idx::IdxImages images;
    idx::IdxLabels labels;
};

Dataset load_dataset(const std::filesystem::path& dir);

// Missing thresholds fall back to RuleConfig::defaults_for(n); a defaulted
// ts2 is capped at ts1 so an explicit low ts1 stays valid.
RuleConfig resolve_rules(const RunConfig& config);

// Header name of a digit column, e.g. "digit0".
std::string column_name(int digit);

// Rows in the learned-index table: one more than the number of
// generations, or more if some column learned more indices.
std::size_t table_rows(std::size_t generations, std::size_t longest_column);

// Comma-separated table with LF endings; missing cells read "none".
std::string format_index_table(const std::vector<int>& digits,
                               const std::vector<const ModeMemory*>& memories,
                               std::size_t generations);

nlohmann::ordered_json run_report(const RunConfig& config, const RuleConfig& rules,
                                  const SampleStream& stream, const RunResult& result);

struct RunOutcome {
    RuleConfig rules;
    RunResult result;
};

// Executes one class pipeline and writes original.pgm, reconstruction.pgm,
// indices.csv and run.json into config.out_dir.
RunOutcome cmd_run(const RunConfig& config);

// One pipeline per digit 0..9 at config.n; writes table.csv into
// config.out_dir and returns its contents. config.digit is ignored.
std::string cmd_table(const RunConfig& config);

}  // namespace mos::experiment
