// Copyright 2026 The hdfusion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdfusion/fusion.hpp"

namespace hdfusion::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 2,
    kNumericalFailure = 3,
    kGoldenMismatch = 4,
    /// Every computed cell passed but some were skipped.
    kSkipped = 5,
};

/// Rejected parameter combination; maps to kInvalidInput.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Format { kText, kJson, kCsv };

/// Parameters of `run`. Optional fields are unset unless given on the
/// command line, so flags that do not apply to a protocol can be rejected.
struct RunConfig {
    std::string protocol;
    std::optional<int> dim;
    std::optional<int> embed_dim;
    std::optional<int> ancilla_photons;
    std::optional<bool> edc;
    std::optional<bool> restricted;
    std::optional<bool> both_sides;
    std::optional<double> reflectivity;
    std::optional<int> circuit;
    std::optional<std::string> variant;
    std::optional<std::vector<int>> ports;
    Format format = Format::kText;
    bool per_pattern = false;
    int workers = 0;
    std::string output;
};

/// Known protocol names for `run --protocol`.
const std::vector<std::string>& protocol_names();

/// Validates `config` and builds the protocol; throws ConfigError.
FusionProtocol make_protocol(const RunConfig& config);

/// Runs the configured protocol. Multi-port GHZ boosting at d >= 3 is
/// assembled from single-port runs, since the extra blocks only ever see
/// their own ancilla photons.
FusionReport run_protocol(const RunConfig& config);

/// Combines baseline + per-port boosted increments for GHZ boosting.
FusionReport ghz_boost_total(int d, const std::vector<int>& ports, const FusionOptions& options);

void write_report(const FusionReport& report, Format format, std::ostream& out);

/// Formats a probability with 6 significant digits.
std::string format_probability(double p);

enum class CellStatus { kPass, kFail, kSkip };

struct TableCell {
    std::string row;
    std::string column;
    std::string published;
    double computed = 0.0;
    double delta = 0.0;
    std::string tolerance;
    CellStatus status = CellStatus::kPass;
    std::string note;
};

struct TableResult {
    std::string id;
    std::string title;
    std::vector<TableCell> cells;

    int exit_code() const;
};

const std::vector<std::string>& table_ids();

/// Computes every cell of a published table and compares against it.
/// Throws ConfigError for unknown ids.
TableResult compute_table(const std::string& id, int workers);

void write_table(const TableResult& table, Format format, std::ostream& out);

/// True if `computed`, rounded or truncated to the precision of the
/// published decimal string, reproduces it.
bool matches_published_digits(double computed, const std::string& published);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hdfusion::cli
