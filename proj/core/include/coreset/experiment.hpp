#pragma once

#include "coreset/graph.hpp"
#include "coreset/protocol.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coreset {

// One experiment sweep: an instance source, a scheme, and a (k, alpha, seed)
// grid. alpha parameterizes both the hard-instance generators and the
// subsampled/grouped schemes; schemes that ignore it still record it.
struct ExperimentConfig {
    std::string generator;     // hard-matching | hard-vc | random-bipartite | maximal-trap | file
    std::string input_path;    // when generator == "file"
    std::uint32_t n = 0;
    double p = 0.0;            // random-bipartite edge probability; 0 means 8/n
    std::string scheme = "matching-coreset";
    std::vector<std::uint32_t> k_values{1};
    std::vector<double> alpha_values{8.0};
    std::vector<std::uint64_t> seeds{1};
    bool oracle = true;
    std::uint32_t threads = 1;
    std::string out_path;
    std::string format = "csv";

    void validate() const;
};

// Key-value config file: one `key = value` per line, '#' comments. Lists are
// comma separated. Unknown keys are an error.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

struct ReportRow {
    std::string scheme;
    std::string generator;
    std::uint32_t n = 0;
    double alpha = 0.0;
    std::uint32_t k = 0;
    std::uint64_t seed = 0;
    std::size_t solution_size = 0;
    std::optional<std::size_t> optimum;
    std::optional<double> ratio; // optimum-relative approximation factor, >= 1
    std::uint64_t total_bits = 0;
    std::uint64_t max_machine_bits = 0;
    double wall_ms = 0.0; // excluded from byte-identity comparisons
};

struct Report {
    std::vector<ReportRow> rows;
};

// Full sweep over the (k, alpha, seed) grid. Grid cells may run on
// config.threads workers; rows are assembled in grid order, so the report is
// identical for every thread count.
Report run_experiment(const ExperimentConfig& cfg);

extern const char* const kReportCsvHeader;

std::string report_to_csv(const Report& r);
std::string report_to_json(const Report& r);
void emit_report(const Report& r, const std::string& format, const std::string& path);

} // namespace coreset
