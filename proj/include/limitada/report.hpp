#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace limitada {

struct Budgets {
    std::size_t subset_states = 5'000'000;
    std::size_t configs = 20'000'000;
    int max_len = 0;  // 0 picks the pipeline default
};

// Reads LIMITADA_BUDGET_MB and scales the subset-state budget to it.
Budgets budgets_from_env();

struct ExperimentRow {
    std::string pipeline;
    int n_lo = 1;
    int n_hi = 1;
    long long expect_generated = -1;
    long long expect_converted = -1;
    long long expect_minimal = -1;
};

struct ExperimentSpec {
    std::string name;
    std::vector<ExperimentRow> rows;
};

struct ReportRow {
    std::string pipeline;
    std::string source;
    std::string target;
    int n = 0;
    long long generated = -1;
    long long converted = -1;
    long long minimal = -1;
    std::string oracle;  // "agree", "differ at <word>" or "skipped"
    bool ok = true;
    std::string note;
};

std::vector<std::string> pipeline_names();

ExperimentSpec parse_experiment_spec(const std::string& json_text);
ExperimentSpec default_experiment();

// Rows in spec order; a ResourceError from any row propagates.
std::vector<ReportRow> run_experiment(const ExperimentSpec& spec, const Budgets& budgets = {});

std::string report_tsv(const std::vector<ReportRow>& rows);
std::string report_json(const std::string& name, const std::vector<ReportRow>& rows);

}  // namespace limitada
