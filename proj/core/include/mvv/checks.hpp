#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvv/vertex.hpp"

namespace mvv {

/// Configuration for the verification suites. The defaults reproduce the
/// shipped golden report.
struct CheckConfig {
    int max_degree = 5;
    int q_order = 3;
    std::vector<int> framings{-2, -1, 0, 1, 2};
    int char_n_max = 8;
    std::uint64_t seed = 20100514;
    std::vector<std::string> suites;  // empty = everything
    std::string format = "text";      // "text" or "json"
    std::string out_path;             // empty = stdout only
};

/// Parse a `key = value` config file ('#' starts a comment). Unknown keys are
/// an error. Returns the defaults overridden by the file contents.
CheckConfig load_config_file(const std::string& path);

struct CheckOutcome {
    std::string id;
    std::string anchor;  // one-line statement of the identity checked
    std::map<std::string, std::string> params;
    std::string status;  // "pass" | "fail" | "skip"
    std::int64_t millis = 0;
    std::string witness;  // first mismatching coefficient, both sides rendered
};

struct Report {
    std::string version = "1";
    CheckConfig config;
    std::vector<CheckOutcome> checks;
    bool all_passed() const;
};

/// All check ids, in the stable execution/report order.
const std::vector<std::string>& check_catalog();
/// Suite names and their expansion; a bare check id is also accepted.
const std::vector<std::string>& suite_names();
std::vector<std::string> checks_in_suite(const std::string& suite);

/// Runs one catalog entry. Unknown ids throw std::invalid_argument.
CheckOutcome run_check(const std::string& id, const CheckConfig& cfg);

/// Runs the configured selection (whole catalog by default), order-stable.
Report run_suites(const CheckConfig& cfg);

std::string report_to_json(const Report& report, bool include_timing = true);
std::string report_to_text(const Report& report);

/// Table exports (canonical Scalar renderings; schema in the README).
std::string characters_table_csv(int n, int n_max = kDefaultCharNMax);
std::string characters_table_json(int n, int n_max = kDefaultCharNMax);
std::string qdim_table_csv(int max_size);
std::string qdim_table_json(int max_size);
std::string w_table_csv(int max_size);
std::string w_table_json(int max_size);
std::string free_energy_json(const FreeEnergyTable& table);

}  // namespace mvv
