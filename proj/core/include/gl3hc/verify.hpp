#pragma once

// Identity registry, seeded case runner, suite driver and JSON reports.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gl3hc/highest.hpp"
#include "gl3hc/params.hpp"

namespace gl3hc {

struct IdentityDescriptor {
    std::string id;
    std::string suite;
    /// Whether the identity is checked separately for the left and right side.
    bool sided;
    /// Meaning of the shape tuple, e.g. "(a, b, n)".
    std::string shape_doc;
    std::string summary;
};

/// The fixed list of identities, in report order.
const std::vector<IdentityDescriptor>& registry();
/// Throws std::invalid_argument for an unknown id.
const IdentityDescriptor& find_identity(std::string_view id);
/// "all" followed by every suite name.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Shapes exercised for an identity within the given bounds.
std::vector<std::vector<std::size_t>> shapes_for(std::string_view id, std::optional<Side> side, std::size_t a_max,
                                                 std::size_t b_max);

struct CaseKey {
    std::string identity_id;
    std::optional<Side> side;
    std::vector<std::size_t> shape;
    std::uint64_t trial = 0;
};

enum class CaseStatus { Pass, Fail, Error };

struct CaseResult {
    std::string identity_id;
    std::optional<Side> side;
    std::vector<std::size_t> shape;
    std::uint64_t seed = 0;
    std::optional<Rational> q;
    std::vector<std::pair<std::string, ParameterSet>> params;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    /// Number of exact comparisons made; all must hold for the case to pass.
    std::size_t checks = 0;
    bool equal = false;
    std::string error;
    std::int64_t elapsed_ms = 0;

    [[nodiscard]] CaseStatus status() const
    {
        return !error.empty() ? CaseStatus::Error : equal ? CaseStatus::Pass : CaseStatus::Fail;
    }
};

/// Run one case from its own seed. Never throws for evaluation problems: pole
/// hits, truncation and cardinality faults are recorded in `error`.
CaseResult run_case(std::string_view id, std::optional<Side> side, const std::vector<std::size_t>& shape,
                    std::uint64_t case_seed_value, const Config& cfg);

struct SuiteOptions {
    std::string suite = "all";
    std::size_t a_max = 2;
    std::size_t b_max = 2;
    std::size_t trials = 10;
    Config cfg;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Ordered list of cases the suite runs.
std::vector<CaseKey> plan_suite(const SuiteOptions& options);
std::vector<CaseKey> plan_identity(std::string_view id, std::size_t a_max, std::size_t b_max, std::size_t trials);

/// Runs cases concurrently; results come back in key order.
std::vector<CaseResult> run_cases(const std::vector<CaseKey>& keys, const Config& cfg, unsigned threads = 0);

struct Report {
    std::string suite;
    SuiteOptions options;
    std::vector<CaseResult> cases;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t error = 0;
};

Report run_suite(const SuiteOptions& options);
Report make_report(std::string suite, const SuiteOptions& options, std::vector<CaseResult> cases);

std::string report_to_json(const Report& report, int indent = 2);
/// Structural check of a report file; on failure `why` names the first problem.
bool validate_report_json(std::string_view text, std::string* why = nullptr);

} // namespace gl3hc
