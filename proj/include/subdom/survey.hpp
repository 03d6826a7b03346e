#pragma once

#include "subdom/graph6.hpp"
#include "subdom/solver.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace subdom {

enum class SolverStatus {
    solved,
    budget_exhausted,
    skipped_isolates,
    skipped_too_large,
    not_requested,
};

auto status_name(SolverStatus status) -> std::string_view;

struct InvariantReport {
    std::size_t record_index = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;
    /// Absent exactly when the graph is outside the theory (isolates, n < 2).
    std::optional<std::size_t> sub_t;
    std::optional<std::size_t> ceil_n_over_delta;
    std::optional<std::size_t> gamma_t;
    /// gamma_t == sub_t; present iff solved.
    std::optional<bool> tight;
    SolverStatus solver_status = SolverStatus::not_requested;
    /// Best total dominating set found when the budget ran out.
    std::optional<std::size_t> gamma_t_upper_bound;
    std::vector<Vertex> certificate;
};

auto to_json(const InvariantReport & report) -> nlohmann::ordered_json;
auto csv_header() -> std::string;
auto to_csv(const InvariantReport & report) -> std::string;

struct Violation {
    std::size_t record_index = 0;
    std::string record;
    std::string message;
};

struct SurveySummary {
    std::size_t total = 0;
    std::size_t solved = 0;
    std::size_t tight_count = 0;
    std::size_t budget_exhausted = 0;
    std::size_t skipped_isolates = 0;
    std::size_t skipped_too_large = 0;
    std::size_t malformed = 0;
    /// gamma_t - sub_t over solved graphs.
    std::map<std::size_t, std::size_t> gap_histogram;
    std::vector<Violation> violations;
};

auto to_json(const SurveySummary & summary) -> nlohmann::ordered_json;

struct SurveyOptions {
    SolverOptions solver;
    /// Run the exact solver; otherwise reports carry invariants only.
    bool solve = true;
    /// Check every proved relation per graph and record violations.
    bool assertions = true;
    /// Count and skip undecodable records instead of rethrowing ParseError.
    bool skip_malformed = false;
    /// Worker threads for per-graph work; output order is unaffected.
    unsigned jobs = 1;
};

/// Per-graph analysis with the relation checks applied.
struct Analysis {
    InvariantReport report;
    std::vector<std::string> violations;
};

auto analyse(const Graph & g, std::size_t record_index, const SurveyOptions & options) -> Analysis;

using ReportSink = std::function<void(const InvariantReport &, const Record &)>;

/// One report per record, delivered to sink in input order.
auto survey_stream(GraphStream & stream, const SurveyOptions & options, const ReportSink & sink = {})
    -> SurveySummary;

/// Writes the raw bytes of every record with gamma_t == sub_t, one per line.
auto tightness_filter(GraphStream & stream, const SurveyOptions & options, std::ostream & out)
    -> SurveySummary;

/// For each zipped pair (G, H) checks gamma_t(G u H) = gamma_t(G) + gamma_t(H)
/// and gamma_t(G u H) >= sub_t(G) + sub_t(H) >= sub_t(G u H). Streams of
/// different lengths are an input error (std::invalid_argument).
auto pair_union_check(GraphStream & first, GraphStream & second, const SurveyOptions & options)
    -> SurveySummary;

} // namespace subdom
