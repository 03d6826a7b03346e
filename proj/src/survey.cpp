#include "subdom/survey.hpp"

#include "subdom/invariants.hpp"

#include <atomic>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace subdom {

auto status_name(SolverStatus status) -> std::string_view
{
    switch (status) {
        case SolverStatus::solved: return "solved";
        case SolverStatus::budget_exhausted: return "budget_exhausted";
        case SolverStatus::skipped_isolates: return "skipped_isolates";
        case SolverStatus::skipped_too_large: return "skipped_too_large";
        case SolverStatus::not_requested: return "not_requested";
    }
    return "unknown";
}

namespace {
    template <typename T>
    auto json_or_null(const std::optional<T> & value) -> nlohmann::ordered_json
    {
        return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
    }

    template <typename T>
    auto csv_cell(const std::optional<T> & value) -> std::string
    {
        if (! value)
            return {};
        if constexpr (std::is_same_v<T, bool>)
            return *value ? "true" : "false";
        else
            return std::to_string(*value);
    }
}

auto to_json(const InvariantReport & r) -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    j["record_index"] = r.record_index;
    j["n"] = r.n;
    j["m"] = r.m;
    j["max_degree"] = r.max_degree;
    j["min_degree"] = r.min_degree;
    j["sub_t"] = json_or_null(r.sub_t);
    j["ceil_n_over_delta"] = json_or_null(r.ceil_n_over_delta);
    j["gamma_t"] = json_or_null(r.gamma_t);
    j["tight"] = json_or_null(r.tight);
    j["solver_status"] = status_name(r.solver_status);
    if (r.gamma_t_upper_bound)
        j["gamma_t_upper_bound"] = *r.gamma_t_upper_bound;
    if (! r.certificate.empty())
        j["certificate"] = r.certificate;
    return j;
}

auto csv_header() -> std::string
{
    return "record_index,n,m,max_degree,min_degree,sub_t,ceil_n_over_delta,gamma_t,tight,solver_status";
}

auto to_csv(const InvariantReport & r) -> std::string
{
    return std::to_string(r.record_index) + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ','
        + std::to_string(r.max_degree) + ',' + std::to_string(r.min_degree) + ',' + csv_cell(r.sub_t) + ','
        + csv_cell(r.ceil_n_over_delta) + ',' + csv_cell(r.gamma_t) + ',' + csv_cell(r.tight) + ','
        + std::string(status_name(r.solver_status));
}

auto to_json(const SurveySummary & s) -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    j["total"] = s.total;
    j["solved"] = s.solved;
    j["tight_count"] = s.tight_count;
    j["budget_exhausted"] = s.budget_exhausted;
    j["skipped_isolates"] = s.skipped_isolates;
    j["skipped_too_large"] = s.skipped_too_large;
    j["malformed"] = s.malformed;
    auto & histogram = j["gap_histogram"] = nlohmann::ordered_json::object();
    for (auto [gap, count] : s.gap_histogram)
        histogram[std::to_string(gap)] = count;
    auto & violations = j["violations"] = nlohmann::ordered_json::array();
    for (const auto & v : s.violations)
        violations.push_back({{"record_index", v.record_index}, {"record", v.record}, {"message", v.message}});
    return j;
}

auto analyse(const Graph & g, std::size_t record_index, const SurveyOptions & options) -> Analysis
{
    Analysis a;
    auto & r = a.report;
    auto check = [&](bool ok, const std::string & message) {
        if (options.assertions && ! ok)
            a.violations.push_back(message);
    };

    auto degrees = degree_sequence(g);
    r.record_index = record_index;
    r.n = g.order();
    r.m = g.size();
    r.max_degree = degrees.max_degree();
    r.min_degree = degrees.min_degree();

    if (r.n < 2 || r.min_degree == 0) {
        r.solver_status = SolverStatus::skipped_isolates;
        return a;
    }

    auto chain = bound_chain(g);
    auto sub_t = chain.sub_t;
    r.sub_t = sub_t;
    r.ceil_n_over_delta = chain.order_over_max_degree.ceil();

    auto prefix = degrees.prefix();
    check(prefix[sub_t - 1] < r.n && prefix[sub_t] >= r.n, "sub_t is not the least k with d_1+...+d_k >= n");
    check(sub_t >= 2 && sub_t <= r.n, "sub_t outside [2, n]");
    check(chain.holds(), "sub_t < n/max_degree");
    check(sub_t >= *r.ceil_n_over_delta, "sub_t < ceil(n/max_degree)");

    if (! options.solve)
        return a;
    if (r.n > options.solver.cap) {
        r.solver_status = SolverStatus::skipped_too_large;
        return a;
    }

    auto result = gamma_t_exact(g, options.solver);
    check(result.certificate.valid(), "solver certificate is not a total dominating set");
    check(result.certificate.size == result.gamma_t, "certificate size differs from reported gamma_t");

    if (! result.optimal) {
        r.solver_status = SolverStatus::budget_exhausted;
        r.gamma_t_upper_bound = result.gamma_t;
        check(result.gamma_t >= sub_t, "total dominating set smaller than sub_t");
        return a;
    }

    auto gamma_t = result.gamma_t;
    r.solver_status = SolverStatus::solved;
    r.gamma_t = gamma_t;
    r.tight = gamma_t == sub_t;
    r.certificate = result.certificate.vertices.members();

    check(gamma_t >= sub_t, "gamma_t < sub_t");
    check(bound_chain(g, gamma_t).holds(), "gamma_t >= sub_t >= n/max_degree fails");
    if (r.max_degree == r.n - 1)
        check(gamma_t == 2 && sub_t == 2, "max_degree = n-1 but not gamma_t = sub_t = 2");
    if (gamma_t == 2)
        check(sub_t == 2, "gamma_t = 2 but sub_t != 2");
    return a;
}

namespace {
    auto tally(SurveySummary & summary, const Analysis & a, const Record & record) -> void
    {
        const auto & r = a.report;
        ++summary.total;
        switch (r.solver_status) {
            case SolverStatus::solved:
                ++summary.solved;
                ++summary.gap_histogram[*r.gamma_t - *r.sub_t];
                if (*r.tight)
                    ++summary.tight_count;
                break;
            case SolverStatus::budget_exhausted: ++summary.budget_exhausted; break;
            case SolverStatus::skipped_isolates: ++summary.skipped_isolates; break;
            case SolverStatus::skipped_too_large: ++summary.skipped_too_large; break;
            case SolverStatus::not_requested: break;
        }
        for (const auto & message : a.violations)
            summary.violations.push_back({record.index, record.raw, message});
    }

    auto analyse_batch(const std::vector<Record> & batch, const SurveyOptions & options) -> std::vector<Analysis>
    {
        std::vector<Analysis> out(batch.size());
        if (options.jobs <= 1 || batch.size() <= 1) {
            for (std::size_t i = 0; i < batch.size(); ++i)
                out[i] = analyse(batch[i].graph, batch[i].index, options);
            return out;
        }

        std::vector<std::exception_ptr> errors(batch.size());
        std::atomic<std::size_t> next{0};
        {
            std::vector<std::jthread> workers;
            auto count = std::min<std::size_t>(options.jobs, batch.size());
            for (std::size_t w = 0; w < count; ++w)
                workers.emplace_back([&] {
                    for (auto i = next++; i < batch.size(); i = next++) {
                        try {
                            out[i] = analyse(batch[i].graph, batch[i].index, options);
                        }
                        catch (...) {
                            errors[i] = std::current_exception();
                        }
                    }
                });
        }
        for (const auto & e : errors)
            if (e)
                std::rethrow_exception(e);
        return out;
    }

    template <typename Emit>
    auto drive(GraphStream & stream, const SurveyOptions & options, Emit && emit) -> SurveySummary
    {
        SurveySummary summary;
        std::size_t batch_size = options.jobs <= 1 ? 1 : options.jobs * 8;
        bool exhausted = false;
        while (! exhausted) {
            std::vector<Record> batch;
            std::optional<ParseError> failure;
            while (batch.size() < batch_size) {
                try {
                    auto record = stream.next();
                    if (! record) {
                        exhausted = true;
                        break;
                    }
                    batch.push_back(std::move(*record));
                }
                catch (const ParseError & e) {
                    if (! options.skip_malformed) {
                        failure = e;
                        break;
                    }
                    ++summary.malformed;
                }
            }

            auto analyses = analyse_batch(batch, options);
            for (std::size_t i = 0; i < batch.size(); ++i) {
                tally(summary, analyses[i], batch[i]);
                emit(analyses[i].report, batch[i]);
            }
            if (failure)
                throw *failure;
        }
        return summary;
    }
}

auto survey_stream(GraphStream & stream, const SurveyOptions & options, const ReportSink & sink) -> SurveySummary
{
    return drive(stream, options, [&](const InvariantReport & report, const Record & record) {
        if (sink)
            sink(report, record);
    });
}

auto tightness_filter(GraphStream & stream, const SurveyOptions & options, std::ostream & out) -> SurveySummary
{
    auto solving = options;
    solving.solve = true;
    return drive(stream, solving, [&](const InvariantReport & report, const Record & record) {
        if (report.tight.value_or(false))
            out << record.raw << '\n';
    });
}

namespace {
    auto read_or_skip(GraphStream & stream, const SurveyOptions & options, bool & malformed) -> std::optional<Record>
    {
        try {
            return stream.next();
        }
        catch (const ParseError &) {
            if (! options.skip_malformed)
                throw;
            malformed = true;
            return Record{};
        }
    }
}

auto pair_union_check(GraphStream & first, GraphStream & second, const SurveyOptions & options) -> SurveySummary
{
    SurveySummary summary;
    for (std::size_t index = 1; ; ++index) {
        bool malformed = false;
        auto a = read_or_skip(first, options, malformed);
        auto b = read_or_skip(second, options, malformed);
        if (! a && ! b)
            break;
        if (! a || ! b)
            throw std::invalid_argument("paired streams differ in length at pair " + std::to_string(index));
        if (malformed) {
            ++summary.malformed;
            continue;
        }

        ++summary.total;
        const auto & g = a->graph;
        const auto & h = b->graph;
        auto outside = [](const Graph & x) { return x.order() < 2 || ! is_isolate_free(x); };
        if (outside(g) || outside(h)) {
            ++summary.skipped_isolates;
            continue;
        }
        auto joined = disjoint_union(g, h);
        if (joined.order() > options.solver.cap) {
            ++summary.skipped_too_large;
            continue;
        }

        auto solved_g = gamma_t_exact(g, options.solver);
        auto solved_h = gamma_t_exact(h, options.solver);
        auto solved_union = gamma_t_exact(joined, options.solver);
        if (! solved_g.optimal || ! solved_h.optimal || ! solved_union.optimal) {
            ++summary.budget_exhausted;
            continue;
        }

        auto sub_g = sub_total_domination(degree_sequence(g));
        auto sub_h = sub_total_domination(degree_sequence(h));
        auto sub_union = sub_total_domination(degree_sequence(joined));
        auto gamma_union = solved_union.gamma_t;

        ++summary.solved;
        ++summary.gap_histogram[gamma_union - sub_union];
        if (gamma_union == sub_union)
            ++summary.tight_count;

        if (! options.assertions)
            continue;
        auto record = a->raw + " | " + b->raw;
        auto check = [&](bool ok, const std::string & message) {
            if (! ok)
                summary.violations.push_back({index, record, message});
        };
        check(gamma_union == solved_g.gamma_t + solved_h.gamma_t, "gamma_t(G u H) != gamma_t(G) + gamma_t(H)");
        check(gamma_union >= sub_g + sub_h, "gamma_t(G u H) < sub_t(G) + sub_t(H)");
        check(sub_g + sub_h >= sub_union, "sub_t(G) + sub_t(H) < sub_t(G u H)");
        check(solved_union.certificate.valid(), "union certificate is not a total dominating set");
    }
    return summary;
}

} // namespace subdom
