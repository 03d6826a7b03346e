#pragma once

#include "subdom/graph.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace subdom {

/// Largest order representable with the 4-byte graph6 size field.
inline constexpr std::size_t graph6_max_order = 258047;

/// Decode failure. record is 1-based within a stream (0 for a standalone
/// record); offset is the byte offset of the fault, relative to the stream
/// start for streamed records and to the record start otherwise.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & message, std::size_t record, std::size_t offset);

    auto record() const noexcept -> std::size_t { return record_; }
    auto offset() const noexcept -> std::size_t { return offset_; }
    auto detail() const noexcept -> const std::string & { return detail_; }

private:
    std::string detail_;
    std::size_t record_;
    std::size_t offset_;
};

struct Graph6Options {
    /// Nonzero padding bits are an error when strict, a warning otherwise.
    bool strict = true;
};

/// Parses one graph6 record (no trailing newline; an optional ">>graph6<<"
/// prefix is accepted). sparse6 and digraph6 input is rejected by name.
/// If warning is non-null it receives any lenient-mode diagnostic.
auto parse_graph6_record(std::string_view line, const Graph6Options & options = {},
        std::string * warning = nullptr) -> Graph;

/// Throws std::length_error above graph6_max_order.
auto write_graph6_record(const Graph & g) -> std::string;

/// One graph: header "n <count>", then "u v" lines, '#' comments.
auto parse_edge_list(std::string_view text) -> Graph;

auto write_edge_list(const Graph & g) -> std::string;

enum class Format { graph6, edge_list };

auto format_from_name(std::string_view name) -> Format;

struct Record {
    std::size_t index = 0;   ///< 1-based
    std::size_t offset = 0;  ///< byte offset of the record in the stream
    std::string raw;         ///< record bytes as read, without the final newline
    Graph graph;
};

/// Lazily decoded sequence of graphs. graph6 sources hold one record per
/// line; edge-list sources start a new record at every "n <count>" header.
/// After a ParseError the stream stays usable and resumes at the next record.
class GraphStream {
public:
    GraphStream(std::istream & in, Format format, Graph6Options options = {});

    /// Next record, or nullopt at end of input. Throws ParseError.
    auto next() -> std::optional<Record>;

    auto format() const noexcept -> Format { return format_; }
    /// Records consumed so far, including malformed ones.
    auto position() const noexcept -> std::size_t { return position_; }
    auto warnings() const noexcept -> const std::vector<std::string> & { return warnings_; }

private:
    auto next_graph6() -> std::optional<Record>;
    auto next_edge_list() -> std::optional<Record>;
    auto read_line(std::string & line) -> bool;

    std::istream * in_;
    Format format_;
    Graph6Options options_;
    std::size_t position_ = 0;
    std::size_t offset_ = 0;
    std::size_t line_offset_ = 0;
    std::optional<std::string> pending_header_;
    std::size_t pending_offset_ = 0;
    std::vector<std::string> warnings_;
};

} // namespace subdom
