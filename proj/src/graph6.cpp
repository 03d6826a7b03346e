#include "subdom/graph6.hpp"

#include <charconv>
#include <istream>
#include <vector>

namespace subdom {

namespace {
    constexpr unsigned char bias = 63;
    constexpr unsigned char max_byte = 126;
    constexpr std::size_t small_order_limit = 62;
    constexpr std::string_view graph6_header = ">>graph6<<";
    constexpr std::string_view sparse6_header = ">>sparse6<<";
    constexpr std::string_view digraph6_header = ">>digraph6<<";

    auto body_length(std::size_t n) -> std::size_t
    {
        auto bits = n * (n == 0 ? 0 : n - 1) / 2;
        return (bits + 5) / 6;
    }

    auto fail(const std::string & what, std::size_t offset) -> ParseError
    {
        return ParseError(what, 0, offset);
    }

    auto sextet(std::string_view s, std::size_t at, std::size_t base) -> unsigned
    {
        auto c = static_cast<unsigned char>(s[at]);
        if (c < bias || c > max_byte)
            throw fail("byte " + std::to_string(c) + " outside graph6 range [63,126]", base + at);
        return static_cast<unsigned>(c - bias);
    }
}

ParseError::ParseError(const std::string & message, std::size_t record, std::size_t offset) :
    std::runtime_error(
            (record != 0 ? "record " + std::to_string(record) + ", " : std::string{})
            + "byte " + std::to_string(offset) + ": " + message),
    detail_(message),
    record_(record),
    offset_(offset)
{
}

auto parse_graph6_record(std::string_view line, const Graph6Options & options, std::string * warning) -> Graph
{
    std::size_t base = 0;
    if (line.starts_with(graph6_header)) {
        line.remove_prefix(graph6_header.size());
        base = graph6_header.size();
    }
    if (line.starts_with(sparse6_header) || line.starts_with(':') || line.starts_with(';'))
        throw fail("sparse6 input is not supported (graph6 only)", base);
    if (line.starts_with(digraph6_header) || line.starts_with('&'))
        throw fail("digraph6 input is not supported (graph6 only)", base);
    if (line.empty())
        throw fail("empty record", base);

    std::size_t n = 0, pos = 0;
    if (static_cast<unsigned char>(line[0]) != max_byte) {
        n = sextet(line, 0, base);
        pos = 1;
    }
    else {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == max_byte)
            throw fail("8-byte size field (n > " + std::to_string(graph6_max_order) + ") is not supported", base + 1);
        if (line.size() < 4)
            throw fail("truncated size field", base + line.size());
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | sextet(line, i, base);
        pos = 4;
    }

    auto expected = body_length(n);
    auto body = line.substr(pos);
    if (body.size() < expected)
        throw fail("truncated record: expected " + std::to_string(expected) + " body bytes for n="
                + std::to_string(n) + ", found " + std::to_string(body.size()), base + line.size());
    if (body.size() > expected)
        throw fail("unexpected trailing bytes after graph6 body", base + pos + expected);

    GraphBuilder b(n);
    std::size_t bit = 0;
    for (std::size_t v = 1; v < n; ++v)
        for (std::size_t u = 0; u < v; ++u, ++bit) {
            auto value = sextet(body, bit / 6, base + pos);
            if ((value >> (5 - bit % 6)) & 1U)
                b.add_edge(u, v);
        }

    if (auto used = bit % 6; used != 0) {
        auto last = sextet(body, expected - 1, base + pos);
        if ((last & ((1U << (6 - used)) - 1)) != 0) {
            std::string message = "nonzero padding bits in final byte";
            if (options.strict)
                throw fail(message, base + pos + expected - 1);
            if (warning)
                *warning = message;
        }
    }
    return std::move(b).build();
}

auto write_graph6_record(const Graph & g) -> std::string
{
    auto n = g.order();
    if (n > graph6_max_order)
        throw std::length_error("graph with " + std::to_string(n) + " vertices exceeds graph6 size field");

    std::string out;
    out.reserve(4 + body_length(n));
    if (n <= small_order_limit)
        out.push_back(static_cast<char>(n + bias));
    else {
        out.push_back(static_cast<char>(max_byte));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + bias));
    }

    unsigned acc = 0;
    std::size_t bit = 0;
    for (std::size_t v = 1; v < n; ++v) {
        const auto & row = g.neighbours(v);
        for (std::size_t u = 0; u < v; ++u, ++bit) {
            acc = (acc << 1) | (row.test(u) ? 1U : 0U);
            if (bit % 6 == 5) {
                out.push_back(static_cast<char>(acc + bias));
                acc = 0;
            }
        }
    }
    if (auto used = bit % 6; used != 0)
        out.push_back(static_cast<char>((acc << (6 - used)) + bias));
    return out;
}

namespace {
    auto content_of(std::string_view line) -> std::string_view
    {
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos)
            return {};
        auto last = line.find_last_not_of(" \t\r");
        return line.substr(first, last - first + 1);
    }

    auto tokens_of(std::string_view content) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < content.size()) {
            auto start = content.find_first_not_of(" \t", i);
            if (start == std::string_view::npos)
                break;
            auto end = content.find_first_of(" \t", start);
            if (end == std::string_view::npos)
                end = content.size();
            out.push_back(content.substr(start, end - start));
            i = end;
        }
        return out;
    }

    auto is_header(std::string_view line) -> bool
    {
        auto tokens = tokens_of(content_of(line));
        return ! tokens.empty() && tokens.front() == "n";
    }

    auto number(std::string_view token, std::size_t offset) -> std::size_t
    {
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size())
            throw fail("expected a non-negative integer, found '" + std::string(token) + "'", offset);
        return value;
    }
}

auto parse_edge_list(std::string_view text) -> Graph
{
    std::optional<GraphBuilder> builder;
    std::size_t offset = 0;
    while (offset < text.size()) {
        auto eol = text.find('\n', offset);
        auto line = text.substr(offset, eol == std::string_view::npos ? std::string_view::npos : eol - offset);
        auto line_offset = offset;
        offset = eol == std::string_view::npos ? text.size() : eol + 1;

        auto content = content_of(line);
        if (content.empty())
            continue;
        auto at = line_offset + static_cast<std::size_t>(content.data() - line.data());
        auto tokens = tokens_of(content);

        if (tokens.front() == "n") {
            if (builder)
                throw fail("second 'n' header; one graph per edge list", at);
            if (tokens.size() != 2)
                throw fail("header must be 'n <count>'", at);
            builder.emplace(number(tokens[1], at));
            continue;
        }
        if (! builder)
            throw fail("missing 'n <count>' header before edges", at);
        if (tokens.size() != 2)
            throw fail("edge line must be 'u v'", at);
        auto u = number(tokens[0], at), v = number(tokens[1], at);
        auto n = builder->order();
        if (u >= n || v >= n)
            throw fail("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range for n="
                    + std::to_string(n), at);
        if (u == v)
            throw fail("self-loop at vertex " + std::to_string(u), at);
        builder->add_edge(u, v);
    }
    if (! builder)
        throw fail("missing 'n <count>' header", text.size());
    return std::move(*builder).build();
}

auto write_edge_list(const Graph & g) -> std::string
{
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

auto format_from_name(std::string_view name) -> Format
{
    if (name == "graph6" || name == "g6")
        return Format::graph6;
    if (name == "edgelist" || name == "edge_list" || name == "edge-list")
        return Format::edge_list;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected graph6 or edgelist)");
}

GraphStream::GraphStream(std::istream & in, Format format, Graph6Options options) :
    in_(&in),
    format_(format),
    options_(options)
{
}

auto GraphStream::read_line(std::string & line) -> bool
{
    if (! std::getline(*in_, line))
        return false;
    line_offset_ = offset_;
    offset_ += line.size() + (in_->eof() ? 0 : 1);
    return true;
}

auto GraphStream::next() -> std::optional<Record>
{
    return format_ == Format::graph6 ? next_graph6() : next_edge_list();
}

auto GraphStream::next_graph6() -> std::optional<Record>
{
    std::string line;
    while (read_line(line)) {
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;

        Record r;
        r.index = ++position_;
        r.offset = line_offset_;
        std::string warning;
        try {
            r.graph = parse_graph6_record(line, options_, &warning);
        }
        catch (const ParseError & e) {
            throw ParseError(e.detail(), r.index, r.offset + e.offset());
        }
        if (! warning.empty())
            warnings_.push_back("record " + std::to_string(r.index) + ": " + warning);
        r.raw = std::move(line);
        return r;
    }
    return std::nullopt;
}

auto GraphStream::next_edge_list() -> std::optional<Record>
{
    std::string raw;
    std::size_t start = 0;
    if (pending_header_) {
        raw = std::move(*pending_header_);
        start = pending_offset_;
        pending_header_.reset();
    }
    else {
        std::string line;
        while (true) {
            if (! read_line(line))
                return std::nullopt;
            auto content = content_of(line);
            if (content.empty())
                continue;
            if (! is_header(line)) {
                ++position_;
                throw ParseError("missing 'n <count>' header before edges", position_,
                        line_offset_ + static_cast<std::size_t>(content.data() - line.data()));
            }
            raw = std::move(line);
            start = line_offset_;
            break;
        }
    }

    std::string line;
    while (read_line(line)) {
        if (is_header(line)) {
            pending_header_ = std::move(line);
            pending_offset_ = line_offset_;
            break;
        }
        raw += '\n';
        raw += line;
    }

    Record r;
    r.index = ++position_;
    r.offset = start;
    try {
        r.graph = parse_edge_list(raw);
    }
    catch (const ParseError & e) {
        throw ParseError(e.detail(), r.index, start + e.offset());
    }
    while (! raw.empty() && (raw.back() == '\n' || raw.back() == '\r'))
        raw.pop_back();
    r.raw = std::move(raw);
    return r;
}

} // namespace subdom
