#include "cores/io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace cores {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& message) {
    throw InputError("line " + std::to_string(line_no) + ": " + message);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Whitespace-separated tokens of one line.
std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t begin = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > begin) tokens.push_back(s.substr(begin, i - begin));
    }
    return tokens;
}

bool parse_uint(std::string_view token, std::uint64_t& value) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc{} && ptr == last;
}

bool parse_number(std::string_view token, double& value) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc{} && ptr == last;
}

// getline with 1-based line counting and CRLF tolerance.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        if (!std::getline(in_, line)) return false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++line_no_;
        return true;
    }
    std::size_t line_no() const noexcept { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

}  // namespace

LabeledGraph parse_pajek(std::istream& in, LoopPolicy loop_policy, BuildStats* stats) {
    enum class Section { Vertices, Edges, Arcs };

    LineReader reader(in);
    std::string raw;

    bool have_header = false;
    std::size_t n = 0;
    std::vector<std::string> labels;
    bool any_label = false;
    std::vector<Edge> edges;  // from *Edges sections, 0-based
    std::vector<Edge> arcs;   // from *Arcs sections, 0-based
    bool saw_arcs_section = false;
    Section section = Section::Vertices;

    auto parse_endpoint = [&](std::string_view token) -> VertexId {
        std::uint64_t id = 0;
        if (!parse_uint(token, id))
            parse_fail(reader.line_no(), "expected a vertex id, got '" + std::string(token) + "'");
        if (id < 1 || id > n)
            parse_fail(reader.line_no(),
                       "vertex id " + std::to_string(id) + " out of range [1," + std::to_string(n) + "]");
        return static_cast<VertexId>(id - 1);
    };

    while (reader.next(raw)) {
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '%') continue;

        if (line.front() == '*') {
            auto tokens = split(line);
            const std::string keyword = lower(tokens[0]);
            if (keyword == "*vertices") {
                if (have_header) parse_fail(reader.line_no(), "duplicate *Vertices section");
                if (tokens.size() < 2) parse_fail(reader.line_no(), "*Vertices needs a vertex count");
                std::uint64_t count = 0;
                if (!parse_uint(tokens[1], count))
                    parse_fail(reader.line_no(),
                               "bad vertex count '" + std::string(tokens[1]) + "'");
                n = static_cast<std::size_t>(count);
                labels.assign(n, "");
                have_header = true;
                section = Section::Vertices;
            } else if (keyword == "*edges") {
                if (!have_header) parse_fail(reader.line_no(), "expected *Vertices header first");
                section = Section::Edges;
            } else if (keyword == "*arcs") {
                if (!have_header) parse_fail(reader.line_no(), "expected *Vertices header first");
                section = Section::Arcs;
                saw_arcs_section = true;
            } else {
                parse_fail(reader.line_no(), "unsupported section '" + std::string(tokens[0]) + "'");
            }
            continue;
        }

        if (!have_header) parse_fail(reader.line_no(), "expected *Vertices header");

        if (section == Section::Vertices) {
            // `id "label"`; anything after the closing quote is ignored.
            auto tokens = split(line);
            const VertexId v = parse_endpoint(tokens[0]);
            std::string_view rest = trim(line.substr(tokens[0].size()));  // line is trimmed
            if (!rest.empty()) {
                if (rest.front() != '"')
                    parse_fail(reader.line_no(), "expected a quoted label after the vertex id");
                std::size_t close = rest.find('"', 1);
                if (close == std::string_view::npos)
                    parse_fail(reader.line_no(), "unterminated label");
                labels[v] = std::string(rest.substr(1, close - 1));
            }
            any_label = true;
        } else {
            auto tokens = split(line);
            if (tokens.size() < 2) parse_fail(reader.line_no(), "expected 'u v'");
            const VertexId u = parse_endpoint(tokens[0]);
            const VertexId v = parse_endpoint(tokens[1]);
            for (std::size_t t = 2; t < tokens.size(); ++t) {
                double ignored = 0.0;  // trailing numeric fields (weights, ...) are allowed
                if (!parse_number(tokens[t], ignored))
                    parse_fail(reader.line_no(),
                               "unexpected token '" + std::string(tokens[t]) + "'");
            }
            (section == Section::Edges ? edges : arcs).push_back({u, v});
        }
    }

    if (!have_header) throw InputError("missing *Vertices header");

    const bool directed = saw_arcs_section;
    std::vector<Edge> lines;
    if (directed) {
        lines = std::move(arcs);
        lines.reserve(lines.size() + 2 * edges.size());
        for (const Edge& e : edges) {  // undirected lines become reciprocal arcs
            lines.push_back(e);
            lines.push_back({e.v, e.u});
        }
    } else {
        lines = std::move(edges);
    }

    LabeledGraph lg;
    lg.graph = build_graph(n, lines, directed, loop_policy, stats);
    if (any_label) lg.labels = std::move(labels);
    return lg;
}

Graph parse_edgelist(std::istream& in, bool directed, std::optional<std::size_t> vertex_count,
                     LoopPolicy loop_policy, BuildStats* stats) {
    LineReader reader(in);
    std::string raw;
    std::vector<Edge> lines;
    std::uint64_t max_id = 0;
    bool any = false;

    while (reader.next(raw)) {
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto tokens = split(line);
        if (tokens.size() != 2)
            parse_fail(reader.line_no(), "expected two whitespace-separated integers");
        std::uint64_t u = 0, v = 0;
        if (!parse_uint(tokens[0], u) || !parse_uint(tokens[1], v))
            parse_fail(reader.line_no(), "expected two non-negative integers");
        if (vertex_count && (u >= *vertex_count || v >= *vertex_count))
            parse_fail(reader.line_no(),
                       "vertex id " + std::to_string(std::max(u, v)) +
                           " out of range (vertex count " + std::to_string(*vertex_count) + ")");
        max_id = std::max({max_id, u, v});
        any = true;
        lines.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }

    const std::size_t n = vertex_count ? *vertex_count : (any ? max_id + 1 : 0);
    return build_graph(n, lines, directed, loop_policy, stats);
}

void write_clu(const CoreAssignment& assignment, std::ostream& out) {
    out << "*Vertices " << assignment.core.size() << '\n';
    for (std::uint32_t c : assignment.core) out << c << '\n';
}

void write_pajek(const LabeledGraph& lg, std::ostream& out) {
    const Graph& g = lg.graph;
    const std::size_t n = g.vertex_count();
    out << "*Vertices " << n << '\n';
    if (lg.has_labels()) {
        for (std::size_t v = 0; v < n; ++v) {
            if (lg.labels[v].find('"') != std::string::npos)
                throw InputError("label of vertex " + std::to_string(v + 1) +
                                 " contains a quote and cannot be written");
            out << (v + 1) << " \"" << lg.labels[v] << "\"\n";
        }
    }
    if (g.is_directed()) {
        out << "*Arcs\n";
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v : g.out_neighbors(u)) out << (u + 1) << ' ' << (v + 1) << '\n';
    } else {
        out << "*Edges\n";
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v : g.out_neighbors(u))
                if (u < v) out << (u + 1) << ' ' << (v + 1) << '\n';
    }
}

}  // namespace cores
