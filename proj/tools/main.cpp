// Command-line front end: decompose networks into cores, emit Pajek .clu
// partitions and core-size tables, extract k-core subgraphs, build word
// adjacency networks, and benchmark scaling.
//
// Exit codes: 0 success, 1 usage error, 2 input/parse error.

#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cores/bench.hpp"
#include "cores/decompose.hpp"
#include "cores/io.hpp"

namespace {

using namespace cores;

struct CliConfig {
    std::string input;
    std::string format = "auto";  // pajek | edgelist | auto (by extension)
    std::string mode = "auto";    // auto | undirected | in | out | inout
    std::string output;
    bool summary = false;
    std::optional<std::uint32_t> kcore;
    std::string subgraph_output;
    std::optional<std::size_t> vertices;
    std::uint64_t seed = 42;
};

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool wants_pajek(const CliConfig& cfg) {
    if (cfg.format == "pajek") return true;
    if (cfg.format == "edgelist") return false;
    const std::size_t dot = cfg.input.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : lower(cfg.input.substr(dot));
    return ext == ".net" || ext == ".paj" || ext == ".pajek";
}

DegreeMode resolve_mode(const std::string& mode, bool directed) {
    if (mode == "auto") return directed ? DegreeMode::InOut : DegreeMode::Undirected;
    if (mode == "undirected") return DegreeMode::Undirected;
    if (mode == "in") return DegreeMode::In;
    if (mode == "out") return DegreeMode::Out;
    return DegreeMode::InOut;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return in;
}

// Output files are composed in memory first so that no error path can leave
// a partial file behind.
void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw InputError("failed while writing '" + path + "'");
}

void print_summary(const CoreSummary& summary) {
    std::printf("%5s %12s %9s %12s %9s\n", "k", "count", "%", "size", "%");
    for (const CoreSummaryRow& row : summary.rows)
        std::printf("%5u %12zu %9.3f %12zu %9.3f\n", row.k, row.count, row.percent,
                    row.cumulative, row.cumulative_percent);
}

double density(const Graph& g) {
    const double n = static_cast<double>(g.vertex_count());
    const double pairs = g.is_directed() ? n * (n - 1.0) : n * (n - 1.0) / 2.0;
    return pairs > 0.0 ? static_cast<double>(g.line_count()) / pairs : 0.0;
}

int run_decompose(const CliConfig& cfg) {
    const bool pajek = wants_pajek(cfg);
    if (cfg.vertices && pajek) throw UsageError("--vertices applies to edge lists only");
    if (cfg.kcore && cfg.subgraph_output.empty())
        throw UsageError("--kcore needs --subgraph-output");

    std::ifstream in = open_input(cfg.input);
    BuildStats stats;
    LabeledGraph lg;
    if (pajek) {
        lg = parse_pajek(in, LoopPolicy::Ignore, &stats);
    } else {
        // Edge lists carry no directedness marker; the requested degree mode
        // decides how to read them.
        const bool directed = cfg.mode != "auto" && cfg.mode != "undirected";
        lg.graph = parse_edgelist(in, directed, cfg.vertices, LoopPolicy::Ignore, &stats);
    }
    if (stats.loops_ignored > 0)
        std::cerr << "warning: ignored " << stats.loops_ignored << " self-loop line(s)\n";

    const Graph& g = lg.graph;
    const DegreeMode mode = resolve_mode(cfg.mode, g.is_directed());

    const auto begin = std::chrono::steady_clock::now();
    const CoreAssignment assignment = core_decompose(g, mode);
    const auto end = std::chrono::steady_clock::now();

    std::string clu_text;
    if (!cfg.output.empty()) {
        std::ostringstream out;
        write_clu(assignment, out);
        clu_text = std::move(out).str();
    }
    std::string subgraph_text;
    std::size_t sub_n = 0, sub_m = 0;
    if (cfg.kcore) {
        InducedSubgraph sub = k_core_subgraph(g, assignment, *cfg.kcore);
        LabeledGraph sub_lg;
        sub_lg.labels.reserve(sub.original_id.size());
        // Keep the original identities visible: input labels when present,
        // 1-based source ids otherwise.
        for (VertexId v : sub.original_id)
            sub_lg.labels.push_back(lg.has_labels() ? lg.labels[v] : std::to_string(v + 1));
        sub_lg.graph = std::move(sub.graph);
        sub_n = sub_lg.graph.vertex_count();
        sub_m = sub_lg.graph.line_count();
        std::ostringstream out;
        write_pajek(sub_lg, out);
        subgraph_text = std::move(out).str();
    }

    std::printf("vertices: %zu\n", g.vertex_count());
    std::printf("%s: %zu\n", g.is_directed() ? "arcs" : "edges", g.line_count());
    std::printf("density: %.7f\n", density(g));
    std::printf("mode: %s\n", to_string(mode));
    std::printf("decompose-time: %.6f s\n", std::chrono::duration<double>(end - begin).count());
    if (cfg.kcore)
        std::printf("%u-core: %zu vertices, %zu %s\n", *cfg.kcore, sub_n, sub_m,
                    g.is_directed() ? "arcs" : "edges");
    if (cfg.summary) print_summary(summarize(assignment));

    if (!cfg.output.empty()) write_file(cfg.output, clu_text);
    if (cfg.kcore) write_file(cfg.subgraph_output, subgraph_text);
    return 0;
}

int run_wordgraph(const CliConfig& cfg) {
    if (cfg.output.empty()) throw UsageError("wordgraph needs --output");

    std::ifstream in = open_input(cfg.input);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = 0, last = line.size();
        while (first < last && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
        while (last > first && std::isspace(static_cast<unsigned char>(line[last - 1]))) --last;
        if (last > first) words.push_back(line.substr(first, last - first));
    }

    const LabeledGraph lg = word_graph(words);
    std::ostringstream out;
    write_pajek(lg, out);
    write_file(cfg.output, std::move(out).str());

    std::printf("vertices: %zu\n", lg.graph.vertex_count());
    std::printf("edges: %zu\n", lg.graph.line_count());
    return 0;
}

int run_bench(const CliConfig& cfg) {
    const std::vector<BenchScale> m_ladder{
        {100000, 500000}, {100000, 1000000}, {100000, 2000000}, {100000, 4000000}};
    const std::vector<BenchScale> n_ladder{
        {25000, 250000}, {50000, 500000}, {100000, 1000000}, {200000, 2000000}};

    std::cerr << "generating graphs and timing decomposition (best of 3 runs)...\n";
    const auto m_samples = run_ladder(m_ladder, cfg.seed, 3);
    const auto n_samples = run_ladder(n_ladder, cfg.seed + 1000, 3);

    std::ostringstream csv;
    write_bench_csv(csv, "m-scaling", m_samples, true);
    write_bench_csv(csv, "n-scaling", n_samples, false);

    write_bench_report(std::cerr, "m-scaling", m_samples);
    write_bench_report(std::cerr, "n-scaling", n_samples);

    if (cfg.output.empty())
        std::cout << csv.str();
    else
        write_file(cfg.output, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cores decomposition of large networks"};
    app.require_subcommand(1);
    CliConfig cfg;

    CLI::App* decompose = app.add_subcommand("decompose", "Compute core numbers of a network");
    decompose->add_option("--input", cfg.input, "network file")->required();
    decompose->add_option("--format", cfg.format, "input format (default: by extension)")
        ->check(CLI::IsMember({"auto", "pajek", "edgelist"}));
    decompose->add_option("--mode", cfg.mode, "degree mode (auto: undirected/inout)")
        ->check(CLI::IsMember({"auto", "undirected", "in", "out", "inout"}));
    decompose->add_option("--output", cfg.output, "write core numbers as a Pajek .clu partition");
    decompose->add_flag("--summary", cfg.summary, "print the per-k core-size table");
    decompose->add_option("--kcore", cfg.kcore, "extract this k-core as a Pajek network");
    decompose->add_option("--subgraph-output", cfg.subgraph_output,
                          "where to write the extracted k-core");
    decompose->add_option("--vertices", cfg.vertices, "vertex count override for edge lists");

    CLI::App* wordgraph =
        app.add_subcommand("wordgraph", "Build the word adjacency network of a word list");
    wordgraph->add_option("--input", cfg.input, "word list, one word per line")->required();
    wordgraph->add_option("--output", cfg.output, "where to write the Pajek network");

    CLI::App* bench =
        app.add_subcommand("bench", "Time the decomposition on random graph ladders");
    bench->add_option("--seed", cfg.seed, "random generator seed");
    bench->add_option("--output", cfg.output, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (decompose->parsed()) return run_decompose(cfg);
        if (wordgraph->parsed()) return run_wordgraph(cfg);
        if (bench->parsed()) return run_bench(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
