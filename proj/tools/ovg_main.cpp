// ovg: build, query and verify compact exact-match overlap graphs.
//
// Exit codes: 0 success, 1 invalid input or arguments, 2 I/O failure,
// 3 verification mismatch.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ovg/corpus.hpp"
#include "ovg/errors.hpp"
#include "ovg/oracle.hpp"
#include "ovg/overlap_graph.hpp"
#include "ovg/serialize.hpp"

namespace {

using namespace ovg;

struct CorpusOptions {
    std::string input;
    std::string format = "plain";
    std::string alphabet = "ACGT";
};

struct BuildOptions {
    std::string algo = "trie";
    unsigned threads = 1;
};

void add_corpus_options(CLI::App& cmd, CorpusOptions& opt) {
    cmd.add_option("-i,--input", opt.input, "input strings, one record per string")->required();
    cmd.add_option("--format", opt.format, "input format")
        ->check(CLI::IsMember({"plain", "fasta"}))
        ->capture_default_str();
    cmd.add_option("--alphabet", opt.alphabet,
                   "symbol order as a literal string, or 'ascii' for printable ASCII")
        ->capture_default_str();
}

void add_build_options(CLI::App& cmd, BuildOptions& opt) {
    cmd.add_option("--algo", opt.algo, "prefix-interval backend")
        ->check(CLI::IsMember({"bsearch", "trie"}))
        ->capture_default_str();
    cmd.add_option("--threads", opt.threads, "worker threads for the build")
        ->envname("OVG_THREADS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

Alphabet make_alphabet(const std::string& name) {
    if (name == "ascii") return Alphabet::ascii();
    return Alphabet::from_symbols(name);
}

InputFormat make_format(const std::string& name) {
    return name == "fasta" ? InputFormat::fasta : InputFormat::plain;
}

BuildAlgorithm make_algo(const std::string& name) {
    return name == "bsearch" ? BuildAlgorithm::bsearch : BuildAlgorithm::trie;
}

SortedCorpus load_input(const CorpusOptions& opt, bool verbose) {
    auto corpus = load_corpus(opt.input, make_format(opt.format), make_alphabet(opt.alphabet));
    if (verbose) {
        std::cerr << "loaded " << corpus.size() << " strings of length " << corpus.length()
                  << " from " << opt.input << "\n";
    }
    return corpus;
}

std::string weight_text(const std::optional<weight_t>& w) {
    return w ? "ω=" + std::to_string(*w) : "ABSENT";
}

int cmd_build(const CorpusOptions& in, const BuildOptions& build, std::uint32_t lambda,
              const std::string& output, bool verbose) {
    const auto corpus = load_input(in, verbose);
    const auto start = std::chrono::steady_clock::now();
    const auto graph = build_graph(corpus, lambda, make_algo(build.algo), build.threads);
    const auto wall =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    save_graph(graph, output);
    const auto s = graph.stats();
    std::cout << "n=" << s.n << " length=" << s.length << " lambda=" << s.lambda
              << " pieces=" << s.total_pieces << " payload_bits=" << s.payload_bits
              << " bound_bits=" << s.bound_bits << " algo=" << build.algo
              << " threads=" << build.threads << " wall_ms=" << wall.count() << "\n";
    return 0;
}

int cmd_query(const std::string& graph_path, std::uint64_t i, std::uint64_t j) {
    const auto graph = load_graph(graph_path);
    const auto w = graph.edge_weight(graph.rank_of_input(i), graph.rank_of_input(j));
    std::cout << weight_text(w) << "\n";
    return 0;
}

int cmd_neighbors(const std::string& graph_path, std::uint64_t i) {
    const auto graph = load_graph(graph_path);
    graph.for_each_out_neighbor(graph.rank_of_input(i), [&](rank_t j, weight_t w) {
        std::cout << graph.input_index(j) << '\t' << w << '\n';
    });
    return 0;
}

int cmd_stats(const std::string& graph_path) {
    const auto s = load_graph(graph_path).stats();
    std::cout << "n=" << s.n << "\nlength=" << s.length << "\nlambda=" << s.lambda
              << "\nid_bits=" << s.id_bits << "\nweight_bits=" << s.weight_bits
              << "\npieces=" << s.total_pieces << "\nmax_row_pieces=" << s.max_row_pieces
              << "\npayload_bits=" << s.payload_bits << "\nbound_bits=" << s.bound_bits
              << "\ncount_bits=" << s.count_bits << "\n";
    return 0;
}

int cmd_all_pairs(const CorpusOptions& in, const BuildOptions& build, std::uint32_t min_overlap,
                  const std::string& output, bool drop_self_loops, bool verbose) {
    const auto corpus = load_input(in, verbose);
    std::ofstream file;
    if (!output.empty()) {
        file.open(output, std::ios::trunc);
        if (!file) throw io_error("cannot open " + output + " for writing");
    }
    std::ostream& out = output.empty() ? std::cout : file;
    all_pairs_suffix_prefix(
        corpus, min_overlap,
        [&](std::size_t i, std::size_t j, std::uint32_t len) {
            if (drop_self_loops && i == j) return;
            out << i << '\t' << j << '\t' << len << '\n';
        },
        make_algo(build.algo), build.threads);
    out.flush();
    if (!out) throw io_error("failed writing all-pairs output");
    return 0;
}

int cmd_verify(const CorpusOptions& in, const BuildOptions& build, std::uint32_t lambda,
               bool verbose) {
    const auto corpus = load_input(in, verbose);
    const auto graph = build_graph(corpus, lambda, make_algo(build.algo), build.threads);
    const auto om = oracle::oracle_graph(corpus, lambda);
    const auto n = graph.size();
    for (rank_t i = 1; i <= n; ++i) {
        for (rank_t j = 1; j <= n; ++j) {
            const weight_t want = om.weight(i, j);
            const auto got = graph.edge_weight(i, j);
            if (want != got.value_or(0)) {
                std::cout << "mismatch i=" << graph.input_index(i) << " j=" << graph.input_index(j)
                          << " expected=" << (want ? std::to_string(want) : "ABSENT")
                          << " got=" << weight_text(got) << "\n";
                return 3;
            }
        }
    }
    std::cout << "OK n=" << n << " pairs=" << n * n << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compact exact-match overlap graph of equal-length strings"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "progress details on stderr");

    CorpusOptions build_in;
    BuildOptions build_opt;
    std::uint32_t build_lambda = 0;
    std::string build_out;
    auto* build = app.add_subcommand("build", "build a graph and write it to a file");
    add_corpus_options(*build, build_in);
    add_build_options(*build, build_opt);
    build->add_option("--lambda", build_lambda, "overlap weight threshold (1..length)")->required();
    build->add_option("-o,--output", build_out, "output graph file")->required();

    std::string query_graph;
    std::uint64_t query_i = 0, query_j = 0;
    auto* query = app.add_subcommand("query", "weight of one edge, input-order indices");
    query->add_option("-g,--graph", query_graph, "graph file")->required();
    query->add_option("i", query_i, "source string index (0-based, input order)")->required();
    query->add_option("j", query_j, "target string index (0-based, input order)")->required();

    std::string nb_graph;
    std::uint64_t nb_i = 0;
    auto* neighbors = app.add_subcommand("neighbors", "out-neighbors of one vertex as TSV");
    neighbors->add_option("-g,--graph", nb_graph, "graph file")->required();
    neighbors->add_option("i", nb_i, "source string index (0-based, input order)")->required();

    std::string stats_graph;
    auto* stats = app.add_subcommand("stats", "size and bit accounting of a graph file");
    stats->add_option("-g,--graph", stats_graph, "graph file")->required();

    CorpusOptions ap_in;
    BuildOptions ap_opt;
    std::uint32_t ap_min_overlap = 0;
    std::string ap_out;
    bool ap_no_self = false;
    auto* all_pairs = app.add_subcommand("all-pairs", "suffix-prefix pairs above a length as TSV");
    add_corpus_options(*all_pairs, ap_in);
    add_build_options(*all_pairs, ap_opt);
    all_pairs->add_option("--min-overlap", ap_min_overlap, "smallest overlap length to report")
        ->required();
    all_pairs->add_option("-o,--output", ap_out, "write TSV here instead of stdout");
    all_pairs->add_flag("--no-self-loops", ap_no_self, "omit pairs of a string with itself");

    CorpusOptions verify_in;
    BuildOptions verify_opt;
    std::uint32_t verify_lambda = 0;
    auto* verify = app.add_subcommand("verify", "diff the graph against the brute-force oracle");
    add_corpus_options(*verify, verify_in);
    add_build_options(*verify, verify_opt);
    verify->add_option("--lambda", verify_lambda, "overlap weight threshold (1..length)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the parse error
        return code == 0 ? 0 : 1;
    }

    try {
        if (build->parsed())
            return cmd_build(build_in, build_opt, build_lambda, build_out, verbose);
        if (query->parsed()) return cmd_query(query_graph, query_i, query_j);
        if (neighbors->parsed()) return cmd_neighbors(nb_graph, nb_i);
        if (stats->parsed()) return cmd_stats(stats_graph);
        if (all_pairs->parsed())
            return cmd_all_pairs(ap_in, ap_opt, ap_min_overlap, ap_out, ap_no_self, verbose);
        if (verify->parsed()) return cmd_verify(verify_in, verify_opt, verify_lambda, verbose);
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) { // validation_error and anything unforeseen
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
