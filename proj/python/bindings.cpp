#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ovg/corpus.hpp"
#include "ovg/errors.hpp"
#include "ovg/oracle.hpp"
#include "ovg/overlap_graph.hpp"
#include "ovg/prefix_index.hpp"
#include "ovg/serialize.hpp"

namespace py = pybind11;
using namespace ovg;

namespace {

BuildAlgorithm parse_algo(const std::string& name) {
    if (name == "bsearch") return BuildAlgorithm::bsearch;
    if (name == "trie") return BuildAlgorithm::trie;
    throw validation_error("algo must be 'bsearch' or 'trie', got '" + name + "'");
}

InputFormat parse_format(const std::string& name) {
    if (name == "plain") return InputFormat::plain;
    if (name == "fasta") return InputFormat::fasta;
    throw validation_error("format must be 'plain' or 'fasta', got '" + name + "'");
}

std::optional<std::pair<rank_t, rank_t>> interval_or_none(const Interval& iv) {
    if (iv.empty()) return std::nullopt;
    return std::make_pair(iv.lo, iv.hi);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Compact exact-match overlap graphs over equal-length strings";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const io_error& e) {
            PyErr_SetString(PyExc_OSError, e.what());
        } catch (const format_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const validation_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Alphabet>(m, "Alphabet", "Ordered symbol set defining the sort order")
        .def_static("dna", &Alphabet::dna, "A < C < G < T")
        .def_static("ascii", &Alphabet::ascii, "printable ASCII in byte order")
        .def_static("from_symbols", &Alphabet::from_symbols, py::arg("symbols"),
                    "symbols in the desired order, no duplicates")
        .def_property_readonly("symbols",
                               [](const Alphabet& a) { return std::string(a.symbols()); })
        .def("__len__", &Alphabet::size)
        .def("__contains__",
             [](const Alphabet& a, const std::string& s) {
                 return s.size() == 1 && a.contains(s[0]);
             })
        .def(
            "__eq__", [](const Alphabet& a, const Alphabet& b) { return a == b; },
            py::is_operator())
        .def("__repr__", [](const Alphabet& a) {
            return "Alphabet('" + std::string(a.symbols()) + "')";
        });

    py::class_<SortedCorpus>(m, "Corpus",
                             "Equal-length strings, lexicographically sorted; ranks are 1-based, "
                             "input indices 0-based")
        .def(py::init([](std::vector<std::string> strings, const Alphabet& alphabet) {
                 return SortedCorpus::from_strings(std::move(strings), alphabet);
             }),
             py::arg("strings"), py::arg("alphabet") = Alphabet::dna())
        .def_static(
            "load",
            [](const std::filesystem::path& path, const std::string& format,
               const Alphabet& alphabet) {
                return load_corpus(path, parse_format(format), alphabet);
            },
            py::arg("path"), py::arg("format") = "plain", py::arg("alphabet") = Alphabet::dna())
        .def("__len__", &SortedCorpus::size)
        .def_property_readonly("length", &SortedCorpus::length, "common string length")
        .def_property_readonly("alphabet", &SortedCorpus::alphabet)
        .def(
            "at", [](const SortedCorpus& c, rank_t rank) { return std::string(c.at(rank)); },
            py::arg("rank"), "string at a 1-based rank")
        .def("rank_of_input", &SortedCorpus::rank_of_input, py::arg("input_index"))
        .def("input_index", &SortedCorpus::input_index, py::arg("rank"))
        .def("__repr__", [](const SortedCorpus& c) {
            return "Corpus(n=" + std::to_string(c.size()) +
                   ", length=" + std::to_string(c.length()) + ")";
        });

    py::class_<CompactOverlapGraph>(m, "Graph",
                                    "Per-vertex disjoint weighted rank intervals; edge (i, j) of "
                                    "weight w means strings i and j overlap by length - w")
        .def("__len__", &CompactOverlapGraph::size)
        .def_property_readonly("length", &CompactOverlapGraph::length)
        .def_property_readonly("lambda_", &CompactOverlapGraph::lambda)
        .def(
            "edge_weight",
            [](const CompactOverlapGraph& g, rank_t i, rank_t j) { return g.edge_weight(i, j); },
            py::arg("i"), py::arg("j"), "weight of edge (i, j) by rank, or None")
        .def("out_neighbors", &CompactOverlapGraph::out_neighbors, py::arg("i"),
             "list of (rank, weight), ascending rank")
        .def("out_degree", &CompactOverlapGraph::out_degree, py::arg("i"))
        .def("rank_of_input", &CompactOverlapGraph::rank_of_input, py::arg("input_index"))
        .def("input_index", &CompactOverlapGraph::input_index, py::arg("rank"))
        .def("stats",
             [](const CompactOverlapGraph& g) {
                 const auto s = g.stats();
                 py::dict d;
                 d["n"] = s.n;
                 d["length"] = s.length;
                 d["lambda"] = s.lambda;
                 d["id_bits"] = s.id_bits;
                 d["weight_bits"] = s.weight_bits;
                 d["pieces"] = s.total_pieces;
                 d["max_row_pieces"] = s.max_row_pieces;
                 d["payload_bits"] = s.payload_bits;
                 d["bound_bits"] = s.bound_bits;
                 d["count_bits"] = s.count_bits;
                 return d;
             })
        .def("to_bytes",
             [](const CompactOverlapGraph& g) {
                 const auto bytes = serialize(g);
                 return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
             })
        .def_static(
            "from_bytes",
            [](const py::bytes& blob) {
                const std::string_view view = blob;
                return deserialize(
                    {reinterpret_cast<const std::uint8_t*>(view.data()), view.size()});
            },
            py::arg("blob"))
        .def(
            "save",
            [](const CompactOverlapGraph& g, const std::filesystem::path& path) {
                save_graph(g, path);
            },
            py::arg("path"))
        .def_static(
            "load", [](const std::filesystem::path& path) { return load_graph(path); },
            py::arg("path"))
        .def(
            "__eq__",
            [](const CompactOverlapGraph& a, const CompactOverlapGraph& b) { return a == b; },
            py::is_operator())
        .def("__repr__", [](const CompactOverlapGraph& g) {
            return "Graph(n=" + std::to_string(g.size()) +
                   ", length=" + std::to_string(g.length()) +
                   ", lambda=" + std::to_string(g.lambda()) + ")";
        });

    m.def(
        "build_graph",
        [](const SortedCorpus& corpus, std::uint32_t lambda, const std::string& algo,
           unsigned threads) {
            const auto algorithm = parse_algo(algo);
            py::gil_scoped_release release;
            return build_graph(corpus, lambda, algorithm, threads);
        },
        py::arg("corpus"), py::arg("lambda_"), py::arg("algo") = "trie", py::arg("threads") = 1,
        "build the compact overlap graph for weights 1..lambda_");

    m.def(
        "prefix_interval",
        [](const SortedCorpus& corpus, const std::string& x) {
            return interval_or_none(prefix_interval_bsearch(corpus, x));
        },
        py::arg("corpus"), py::arg("x"),
        "(lo, hi) ranks of strings with prefix x, 1-based inclusive, or None");

    m.def(
        "all_pairs",
        [](const SortedCorpus& corpus, std::uint32_t min_overlap, const std::string& algo,
           unsigned threads) {
            const auto algorithm = parse_algo(algo);
            std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> out;
            py::gil_scoped_release release;
            all_pairs_suffix_prefix(
                corpus, min_overlap,
                [&](std::size_t i, std::size_t j, std::uint32_t len) {
                    out.emplace_back(i, j, len);
                },
                algorithm, threads);
            return out;
        },
        py::arg("corpus"), py::arg("min_overlap"), py::arg("algo") = "trie",
        py::arg("threads") = 1,
        "(input_i, input_j, overlap_length) for every ordered pair overlapping by at least "
        "min_overlap");

    m.def("ov_max", &oracle::ov_max_length, py::arg("x"), py::arg("y"),
          "length of the longest suffix of x that is a prefix of y (brute force)");
    m.def("max_proper_overlap", &oracle::max_proper_overlap, py::arg("x"), py::arg("y"),
          "like ov_max but excluding the full-string match");
}
