#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posetgen/chain.hpp"
#include "posetgen/io.hpp"
#include "posetgen/oracle.hpp"
#include "posetgen/sampling.hpp"
#include "posetgen/stats.hpp"

namespace py = pybind11;
using namespace posetgen;

namespace {

std::uint64_t seed_or_entropy(std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

long long steps_or_default(int n, std::optional<long long> steps) {
    if (!steps) return ChainConfig::default_steps(n);
    if (*steps < 0) throw std::invalid_argument("steps must be non-negative");
    return *steps;
}

std::vector<double> exact_tv_curve(int n, std::vector<long long> ms, int guard) {
    StateSpace space = enumerate_state_space(n, guard);
    auto P = build_mcstar_matrix<double>(space, guard);
    auto uniform = uniform_distribution<double>(space.poset_count());

    std::vector<std::size_t> order(ms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ms[a] < ms[b]; });

    std::vector<double> out(ms.size());
    std::vector<double> mu(space.dag_count());
    mu[0] = 1.0;
    long long current = 0;
    for (std::size_t idx : order) {
        if (ms[idx] < 0) throw std::invalid_argument("step counts must be non-negative");
        for (; current < ms[idx]; ++current) mu = multiply_left(mu, P);
        out[idx] = tv_distance_raw(project_to_posets(mu, space), uniform);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Almost-uniform random poset generation via a Metropolis chain over DAGs";
    m.attr("__version__") = "0.1.0";

    py::class_<PosetKey>(m, "Poset", "A labelled poset, stored as its strict order relation.")
        .def_property_readonly("n", &PosetKey::size, "Number of elements")
        .def("relation", &PosetKey::relation_pairs, "All pairs (i, j) with i < j in the order")
        .def("covers", [](const PosetKey& k) { return hasse_edges(k); },
             "Cover pairs (the Hasse diagram edges)")
        .def("less", &PosetKey::less, py::arg("i"), py::arg("j"))
        .def("to_bytes",
             [](const PosetKey& k) {
                 auto b = k.to_bytes();
                 return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
             })
        .def_static("from_bytes",
                    [](const py::bytes& data) {
                        std::string_view view = data;
                        return PosetKey::from_bytes(reinterpret_cast<const std::uint8_t*>(view.data()),
                                                    view.size());
                    },
                    py::arg("data"))
        .def("to_hex", [](const PosetKey& k) { return key_to_hex(k); })
        .def_static("from_hex", [](const std::string& hex) { return key_from_hex(hex); }, py::arg("hex"))
        .def("edge_list", [](const PosetKey& k) { return to_edge_list(k); },
             "Text form: first line n, then one relation pair per line")
        .def("dot", [](const PosetKey& k) { return poset_to_dot_hasse(k); },
             "Graphviz rendering of the Hasse diagram")
        .def("__eq__", [](const PosetKey& a, const PosetKey& b) { return a == b; }, py::is_operator())
        .def("__lt__", [](const PosetKey& a, const PosetKey& b) { return a < b; }, py::is_operator())
        .def("__hash__", [](const PosetKey& k) { return PosetKeyHash{}(k); })
        .def("__repr__", [](const PosetKey& k) {
            std::ostringstream out;
            out << "Poset(n=" << k.size() << ", pairs=" << k.relation_pairs().size() << ")";
            return out.str();
        });

    m.def(
        "generate",
        [](int n, std::optional<long long> steps, std::optional<std::uint64_t> seed) {
            return generate_poset({n, steps_or_default(n, steps), seed_or_entropy(seed)});
        },
        py::arg("n"), py::arg("steps") = py::none(), py::arg("seed") = py::none(),
        "Sample one poset with the m-step Metropolis chain (m defaults to n*n)");

    m.def(
        "sample_counts",
        [](int n, long long count, std::optional<long long> steps, std::uint64_t seed, int jobs) {
            SampleHistogram hist = sample_posets(n, steps_or_default(n, steps), seed, count, jobs);
            return hist.counts;
        },
        py::arg("n"), py::arg("count"), py::arg("steps") = py::none(), py::arg("seed") = 0,
        py::arg("jobs") = 1,
        "Histogram of `count` independent samples, as a dict Poset -> occurrences. "
        "Sample i uses the stream seed derived from (seed, i), so results do not "
        "depend on the worker count.");

    m.def(
        "enumerate_counts",
        [](int n, int guard) {
            StateSpace s = enumerate_state_space(n, guard);
            return std::make_pair(s.dag_count(), s.poset_count());
        },
        py::arg("n"), py::arg("guard") = kEnumerationGuard,
        "(labelled dags, labelled posets) for the given n, by exhaustive enumeration");

    m.def(
        "enumerate_posets",
        [](int n, int guard) { return enumerate_state_space(n, guard).posets; },
        py::arg("n"), py::arg("guard") = kEnumerationGuard,
        "Every labelled poset on n elements, sorted by serialized key");

    m.def(
        "tv_distance",
        [](const std::vector<double>& p, const std::vector<double>& q) { return tv_distance(p, q); },
        py::arg("p"), py::arg("q"), "Total variation distance between two distributions");

    m.def(
        "empirical_tv",
        [](const std::vector<std::uint64_t>& counts, std::uint64_t num_posets) {
            return empirical_tv_from_counts(counts, num_posets);
        },
        py::arg("counts"), py::arg("num_posets"),
        "Plug-in TV between a count vector and the uniform distribution over num_posets categories");

    m.def("exact_tv_curve", &exact_tv_curve, py::arg("n"), py::arg("steps"),
          py::arg("guard") = kMatrixGuard,
          "Exact TV to uniform after each requested step count, from the transition matrix (n <= 4)");

    m.def("default_steps", &ChainConfig::default_steps, py::arg("n"), "The n*n default step budget");

    m.def("derive_seed", &derive_stream_seed, py::arg("base"), py::arg("index"),
          "Seed of the index-th derived stream; generate(n, steps, derive_seed(s, i)) "
          "reproduces sample i of sample_counts(n, ..., seed=s)");
}
