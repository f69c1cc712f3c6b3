#include "posetgen/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace posetgen {

namespace {

std::string edge_lines(int n, const std::vector<Edge>& edges) {
    std::string out = std::to_string(n);
    out.push_back('\n');
    for (auto [i, j] : edges) {
        out += std::to_string(i);
        out.push_back(' ');
        out += std::to_string(j);
        out.push_back('\n');
    }
    return out;
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("key_from_hex: invalid hex digit");
}

} // namespace

std::string to_edge_list(const Dag& g) { return edge_lines(g.size(), g.edges()); }

std::string to_edge_list(const PosetKey& key) { return edge_lines(key.size(), key.relation_pairs()); }

Dag dag_from_edge_list(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
    if (n < 1) throw std::invalid_argument("edge list: vertex count must be positive");
    std::vector<Edge> edges;
    int i = 0, j = 0;
    while (in >> i) {
        if (!(in >> j)) throw std::invalid_argument("edge list: dangling edge endpoint");
        edges.emplace_back(i, j);
    }
    if (!in.eof() && in.fail()) {
        in.clear();
        std::string tail;
        in >> tail;
        if (!tail.empty()) throw std::invalid_argument("edge list: unexpected token '" + tail + "'");
    }
    return Dag::from_edges(n, edges);
}

std::string key_to_hex(const PosetKey& key) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (std::uint8_t byte : key.to_bytes()) {
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xF]);
    }
    return out;
}

PosetKey key_from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("key_from_hex: odd digit count");
    std::vector<std::uint8_t> bytes(hex.size() / 2);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        bytes[i] = static_cast<std::uint8_t>((hex_digit(hex[2 * i]) << 4) | hex_digit(hex[2 * i + 1]));
    }
    return PosetKey::from_bytes(bytes.data(), bytes.size());
}

nlohmann::json poset_to_json(const PosetKey& key, bool include_covers) {
    nlohmann::json j;
    j["n"] = key.size();
    auto pairs = nlohmann::json::array();
    for (auto [a, b] : key.relation_pairs()) pairs.push_back({a, b});
    j["relation"] = std::move(pairs);
    if (include_covers) {
        auto covers = nlohmann::json::array();
        for (auto [a, b] : hasse_edges(key)) covers.push_back({a, b});
        j["covers"] = std::move(covers);
    }
    return j;
}

PosetKey poset_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("relation")) {
        throw std::invalid_argument("poset json: expected fields \"n\" and \"relation\"");
    }
    const int n = j.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("poset json: n must be positive");
    PosetKey key{BitMatrix(n)};
    for (const auto& pair : j.at("relation")) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("poset json: relation entries must be [i, j] pairs");
        }
        const int a = pair[0].get<int>();
        const int b = pair[1].get<int>();
        if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("poset json: pair out of range");
        key.rel.set(a, b);
    }
    if (!key.valid()) throw std::invalid_argument("poset json: relation is not a strict order");
    return key;
}

std::string poset_to_dot_hasse(const PosetKey& key) {
    std::string out = "digraph hasse {\n";
    for (int v = 0; v < key.size(); ++v) {
        out += "  " + std::to_string(v) + ";\n";
    }
    for (auto [a, b] : hasse_edges(key)) {
        out += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
    }
    out += "}\n";
    return out;
}

void write_histogram_csv(std::ostream& out, const SampleHistogram& hist) {
    out << "key_hex,count\n";
    for (const auto& [key, count] : hist.sorted_entries()) {
        out << key_to_hex(key) << ',' << count << '\n';
    }
}

nlohmann::json tv_report(int n, long long steps, long long samples, std::uint64_t num_posets,
                         double tv_empirical) {
    return nlohmann::json{{"n", n},
                          {"m", steps},
                          {"samples", samples},
                          {"M", num_posets},
                          {"tv_empirical", tv_empirical}};
}

void write_state_space(std::ostream& out, const StateSpace& space) {
    const int pairs = ordered_pair_count(space.n);
    std::string bits(static_cast<std::size_t>(pairs), '0');
    for (std::size_t g = 0; g < space.dag_count(); ++g) {
        for (int k = 0; k < pairs; ++k) {
            bits[k] = (space.masks[g] >> k) & 1 ? '1' : '0';
        }
        out << g << ',' << bits << ',' << space.class_of[g] << '\n';
    }
}

template <class T>
void write_matrix_csv(std::ostream& out, const TransitionMatrix<T>& matrix) {
    for (std::size_t r = 0; r < matrix.size; ++r) {
        for (std::size_t c = 0; c < matrix.size; ++c) {
            if (c) out << ',';
            if constexpr (std::is_same_v<T, double>) {
                out << format_double(matrix.at(r, c));
            } else {
                out << matrix.at(r, c); // exact fraction, e.g. 1/12
            }
        }
        out << '\n';
    }
}

template void write_matrix_csv<double>(std::ostream&, const TransitionMatrix<double>&);
template void write_matrix_csv<Rational>(std::ostream&, const TransitionMatrix<Rational>&);

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

} // namespace posetgen
