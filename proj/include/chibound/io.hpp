#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chibound/colouring.hpp"
#include "chibound/engine.hpp"
#include "chibound/graph.hpp"
#include "chibound/witness.hpp"

namespace chibound::io {

// ---------------------------------------------------------------- graph6 --

inline constexpr long graph6_max_order = 1 << 18;

// One graph6 record; the ">>graph6<<" header and a trailing newline are
// tolerated. Errors carry the byte offset into the original input.
inline Graph parse_graph6(std::string_view text) {
    long base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) {
        text.remove_prefix(header.size());
        base = long(header.size());
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty graph6 record", base);

    auto byte_at = [&](size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw parse_error("graph6 byte out of range 63..126", base + long(i));
        return c - 63;
    };

    size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = byte_at(0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw parse_error("truncated graph6 order", base + long(text.size()));
        n = (long(byte_at(1)) << 12) | (long(byte_at(2)) << 6) | long(byte_at(3));
        pos = 4;
    } else {
        if (text.size() < 8) throw parse_error("truncated graph6 order", base + long(text.size()));
        n = 0;
        for (size_t i = 2; i < 8; ++i) n = (n << 6) | byte_at(i);
        pos = 8;
    }
    if (n >= graph6_max_order)
        throw parse_error("graph6 order " + std::to_string(n) + " exceeds 2^18 - 1", base);

    long bits = n * (n - 1) / 2;
    size_t expected = pos + size_t((bits + 5) / 6);
    if (text.size() < expected)
        throw parse_error("graph6 record too short: expected "
                          + std::to_string(expected) + " bytes",
                          base + long(text.size()));
    if (text.size() > expected)
        throw parse_error("graph6 record too long: expected " + std::to_string(expected)
                          + " bytes",
                          base + long(expected));

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int value = byte_at(pos + size_t(bit / 6));
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    // padding must be zero
    if (bits % 6 != 0) {
        int last = byte_at(text.size() - 1);
        int pad = int(6 - bits % 6);
        if (last & ((1 << pad) - 1))
            throw parse_error("nonzero padding bits", base + long(text.size()) - 1);
    }
    return Graph::from_edges(int(n), edges);
}

inline std::string write_graph6(const Graph& g) {
    long n = g.order();
    if (n >= graph6_max_order)
        throw size_error("write_graph6: order " + std::to_string(n) + " exceeds 2^18 - 1");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(char(((n >> shift) & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | int(g.adjacent(u, int(v)));
            if (++filled == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(char((acc << (6 - filled)) + 63));
    return out;
}

// ---------------------------------------------------------------- DIMACS --

// DIMACS colouring format: "c" comments, one "p edge n m" line, then m lines
// "e u v" with 1-based endpoints. Errors carry the 1-based line number.
inline Graph parse_dimacs(std::string_view text) {
    long line_no = 0;
    long n = -1, m = -1, edges_seen = 0;
    std::vector<std::pair<int, int>> edges;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos
                                                                               : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) {
            if (end == std::string_view::npos) break;
            continue;
        }
        if (line[0] == 'c') continue;
        if (line[0] == 'p') {
            if (n >= 0) throw parse_error("duplicate p line", line_no);
            char kind[16] = {};
            long pn = -1, pm = -1;
            if (std::sscanf(std::string(line).c_str(), "p %15s %ld %ld", kind, &pn, &pm) != 3
                || std::string(kind) != "edge" || pn < 0 || pm < 0)
                throw parse_error("malformed p line, expected 'p edge <n> <m>'", line_no);
            n = pn;
            m = pm;
            continue;
        }
        if (line[0] == 'e') {
            if (n < 0) throw parse_error("edge before p line", line_no);
            long u = -1, v = -1;
            if (std::sscanf(std::string(line).c_str(), "e %ld %ld", &u, &v) != 2)
                throw parse_error("malformed e line", line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("edge endpoint out of range 1.." + std::to_string(n), line_no);
            if (u == v) throw parse_error("self-loop", line_no);
            edges.emplace_back(int(u - 1), int(v - 1));
            ++edges_seen;
            continue;
        }
        throw parse_error("unrecognised line", line_no);
    }
    if (n < 0) throw parse_error("missing p line", line_no);
    if (edges_seen != m)
        throw parse_error("p line promised " + std::to_string(m) + " edges, found "
                          + std::to_string(edges_seen),
                          line_no);
    return Graph::from_edges(int(n), edges);
}

inline std::string write_dimacs(const Graph& g) {
    auto edges = g.edges(); // ascending (u, v) with u < v
    std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(edges.size())
                      + "\n";
    for (auto [u, v] : edges)
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

// ----------------------------------------------------------- certificate --

// Machine-checkable result of a colouring run: the strategy taken, the
// decomposition behind it, the colouring, and the bound being certified.
// Schema is versioned; see the README for the field reference.
struct CertificateDocument {
    int schema = 1;
    int n = 0;
    int omega = 0;
    int k = 0;
    std::string strategy;
    int bound = 0;
    int colours_used = 0;
    std::vector<int> colouring; // colouring[v], 1-based colours
    std::vector<std::pair<std::string, std::vector<int>>> partition;
    std::vector<int> a_order;
    std::vector<int> b_order;
    bool in_class = true;
    std::optional<Witness> witness; // present iff !in_class
};

inline CertificateDocument make_certificate(const Graph& g, const StrategyOutcome& outcome) {
    CertificateDocument doc;
    doc.n = g.order();
    doc.omega = outcome.omega;
    doc.k = outcome.k;
    doc.strategy = strategy_name(outcome.strategy);
    doc.bound = outcome.bound;
    doc.colours_used = outcome.colouring.colours_used;
    doc.colouring = outcome.colouring.colour;
    doc.partition = outcome.partition;
    doc.a_order = outcome.a_order;
    doc.b_order = outcome.b_order;
    doc.in_class = true;
    return doc;
}

inline nlohmann::ordered_json witness_to_json(const Witness& w) {
    return {{"kind", witness_kind_name(w.kind)}, {"vertices", w.vertices}};
}

inline std::string write_certificate(const CertificateDocument& doc) {
    if (doc.colours_used > doc.bound)
        throw input_error("certificate invariant violated: colours_used exceeds bound");
    nlohmann::ordered_json j;
    j["schema"] = doc.schema;
    j["n"] = doc.n;
    j["omega"] = doc.omega;
    j["k"] = doc.k;
    j["strategy"] = doc.strategy;
    j["bound"] = doc.bound;
    j["colours_used"] = doc.colours_used;
    j["colouring"] = doc.colouring;
    nlohmann::ordered_json part = nlohmann::ordered_json::object();
    for (const auto& [name, members] : doc.partition) {
        std::vector<int> sorted = members;
        std::sort(sorted.begin(), sorted.end());
        part[name] = sorted;
    }
    j["partition"] = part;
    j["a_order"] = doc.a_order;
    j["b_order"] = doc.b_order;
    nlohmann::ordered_json check;
    check["in_class"] = doc.in_class;
    if (doc.witness) check["witness"] = witness_to_json(*doc.witness);
    j["class_check"] = check;
    return j.dump(2) + "\n";
}

namespace detail {

template <typename T>
inline T field(const nlohmann::json& j, const char* name) {
    if (!j.contains(name)) throw parse_error(std::string("certificate missing field '") + name
                                             + "'", 1);
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw parse_error(std::string("certificate field '") + name + "' has the wrong type", 1);
    }
}

} // namespace detail

inline CertificateDocument parse_certificate(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("certificate is not valid JSON: ") + e.what(), 1);
    }
    CertificateDocument doc;
    doc.schema = detail::field<int>(j, "schema");
    if (doc.schema != 1) throw parse_error("unsupported certificate schema", 1);
    doc.n = detail::field<int>(j, "n");
    doc.omega = detail::field<int>(j, "omega");
    doc.k = detail::field<int>(j, "k");
    doc.strategy = detail::field<std::string>(j, "strategy");
    if (!strategy_from_name(doc.strategy))
        throw parse_error("certificate field 'strategy' is not a known strategy id", 1);
    doc.bound = detail::field<int>(j, "bound");
    doc.colours_used = detail::field<int>(j, "colours_used");
    doc.colouring = detail::field<std::vector<int>>(j, "colouring");
    if (doc.colours_used > doc.bound)
        throw parse_error("certificate field 'colours_used' exceeds 'bound'", 1);
    if (int(doc.colouring.size()) != doc.n)
        throw parse_error("certificate field 'colouring' does not match 'n'", 1);
    std::vector<bool> seen(size_t(std::max(doc.colours_used, 0)) + 1, false);
    for (int c : doc.colouring) {
        if (c < 1 || c > doc.colours_used)
            throw parse_error("certificate field 'colouring' has colours outside "
                              "1..colours_used", 1);
        seen[size_t(c)] = true;
    }
    for (int c = 1; c <= doc.colours_used; ++c)
        if (!seen[size_t(c)])
            throw parse_error("certificate field 'colours_used' counts an unused colour", 1);
    if (j.contains("partition")) {
        const auto& part = j.at("partition");
        if (!part.is_object()) throw parse_error("certificate field 'partition' must be an object",
                                                 1);
        for (auto it = part.begin(); it != part.end(); ++it) {
            std::vector<int> members;
            try {
                members = it.value().get<std::vector<int>>();
            } catch (const nlohmann::json::exception&) {
                throw parse_error("certificate partition cell '" + it.key()
                                  + "' must be a vertex list", 1);
            }
            if (!std::is_sorted(members.begin(), members.end()))
                throw parse_error("certificate partition cell '" + it.key()
                                  + "' is not ascending", 1);
            doc.partition.emplace_back(it.key(), std::move(members));
        }
    }
    doc.a_order = detail::field<std::vector<int>>(j, "a_order");
    doc.b_order = detail::field<std::vector<int>>(j, "b_order");
    const auto& check = j.contains("class_check") ? j.at("class_check") : nlohmann::json();
    if (!check.is_object()) throw parse_error("certificate missing field 'class_check'", 1);
    doc.in_class = detail::field<bool>(check, "in_class");
    if (check.contains("witness")) {
        const auto& w = check.at("witness");
        Witness witness;
        std::string kind = detail::field<std::string>(w, "kind");
        bool found = false;
        for (WitnessKind wk : {WitnessKind::Diamond, WitnessKind::P2UnionP4, WitnessKind::Triangle,
                               WitnessKind::P4, WitnessKind::Clique})
            if (kind == witness_kind_name(wk)) {
                witness.kind = wk;
                found = true;
            }
        if (!found) throw parse_error("certificate witness field 'kind' unknown", 1);
        witness.vertices = detail::field<std::vector<int>>(w, "vertices");
        doc.witness = std::move(witness);
    }
    return doc;
}

inline std::string verdict_to_json(const MembershipVerdict& verdict) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["in_class"] = verdict.in_class;
    if (verdict.witness) j["witness"] = witness_to_json(*verdict.witness);
    return j.dump(2) + "\n";
}

} // namespace chibound::io
