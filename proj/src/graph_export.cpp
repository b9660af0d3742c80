#include "bratteli/export.hpp"

#include <sstream>

namespace bratteli {

nlohmann::json graph_to_json(const BranchingGraph& g) {
    nlohmann::json levels = nlohmann::json::array();
    nlohmann::json edges = nlohmann::json::array();
    std::size_t offset = 0;
    for (unsigned n = 0; n <= g.level_cap(); ++n) {
        const auto& vs = g.level(n);
        const auto& dims = g.dims_at(n);
        nlohmann::json level = nlohmann::json::array();
        for (std::size_t i = 0; i < vs.size(); ++i)
            level.push_back({{"id", offset + i}, {"payload", vertex_payload_json(vs[i])}, {"dim", to_string(dims[i])}});
        levels.push_back(std::move(level));
        if (n < g.level_cap())
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (const auto& e : g.up_edges(n, i))
                    edges.push_back({offset + i, offset + vs.size() + e.target, e.multiplicity});
        offset += vs.size();
    }
    return {{"name", g.name()}, {"level_cap", g.level_cap()}, {"levels", levels}, {"edges", edges}};
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string graph_to_dot(const BranchingGraph& g) {
    std::ostringstream out;
    out << "digraph \"" << dot_escape(g.name()) << "\" {\n  rankdir=TB;\n";
    std::size_t offset = 0;
    for (unsigned n = 0; n <= g.level_cap(); ++n) {
        const auto& vs = g.level(n);
        out << "  { rank=same;";
        for (std::size_t i = 0; i < vs.size(); ++i) out << " v" << offset + i << ';';
        out << " }\n";
        const auto& dims = g.dims_at(n);
        for (std::size_t i = 0; i < vs.size(); ++i)
            out << "  v" << offset + i << " [label=\"" << dot_escape(vs[i].label()) << "\", dim=\"" << dims[i].get_str()
                << "\"];\n";
        if (n < g.level_cap())
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (const auto& e : g.up_edges(n, i)) {
                    out << "  v" << offset + i << " -> v" << offset + vs.size() + e.target;
                    if (e.multiplicity != 1) out << " [label=\"" << e.multiplicity << "\"]";
                    out << ";\n";
                }
        offset += vs.size();
    }
    out << "}\n";
    return out.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string graph_dims_csv(const BranchingGraph& g) {
    std::ostringstream out;
    out << "level,payload,dim\n";
    for (unsigned n = 0; n <= g.level_cap(); ++n) {
        const auto& vs = g.level(n);
        const auto& dims = g.dims_at(n);
        for (std::size_t i = 0; i < vs.size(); ++i)
            out << n << ',' << csv_field(vertex_payload_json(vs[i]).dump()) << ',' << dims[i].get_str() << '\n';
    }
    return out.str();
}

std::string m_table_csv(const MArray& m) {
    std::ostringstream out;
    out << "n,l,M\n";
    for (unsigned n = 0; n <= m.max_level(); ++n)
        for (unsigned l = 0; l <= n; ++l) out << n << ',' << l << ',' << m.at(n, l).get_str() << '\n';
    return out.str();
}

std::string k_table_csv(const KArray& k) {
    std::ostringstream out;
    out << "n,k,l,K\n";
    for (unsigned n = 0; n <= k.max_level(); ++n)
        k.level(n).for_each([&](unsigned kk, unsigned l, const BigInt& v) {
            out << n << ',' << kk << ',' << l << ',' << v.get_str() << '\n';
        });
    return out.str();
}

}  // namespace bratteli
