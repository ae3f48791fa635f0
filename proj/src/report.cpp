#include "sumgraph/report.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "sumgraph/error.hpp"

namespace sumgraph {

using nlohmann::json;

namespace {

json bigint_to_json(const BigInt& x) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi) return static_cast<long long>(x);
    return x.str();
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw Error("BadJson", "expected integer or integer string");
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string emit_report(const Graph& g, const std::optional<Labelling>& labelling,
                        ReportFormat format) {
    if (labelling && labelling->size() != g.n())
        throw Error("SizeMismatch", "labelling does not cover the graph");
    if (format == ReportFormat::Dot) {
        std::ostringstream out;
        out << "graph G {\n";
        for (int i = 0; i < g.n(); ++i) {
            std::string name = labelling ? labelling->labels[i].render(labelling->spec)
                                         : std::to_string(i);
            out << "  v" << i << " [label=\"" << dot_escape(name) << "\"];\n";
        }
        for (auto [i, j] : g.edges()) out << "  v" << i << " -- v" << j << ";\n";
        out << "}\n";
        return out.str();
    }
    json j;
    j["schema_version"] = 1;
    j["n"] = g.n();
    j["edges"] = json::array();
    for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
    if (labelling) {
        j["magma"] = magma_to_json(labelling->spec);
        j["relaxed"] = labelling->relaxed;
        j["labels"] = json::array();
        for (const auto& e : labelling->labels)
            j["labels"].push_back(element_to_json(labelling->spec, e));
    }
    return j.dump(2) + "\n";
}

json graph_to_json(const Graph& g) {
    json j;
    j["schema_version"] = 1;
    j["n"] = g.n();
    j["edges"] = json::array();
    for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
    return j;
}

Graph graph_from_json(const json& j) {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.set_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

json magma_to_json(const MagmaSpec& spec) {
    json j;
    switch (spec.kind) {
        case MagmaKind::IntAdd: j["kind"] = "int-add"; break;
        case MagmaKind::NatAdd: j["kind"] = "nat-add"; break;
        case MagmaKind::AbsDiff: j["kind"] = "abs-diff"; break;
        case MagmaKind::ModAdd:
            j["kind"] = "mod-add";
            j["modulus"] = bigint_to_json(spec.modulus);
            break;
        case MagmaKind::ModMulUnits:
            j["kind"] = "mod-mul-units";
            j["modulus"] = bigint_to_json(spec.modulus);
            break;
        case MagmaKind::AbelianProduct: {
            j["kind"] = "abelian-product";
            j["moduli"] = json::array();
            for (const auto& m : spec.moduli) j["moduli"].push_back(bigint_to_json(m));
            break;
        }
        case MagmaKind::SetMagma: {
            j["kind"] = "set-magma";
            j["universe"] = spec.universe;
            const char* names[] = {"union", "intersection", "symdiff",
                                   "complement-union", "complement-intersection"};
            j["set_op"] = names[static_cast<int>(spec.set_op)];
            break;
        }
        case MagmaKind::TableMagma:
            j["kind"] = "table-magma";
            j["size"] = spec.table_size;
            j["table"] = spec.table;
            if (!spec.table_names.empty()) j["names"] = spec.table_names;
            break;
    }
    return j;
}

MagmaSpec magma_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "int-add") return MagmaSpec::int_add();
    if (kind == "nat-add") return MagmaSpec::nat_add();
    if (kind == "abs-diff") return MagmaSpec::abs_diff();
    if (kind == "mod-add") return MagmaSpec::mod_add(bigint_from_json(j.at("modulus")));
    if (kind == "mod-mul-units") return MagmaSpec::mod_mul_units(bigint_from_json(j.at("modulus")));
    if (kind == "abelian-product") {
        std::vector<BigInt> moduli;
        for (const auto& m : j.at("moduli")) moduli.push_back(bigint_from_json(m));
        return MagmaSpec::abelian(std::move(moduli));
    }
    if (kind == "set-magma") {
        std::string op = j.at("set_op").get<std::string>();
        SetOp so;
        if (op == "union") so = SetOp::Union;
        else if (op == "intersection") so = SetOp::Intersection;
        else if (op == "symdiff") so = SetOp::SymDiff;
        else if (op == "complement-union") so = SetOp::ComplementUnion;
        else if (op == "complement-intersection") so = SetOp::ComplementIntersection;
        else throw Error("BadJson", "unknown set op " + op);
        return MagmaSpec::set_magma(j.at("universe").get<int>(), so);
    }
    if (kind == "table-magma") {
        std::vector<std::string> names;
        if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
        return MagmaSpec::table_magma(j.at("size").get<int>(),
                                      j.at("table").get<std::vector<int>>(), std::move(names));
    }
    throw Error("BadJson", "unknown magma kind " + kind);
}

json element_to_json(const MagmaSpec& spec, const Element& e) {
    switch (spec.kind) {
        case MagmaKind::AbelianProduct: {
            json arr = json::array();
            for (const auto& x : e.tuple()) arr.push_back(bigint_to_json(x));
            return arr;
        }
        case MagmaKind::SetMagma: {
            json arr = json::array();  // sorted member list
            for (int i = 0; i < spec.universe; ++i)
                if (e.bits() >> i & 1) arr.push_back(i + 1);
            return arr;
        }
        default: return bigint_to_json(e.num());
    }
}

Element element_from_json(const MagmaSpec& spec, const json& j) {
    switch (spec.kind) {
        case MagmaKind::AbelianProduct: {
            std::vector<BigInt> t;
            for (const auto& x : j) t.push_back(bigint_from_json(x));
            return Element(std::move(t));
        }
        case MagmaKind::SetMagma: {
            uint64_t bits = 0;
            for (const auto& x : j) {
                int member = x.get<int>();
                if (member < 1 || member > spec.universe)
                    throw Error("BadJson", "set member out of universe");
                bits |= uint64_t{1} << (member - 1);
            }
            return Element::subset(bits);
        }
        default: return Element(bigint_from_json(j));
    }
}

json labelling_to_json(const Labelling& lab, const std::optional<Graph>& graph) {
    json j;
    j["schema_version"] = 1;
    j["magma"] = magma_to_json(lab.spec);
    j["relaxed"] = lab.relaxed;
    j["labels"] = json::array();
    for (const auto& e : lab.labels) j["labels"].push_back(element_to_json(lab.spec, e));
    if (graph) j["graph"] = graph_to_json(*graph);
    return j;
}

Labelling labelling_from_json(const json& j) {
    Labelling lab;
    lab.spec = magma_from_json(j.at("magma"));
    lab.relaxed = j.value("relaxed", false);
    for (const auto& e : j.at("labels")) lab.labels.push_back(element_from_json(lab.spec, e));
    return lab;
}

json verdict_to_json(const Verdict& v, const Labelling& lab) {
    json j;
    j["ok"] = v.ok;
    j["missing_edges"] = json::array();
    for (auto [a, b] : v.missing_edges) j["missing_edges"].push_back({a, b});
    j["spurious_edges"] = json::array();
    for (const auto& s : v.spurious_edges) {
        json e;
        e["u"] = s.u;
        e["v"] = s.v;
        e["sum"] = element_to_json(lab.spec, s.sum);
        e["witness_vertex"] = s.witness_vertex;
        j["spurious_edges"].push_back(e);
    }
    return j;
}

MagmaSpec parse_magma_name(const std::string& name) {
    std::string low;
    for (char c : name) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == "z") return MagmaSpec::int_add();
    if (low == "n") return MagmaSpec::nat_add();
    if (low == "absdiff") return MagmaSpec::abs_diff();
    if (low.rfind("set", 0) == 0) {
        auto colon = low.find(':');
        if (colon == std::string::npos)
            throw Error("InvalidParameter", "set magma needs set<s>:<op>");
        int s = std::stoi(low.substr(3, colon - 3));
        std::string op = low.substr(colon + 1);
        if (op == "union") return MagmaSpec::set_magma(s, SetOp::Union);
        if (op == "intersection") return MagmaSpec::set_magma(s, SetOp::Intersection);
        if (op == "symdiff") return MagmaSpec::set_magma(s, SetOp::SymDiff);
        if (op == "complement-union") return MagmaSpec::set_magma(s, SetOp::ComplementUnion);
        if (op == "complement-intersection")
            return MagmaSpec::set_magma(s, SetOp::ComplementIntersection);
        throw Error("InvalidParameter", "unknown set op '" + op + "'");
    }
    if (low.size() > 1 && (low[0] == 'z' || low[0] == 'u')) {
        bool units = low[0] == 'u';
        std::string rest = low.substr(1);
        std::vector<BigInt> moduli;
        std::stringstream ss(rest);
        std::string part;
        while (std::getline(ss, part, 'x')) {
            if (part.empty()) throw Error("InvalidParameter", "bad magma name '" + name + "'");
            moduli.emplace_back(part);
        }
        if (units) {
            if (moduli.size() != 1) throw Error("InvalidParameter", "units magma takes one modulus");
            return MagmaSpec::mod_mul_units(moduli[0]);
        }
        if (moduli.size() == 1) return MagmaSpec::mod_add(moduli[0]);
        return MagmaSpec::abelian(std::move(moduli));
    }
    throw Error("InvalidParameter", "unknown magma '" + name + "'");
}

namespace {

std::vector<std::string> split_top_level(const std::string& text) {
    // split on commas that are not inside (...) or {...}
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

}  // namespace

std::vector<Element> parse_labels(const MagmaSpec& spec, const std::string& text) {
    std::vector<Element> out;
    for (const std::string& tok : split_top_level(text)) {
        if (tok.empty()) continue;
        if (tok.front() == '(') {
            if (tok.back() != ')') throw Error("InvalidParameter", "unbalanced tuple " + tok);
            std::vector<BigInt> t;
            std::stringstream ss(tok.substr(1, tok.size() - 2));
            std::string part;
            while (std::getline(ss, part, ','))
                if (!part.empty()) t.emplace_back(part);
            out.emplace_back(std::move(t));
        } else if (tok.front() == '{') {
            if (tok.back() != '}') throw Error("InvalidParameter", "unbalanced set " + tok);
            uint64_t bits = 0;
            std::stringstream ss(tok.substr(1, tok.size() - 2));
            std::string part;
            while (std::getline(ss, part, ',')) {
                if (part.empty()) continue;
                int member = std::stoi(part);
                if (member < 1 || member > spec.universe)
                    throw Error("InvalidParameter", "set member out of universe in " + tok);
                bits |= uint64_t{1} << (member - 1);
            }
            out.push_back(Element::subset(bits));
        } else {
            out.emplace_back(BigInt(tok));
        }
    }
    return out;
}

}  // namespace sumgraph
