#include "sumgraph/labelling.hpp"

#include <algorithm>
#include <map>

#include "sumgraph/error.hpp"

namespace sumgraph {

void validate_labelling(const Labelling& lab) {
    for (const auto& e : lab.labels) require_valid(lab.spec, e);
    if (!lab.relaxed) {
        std::vector<Element> sorted = lab.labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("DistinctnessViolated", "non-relaxed labelling has repeated labels");
    }
}

namespace {

std::map<Element, int> support_of(const Labelling& lab) {
    std::map<Element, int> sup;
    for (int i = 0; i < lab.size(); ++i)
        sup.emplace(lab.labels[i], i);  // keeps the first witness vertex
    return sup;
}

}  // namespace

Graph induced_graph(const Labelling& lab) {
    validate_labelling(lab);
    auto sup = support_of(lab);
    const bool comm = lab.spec.commutative();
    Graph g(lab.size());
    for (int i = 0; i < lab.size(); ++i) {
        for (int j = i + 1; j < lab.size(); ++j) {
            bool adj = sup.count(op(lab.spec, lab.labels[i], lab.labels[j])) > 0;
            if (!adj && !comm)
                adj = sup.count(op(lab.spec, lab.labels[j], lab.labels[i])) > 0;
            if (adj) g.set_edge(i, j);
        }
    }
    return g;
}

Verdict verify(const Labelling& lab, const Graph& target) {
    if (lab.size() != target.n())
        throw Error("SizeMismatch", "labelling has " + std::to_string(lab.size()) +
                                        " labels for a graph on " + std::to_string(target.n()) +
                                        " vertices");
    validate_labelling(lab);
    auto sup = support_of(lab);
    const bool comm = lab.spec.commutative();
    Verdict v;
    for (int i = 0; i < lab.size(); ++i) {
        for (int j = i + 1; j < lab.size(); ++j) {
            Element s = op(lab.spec, lab.labels[i], lab.labels[j]);
            auto it = sup.find(s);
            if (it == sup.end() && !comm) {
                s = op(lab.spec, lab.labels[j], lab.labels[i]);
                it = sup.find(s);
            }
            bool induced = it != sup.end();
            bool wanted = target.edge(i, j);
            if (induced && !wanted)
                v.spurious_edges.push_back({i, j, s, it->second});
            else if (!induced && wanted)
                v.missing_edges.emplace_back(i, j);
        }
    }
    v.ok = v.missing_edges.empty() && v.spurious_edges.empty();
    return v;
}

bool is_strong(const Labelling& lab) {
    validate_labelling(lab);
    auto sup = support_of(lab);
    for (const auto& l : lab.labels)
        if (sup.count(op(lab.spec, l, l))) return false;
    return true;
}

bool check_sum_iso(const Labelling& lab_v, const Labelling& lab_w, const std::vector<int>& f) {
    if (lab_v.relaxed || lab_w.relaxed)
        throw Error("InvalidParameter", "sum isomorphism is defined for non-relaxed labellings");
    int n = lab_v.size();
    if (lab_w.size() != n || static_cast<int>(f.size()) != n)
        throw Error("NotBijective", "vertex map must be a bijection between equal-size labellings");
    std::vector<char> hit(n, 0);
    for (int x : f) {
        if (x < 0 || x >= n || hit[x]) throw Error("NotBijective", "vertex map is not a bijection");
        hit[x] = 1;
    }
    validate_labelling(lab_v);
    validate_labelling(lab_w);
    auto sup_v = support_of(lab_v);
    // f is defined only on the source support: constrain exactly the ordered
    // pairs whose composition lands back in the support
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Element s = op(lab_v.spec, lab_v.labels[i], lab_v.labels[j]);
            auto it = sup_v.find(s);
            if (it == sup_v.end()) continue;
            Element image_of_sum = lab_w.labels[f[it->second]];
            Element composed = op(lab_w.spec, lab_w.labels[f[i]], lab_w.labels[f[j]]);
            if (!(image_of_sum == composed)) return false;
        }
    }
    // and f must carry the induced edge set onto the other induced edge set
    Graph gv = induced_graph(lab_v);
    Graph gw = induced_graph(lab_w);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (gv.edge(i, j) != gw.edge(f[i], f[j])) return false;
    return true;
}

std::pair<MagmaSpec, Labelling> universal_magma(const Graph& g) {
    int n = g.n();
    if (n < 1) throw Error("InvalidParameter", "universal magma needs at least one vertex");
    int size = n + 1;  // vertices plus the sink element
    std::vector<int> table(static_cast<size_t>(size) * size, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.edge(a, b)) table[a * size + b] = 0;  // fixed image vertex v0
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    names.push_back("*");
    MagmaSpec spec = MagmaSpec::table_magma(size, std::move(table), std::move(names));
    Labelling lab{spec, {}, false};
    for (int i = 0; i < n; ++i) lab.labels.emplace_back(BigInt(i));
    return {spec, lab};
}

}  // namespace sumgraph
