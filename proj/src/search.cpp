#include "sumgraph/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "sumgraph/error.hpp"

namespace sumgraph {

namespace {

constexpr int kMaxValues = 4096;

// Finite value space shared by all search domains: values are dense ids,
// compose() returns an id or -1 for "outside the domain".
struct ValueSpace {
    DomainKind kind;
    long bound = 0;
    int count = 0;
    std::vector<Element> elements;       // FiniteMagma carrier by id
    std::vector<int16_t> table;          // FiniteMagma composition
    const MagmaSpec* magma = nullptr;
    std::vector<int> domain_order;       // candidate ids in assignment order
    std::vector<int> first_vertex_ids;   // symmetry-reduced candidates

    int compose(int a, int b) const {
        switch (kind) {
            case DomainKind::IntRadius: {
                long v = (a - bound) + (b - bound);
                return (v < -bound || v > bound) ? -1 : static_cast<int>(v + bound);
            }
            case DomainKind::NatMax: {
                long v = (a + 1) + (b + 1);
                return v > bound ? -1 : static_cast<int>(v - 1);
            }
            case DomainKind::Mod:
                return static_cast<int>((a + b) % bound);
            case DomainKind::FiniteMagma:
                return table[static_cast<size_t>(a) * count + b];
        }
        return -1;
    }

    Element element(int id) const {
        switch (kind) {
            case DomainKind::IntRadius: return Element(BigInt(id - bound));
            case DomainKind::NatMax: return Element(BigInt(id + 1));
            case DomainKind::Mod: return Element(BigInt(id));
            case DomainKind::FiniteMagma: return elements[id];
        }
        return Element();
    }
};

ValueSpace make_value_space(const SearchProblem& p) {
    ValueSpace vs;
    vs.kind = p.domain;
    vs.bound = p.bound;
    switch (p.domain) {
        case DomainKind::IntRadius: {
            if (p.bound < 1) throw Error("InvalidParameter", "radius must be >= 1");
            vs.count = static_cast<int>(2 * p.bound + 1);
            // ascending absolute value, positive before negative
            if (!p.forbid_zero) vs.domain_order.push_back(static_cast<int>(p.bound));
            for (long v = 1; v <= p.bound; ++v) {
                vs.domain_order.push_back(static_cast<int>(p.bound + v));
                vs.domain_order.push_back(static_cast<int>(p.bound - v));
            }
            // negation symmetry: first label nonnegative
            if (!p.forbid_zero) vs.first_vertex_ids.push_back(static_cast<int>(p.bound));
            for (long v = 1; v <= p.bound; ++v)
                vs.first_vertex_ids.push_back(static_cast<int>(p.bound + v));
            break;
        }
        case DomainKind::NatMax: {
            if (p.bound < 1) throw Error("InvalidParameter", "label maximum must be >= 1");
            vs.count = static_cast<int>(p.bound);
            for (int i = 0; i < vs.count; ++i) vs.domain_order.push_back(i);
            vs.first_vertex_ids = vs.domain_order;
            break;
        }
        case DomainKind::Mod: {
            if (p.bound < 2) throw Error("InvalidParameter", "modulus must be >= 2");
            vs.count = static_cast<int>(p.bound);
            for (int i = p.forbid_zero ? 1 : 0; i < vs.count; ++i) vs.domain_order.push_back(i);
            // unit-multiplication symmetry: the orbit of x is determined by
            // gcd(x, m), so the first label can be a divisor of m (or 0)
            if (!p.forbid_zero) vs.first_vertex_ids.push_back(0);
            for (long d = 1; d < p.bound; ++d)
                if (p.bound % d == 0) vs.first_vertex_ids.push_back(static_cast<int>(d));
            break;
        }
        case DomainKind::FiniteMagma: {
            if (!p.magma.finite()) throw Error("InfiniteCarrier", "finite domain required");
            vs.elements = enumerate_carrier(p.magma);
            vs.count = static_cast<int>(vs.elements.size());
            if (vs.count > kMaxValues) throw Error("InvalidParameter", "carrier too large to search");
            vs.magma = &p.magma;
            std::map<Element, int> ids;
            for (int i = 0; i < vs.count; ++i) ids[vs.elements[i]] = i;
            vs.table.resize(static_cast<size_t>(vs.count) * vs.count);
            for (int a = 0; a < vs.count; ++a)
                for (int b = 0; b < vs.count; ++b) {
                    Element r = op(p.magma, vs.elements[a], vs.elements[b]);
                    auto it = ids.find(r);
                    vs.table[static_cast<size_t>(a) * vs.count + b] =
                        it == ids.end() ? int16_t{-1} : static_cast<int16_t>(it->second);
                }
            for (int i = 0; i < vs.count; ++i) vs.domain_order.push_back(i);
            vs.first_vertex_ids = vs.domain_order;
            break;
        }
    }
    if (vs.count > kMaxValues) throw Error("InvalidParameter", "value space too large");
    return vs;
}

struct Bitset {
    std::vector<uint64_t> w;
    explicit Bitset(int n) : w((n + 63) / 64, 0) {}
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
};

// assignment order: max degree first, then greedily the vertex with the most
// already-ordered neighbours (ties to higher degree, then lower index)
std::vector<int> assignment_order(const Graph& g) {
    int n = g.n();
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_adj = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int adj = 0;
            for (int u : order)
                if (g.edge(u, v)) ++adj;
            int deg = g.degree(v);
            if (adj > best_adj || (adj == best_adj && deg > best_deg)) {
                best = v;
                best_adj = adj;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }
    return order;
}

class Solver {
public:
    Solver(const SearchProblem& p, const ValueSpace& vs, const SolveOptions& opts)
        : p_(p), vs_(vs), opts_(opts), n_(p.graph.n()),
          forbidden_(vs.count), label_count_(vs.count, 0), required_(vs.count, 0) {
        order_ = assignment_order(p.graph);
        edges_to_earlier_.resize(n_);
        nonedges_to_earlier_.resize(n_);
        for (int k = 0; k < n_; ++k)
            for (int e = 0; e < k; ++e) {
                if (p.graph.edge(order_[e], order_[k])) edges_to_earlier_[k].push_back(e);
                else nonedges_to_earlier_[k].push_back(e);
            }
        labels_.assign(n_, -1);
    }

    SearchOutcome run() {
        SearchOutcome out;
        out.bound = p_.bound;
        found_ = false;
        aborted_ = false;
        nodes_ = 0;
        if (n_ == 0) {
            out.found = true;
            out.witness = Labelling{witness_spec(), {}, p_.relaxed};
            return out;
        }
        descend(0);
        out.found = found_;
        out.nodes_expanded = nodes_;
        out.aborted = aborted_;
        if (found_) {
            Labelling lab{witness_spec(), std::vector<Element>(n_), p_.relaxed};
            for (int k = 0; k < n_; ++k) lab.labels[order_[k]] = vs_.element(witness_labels_[k]);
            out.witness = std::move(lab);
        }
        return out;
    }

private:
    MagmaSpec witness_spec() const {
        switch (p_.domain) {
            case DomainKind::IntRadius: return MagmaSpec::int_add();
            case DomainKind::NatMax: return MagmaSpec::nat_add();
            case DomainKind::Mod: return MagmaSpec::mod_add(BigInt(p_.bound));
            case DomainKind::FiniteMagma: return p_.magma;
        }
        return MagmaSpec::int_add();
    }

    void descend(int k) {
        if (found_ || aborted_) return;
        if (k == n_) {
            if (opts_.prune || leaf_valid()) {
                found_ = true;
                witness_labels_ = labels_;  // snapshot before the unwind
            }
            return;
        }
        const std::vector<int>& cands = (k == 0) ? vs_.first_vertex_ids : vs_.domain_order;
        for (int id : cands) {
            if (found_ || aborted_) return;
            ++nodes_;
            if (opts_.node_budget >= 0 && nodes_ > opts_.node_budget) {
                aborted_ = true;
                return;
            }
            if (opts_.prune) {
                if (try_assign(k, id)) {
                    descend(k + 1);
                    undo(k);
                }
            } else {
                if (!p_.relaxed && label_count_[id] > 0) continue;
                labels_[k] = id;
                ++label_count_[id];
                descend(k + 1);
                --label_count_[id];
                labels_[k] = -1;
            }
        }
    }

    struct Undo {
        int labelled = -1;
        bool unmet_restored = false;
        std::vector<int> forb;
        std::vector<int> reqs;
    };

    bool try_assign(int k, int id) {
        if (!p_.relaxed && label_count_[id] > 0) return false;
        if (forbidden_.test(id)) return false;
        Undo& u = undo_stack_[k];
        u.labelled = id;
        u.unmet_restored = false;
        u.forb.clear();
        u.reqs.clear();
        ++label_count_[id];
        if (required_[id] > 0 && label_count_[id] == 1) {
            --unmet_;
            u.unmet_restored = true;
        }
        labels_[k] = id;
        bool ok = true;
        if (p_.strong) {
            int s = vs_.compose(id, id);
            if (s >= 0) {
                if (label_count_[s] > 0 || required_[s] > 0) ok = false;
                else if (!forbidden_.test(s)) {
                    forbidden_.set(s);
                    u.forb.push_back(s);
                }
            }
        }
        if (ok)
            for (int e : edges_to_earlier_[k]) {
                int s = vs_.compose(labels_[e], id);
                if (s < 0 || forbidden_.test(s)) { ok = false; break; }
                ++required_[s];
                u.reqs.push_back(s);
                if (required_[s] == 1 && label_count_[s] == 0) ++unmet_;
            }
        if (ok)
            for (int e : nonedges_to_earlier_[k]) {
                int s = vs_.compose(labels_[e], id);
                if (s < 0) continue;
                if (label_count_[s] > 0 || required_[s] > 0) { ok = false; break; }
                if (!forbidden_.test(s)) {
                    forbidden_.set(s);
                    u.forb.push_back(s);
                }
            }
        if (ok && unmet_ > n_ - (k + 1)) ok = false;
        if (!ok) {
            undo(k);
            return false;
        }
        return true;
    }

    void undo(int k) {
        Undo& u = undo_stack_[k];
        for (auto it = u.reqs.rbegin(); it != u.reqs.rend(); ++it) {
            if (required_[*it] == 1 && label_count_[*it] == 0) --unmet_;
            --required_[*it];
        }
        for (int s : u.forb) forbidden_.clear(s);
        if (u.unmet_restored) ++unmet_;
        --label_count_[u.labelled];
        labels_[k] = -1;
        u.labelled = -1;
    }

    bool leaf_valid() const {
        // pruning disabled: validate the complete assignment directly
        for (int i = 0; i < n_; ++i) {
            if (p_.strong) {
                int s = vs_.compose(labels_[i], labels_[i]);
                if (s >= 0 && label_count_[s] > 0) return false;
            }
            for (int j = i + 1; j < n_; ++j) {
                int s = vs_.compose(labels_[i], labels_[j]);
                bool member = s >= 0 && label_count_[s] > 0;
                if (member != p_.graph.edge(order_[i], order_[j])) return false;
            }
        }
        return true;
    }

    const SearchProblem& p_;
    const ValueSpace& vs_;
    SolveOptions opts_;
    int n_;
    std::vector<int> order_;
    std::vector<std::vector<int>> edges_to_earlier_, nonedges_to_earlier_;
    Bitset forbidden_;
    std::vector<int16_t> label_count_;
    std::vector<int16_t> required_;
    std::vector<int> labels_;
    std::vector<int> witness_labels_;
    std::vector<Undo> undo_stack_ = std::vector<Undo>(64);
    int unmet_ = 0;
    long long nodes_ = 0;
    bool found_ = false;
    bool aborted_ = false;
};

}  // namespace

SearchOutcome solve(const SearchProblem& p, const SolveOptions& opts) {
    if (p.domain == DomainKind::FiniteMagma && !p.magma.commutative())
        throw Error("InvalidParameter", "search supports commutative magmas only");
    ValueSpace vs = make_value_space(p);
    if (p.graph.n() > 64) throw Error("InvalidParameter", "search is desk scale (n <= 64)");
    Solver solver(p, vs, opts);
    return solver.run();
}

RadiusResult radius(const Graph& g, long cap) {
    if (cap < 1) throw Error("InvalidParameter", "cap must be >= 1");
    RadiusResult res;
    // radius 0 is the all-zero labelling; only K_1 carries it non-relaxed
    if (g.n() <= 1) {
        res.value = 0;
        Labelling lab{MagmaSpec::int_add(), {}, false};
        for (int i = 0; i < g.n(); ++i) lab.labels.emplace_back(BigInt(0));
        res.witness = lab;
        return res;
    }
    for (long r = 1; r <= cap; ++r) {
        SearchProblem p{g, DomainKind::IntRadius, r, {}, false, false};
        SearchOutcome out = solve(p);
        res.nodes_expanded += out.nodes_expanded;
        if (out.found) {
            res.value = r;
            res.witness = out.witness;
            return res;
        }
    }
    res.above_cap = true;
    res.value = cap;
    return res;
}

SumNumberResult sum_number_bounded(const Graph& g, long max_isolated, long label_max) {
    if (max_isolated < 0 || label_max < 1) throw Error("InvalidParameter", "bad bounds");
    for (long k = 0; k <= max_isolated; ++k) {
        Graph padded(g.n() + static_cast<int>(k));
        for (auto [i, j] : g.edges()) padded.set_edge(i, j);
        SearchProblem p{padded, DomainKind::NatMax, label_max, {}, false, false};
        SearchOutcome out = solve(p);
        if (out.found) return {false, k, out.witness};
    }
    return {true, max_isolated, std::nullopt};
}

ModSweepResult mod_sum_sweep(const Graph& g, long m_cap) {
    if (m_cap < 2) throw Error("InvalidParameter", "modulus cap must be >= 2");
    ModSweepResult res;
    res.conclusive_bound = 2;
    for (int i = 1; i < g.n(); ++i) res.conclusive_bound *= 3;  // N = 2 * 3^(n-1)
    for (long m = 2; m <= m_cap; ++m) {
        SearchProblem p{g, DomainKind::Mod, m, {}, false, false};
        SearchOutcome out = solve(p);
        if (out.found) {
            res.found = true;
            res.modulus = m;
            res.witness = out.witness;
            return res;
        }
    }
    return res;
}

Labelling gcd_reduce_mod_labelling(const Labelling& lab) {
    if (lab.spec.kind != MagmaKind::ModAdd)
        throw Error("DomainMismatch", "gcd reduction applies to Z_m labellings");
    BigInt d = 0;
    for (const auto& e : lab.labels) d = big_gcd(d, e.num());
    if (d <= 1) return lab;
    if (lab.spec.modulus % d != 0)
        throw Error("GcdDoesNotDivideModulus",
                    "gcd " + d.str() + " does not divide modulus " + lab.spec.modulus.str());
    Labelling out{MagmaSpec::mod_add(lab.spec.modulus / d), {}, lab.relaxed};
    for (const auto& e : lab.labels) out.labels.emplace_back(e.num() / d);
    return out;
}

namespace {

bool bounded_exists(const Graph& g, long bound, bool relaxed, bool forbid_zero) {
    // rising ladder: positives usually sit at small radius
    std::vector<long> ladder;
    for (long r = 4; r < bound; r *= 2) ladder.push_back(r);
    ladder.push_back(bound);
    for (long r : ladder) {
        SearchProblem p{g, DomainKind::IntRadius, r, {}, relaxed, false, forbid_zero};
        if (solve(p).found) return true;
    }
    return false;
}

}  // namespace

CorpusCount count_corpus(const std::vector<Graph>& graphs, long per_graph_bound, int jobs,
                         CountMode mode, bool forbid_zero) {
    CorpusCount res;
    res.bound = per_graph_bound;
    res.zero_free = forbid_zero;
    res.total = static_cast<long>(graphs.size());
    if (graphs.empty()) return res;
    res.n = graphs[0].n();
    for (const auto& g : graphs)
        if (g.n() != res.n) throw Error("MixedOrders", "corpus mixes vertex counts");
    bool want_isg = mode != CountMode::Risg;
    bool want_risg = mode != CountMode::Isg;
    std::atomic<long> isg{0}, risg{0};
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= graphs.size()) break;
            bool strict = false;
            if (want_isg) {
                strict = bounded_exists(graphs[i], per_graph_bound, false, forbid_zero);
                if (strict) ++isg;
            }
            if (want_risg) {
                // a valid labelling is a valid relaxed labelling
                bool rx = strict || bounded_exists(graphs[i], per_graph_bound, true, forbid_zero);
                if (rx) ++risg;
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (want_isg) res.isg = isg.load();
    if (want_risg) res.risg = risg.load();
    return res;
}

}  // namespace sumgraph
