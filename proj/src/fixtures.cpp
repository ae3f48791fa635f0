#include "sumgraph/fixtures.hpp"

#include <initializer_list>

#include "sumgraph/error.hpp"

namespace sumgraph {

namespace {

Labelling ints(MagmaSpec spec, std::initializer_list<long> values, bool relaxed = false) {
    Labelling lab{std::move(spec), {}, relaxed};
    for (long v : values) lab.labels.emplace_back(BigInt(v));
    return lab;
}

Labelling pairs(MagmaSpec spec, std::initializer_list<std::pair<long, long>> values) {
    Labelling lab{std::move(spec), {}, false};
    for (auto [a, b] : values) lab.labels.emplace_back(std::vector<BigInt>{BigInt(a), BigInt(b)});
    return lab;
}

Graph cycle(int n) { return build_family(FamilySpec::cycle(n)); }

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.set_edge(a, b);
    return g;
}

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> fx;

    fx.push_back({"FIX-2.1-zgraph", "2", "six-vertex integral example",
                  ints(MagmaSpec::int_add(), {-3, 1, -2, -1, -4, 3}),
                  from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {2, 5}, {4, 5}}), 4});

    fx.push_back({"FIX-2.2-P6", "2", "alternating path labelling",
                  ints(MagmaSpec::int_add(), {1, 2, -1, 3, -4, 7}),
                  build_family(FamilySpec::path(6)), 7});

    fx.push_back({"FIX-2.3-C4u3K1", "2", "sum number witness for C_4",
                  ints(MagmaSpec::nat_add(), {1, 3, 6, 8, 4, 9, 14}),
                  build_family(parse_family_spec("C4+3K1")), -1});

    fx.push_back({"FIX-2.4-relaxed-cubic", "2", "12-vertex cubic graph, relaxed labels",
                  ints(MagmaSpec::int_add(), {-3, -15, -11, -3, 5, -1, 4, -14, 3, 3, -6, -18}, true),
                  from_edges(12, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {2, 4}, {1, 6},
                                  {4, 5}, {5, 6}, {4, 10}, {6, 11}, {5, 7}, {7, 8}, {7, 9},
                                  {9, 11}, {8, 10}, {9, 10}, {8, 11}}),
                  18});

    fx.push_back({"FIX-4-Z5", "4", "C_4 over Z_5, a = 1",
                  ints(MagmaSpec::mod_add(5), {1, 3, 4, 2}), cycle(4), -1});

    fx.push_back({"FIX-4-U11", "4", "C_4 over the units mod 11, a = 3",
                  ints(MagmaSpec::mod_mul_units(11), {3, 5, 4, 9}), cycle(4), -1});

    fx.push_back({"FIX-5-C7-Z29", "5", "Fibonacci labelling of C_7",
                  ints(MagmaSpec::mod_add(29), {1, 24, 25, 20, 16, 7, 23}), cycle(7), -1});

    fx.push_back({"FIX-5-C15-Z682", "5", "Fibonacci labelling of C_15, a0=1, a1=81",
                  ints(MagmaSpec::mod_add(682),
                       {1, 81, 82, 163, 245, 408, 653, 379, 350, 47, 397, 444, 159, 603, 80}),
                  cycle(15), -1});

    fx.push_back({"FIX-6-C5-Z11", "6", "Fibonacci labelling of C_5",
                  ints(MagmaSpec::mod_add(11), {1, 3, 9, 5, 4}), cycle(5), -1});

    fx.push_back({"FIX-6-C6-Z4xZ4", "6", "Fibonacci labelling of C_6",
                  pairs(MagmaSpec::abelian({4, 4}),
                        {{0, 1}, {1, 0}, {3, 1}, {2, 3}, {1, 2}, {1, 1}}),
                  cycle(6), -1});

    fx.push_back({"FIX-6-C6-Z13", "6", "non-Fibonacci labelling of C_6",
                  ints(MagmaSpec::mod_add(13), {1, 5, 9, 6, 3, 2}), cycle(6), -1});

    fx.push_back({"FIX-6-C8-Z3xZ15", "6", "Fibonacci labelling of C_8",
                  pairs(MagmaSpec::abelian({3, 15}),
                        {{0, 1}, {1, 3}, {1, 4}, {2, 7}, {0, 11}, {2, 3}, {2, 14}, {1, 2}}),
                  cycle(8), -1});

    fx.push_back({"FIX-6-C8-Z29", "6", "non-Fibonacci labelling of C_8",
                  ints(MagmaSpec::mod_add(29), {1, 13, 17, 25, 21, 14, 7, 6}), cycle(8), -1});

    fx.push_back({"FIX-6-C12-Z40xZ40", "6", "Fibonacci labelling of C_12",
                  pairs(MagmaSpec::abelian({40, 40}),
                        {{0, 1}, {5, 3}, {5, 4}, {10, 7}, {15, 11}, {25, 18},
                         {0, 29}, {25, 7}, {25, 36}, {10, 3}, {35, 39}, {5, 2}}),
                  cycle(12), -1});

    fx.push_back({"FIX-7-C9-Z53", "7", "random linear-system method, C_9",
                  ints(MagmaSpec::mod_add(53), {1, 8, 16, 24, 40, 11, 51, 9, 7}), cycle(9), -1});

    fx.push_back({"FIX-7-C9-Z47a", "7", "random linear-system method, C_9",
                  ints(MagmaSpec::mod_add(47), {1, 12, 36, 23, 13, 30, 43, 26, 22}), cycle(9), -1});

    fx.push_back({"FIX-7-C9-Z47b", "7", "random linear-system method, C_9",
                  ints(MagmaSpec::mod_add(47), {1, 34, 14, 26, 35, 38, 44, 41, 40}), cycle(9), -1});

    Graph q4 = build_family(FamilySpec::hypercube(4));
    fx.push_back({"FIX-9.3-Q4-r46", "9.3", "4D-cube integral labelling (sol1)",
                  ints(MagmaSpec::int_add(),
                       {-17, 38, 6, -46, -21, -19, -25, 8, -8, -32, -38, 21, -11, -6, 19, -40}),
                  q4, 46});
    fx.push_back({"FIX-9.3-Q4-r37", "9.3", "4D-cube integral labelling (sol2)",
                  ints(MagmaSpec::int_add(),
                       {29, -10, -32, 18, -19, 5, 37, -8, 8, -22, 10, 19, -3, 32, -5, -14}),
                  q4, 37});
    fx.push_back({"FIX-9.3-Q4-r35", "9.3", "4D-cube integral labelling (sol3)",
                  ints(MagmaSpec::int_add(),
                       {8, 18, -6, -29, -26, -9, -3, 11, -11, -24, -18, 26, 2, 6, 9, -35}),
                  q4, 35});
    fx.push_back({"FIX-9.3-Q4-r24", "9.3", "4D-cube labelling realising the radius",
                  ints(MagmaSpec::int_add(),
                       {-5, 17, 19, 5, 24, -12, -2, 14, 22, 2, -24, 12, -20, -4, 4, -16}),
                  q4, 24});

    // figure order mapped onto binary vertex order: front face (9,12,4,8)
    // onto the 4-cycle 0-1-3-2, back face (3,6,2,1) onto 4-5-7-6
    fx.push_back({"FIX-10-cube-Z15", "10", "3D-cube as a mod sum graph",
                  ints(MagmaSpec::mod_add(15), {9, 12, 8, 4, 3, 6, 1, 2}),
                  build_family(FamilySpec::hypercube(3)), -1});

    fx.push_back({"FIX-10-petersen-Z28", "10", "Petersen graph as a mod sum graph",
                  ints(MagmaSpec::mod_add(28), {1, 20, 7, 5, 19, 23, 27, 12, 24, 21}),
                  build_family(FamilySpec::petersen()), -1});

    fx.push_back({"FIX-11-K33-Z9-relaxed", "11", "K_{3,3} as a relaxed mod sum graph",
                  ints(MagmaSpec::mod_add(9), {1, 4, 7, 6, 6, 6}, true),
                  build_family(FamilySpec::complete_bipartite(3, 3)), -1});

    return fx;
}

}  // namespace

const std::vector<Fixture>& all_fixtures() {
    static const std::vector<Fixture> fx = build_fixtures();
    return fx;
}

const Fixture& fixture(const std::string& id) {
    for (const auto& f : all_fixtures())
        if (f.id == id) return f;
    throw Error("UnknownFixture", id);
}

const std::vector<std::vector<BigInt>>& q4_reference_basis() {
    static const std::vector<std::vector<BigInt>> basis = [] {
        std::vector<std::vector<long>> u = {
            {0, 0, -1, 1, 0, 0, 1, -1, 1, -1, 0, 0, -1, 1, 0, 0},
            {-3, 2, 0, 0, 1, -1, -1, -2, 2, -2, -2, -1, -3, 0, 1, 0},
            {-1, 0, 0, 1, 1, 0, 0, -1, 1, 0, 0, -1, -1, 0, 0, 1},
        };
        std::vector<std::vector<BigInt>> out;
        for (const auto& row : u) {
            std::vector<BigInt> v;
            for (long x : row) v.emplace_back(x);
            out.push_back(std::move(v));
        }
        return out;
    }();
    return basis;
}

std::vector<int> z5_units11_iso_map() { return {0, 1, 2, 3}; }

}  // namespace sumgraph
