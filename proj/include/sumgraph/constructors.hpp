#pragma once

#include "sumgraph/fib.hpp"
#include "sumgraph/labelling.hpp"

namespace sumgraph {

// Closed-form candidate labellings from the literature. None of these assert
// their own validity: callers pair them with verify (the claims harness
// records PASS/FAIL with witnesses).

// a0=1, a1=2, a_k = a_{k-2} - a_{k-1}, assigned along P_n. Pre: n >= 4.
Labelling harary_path(int n);

// Two integer intervals plus a closing pair, maximum absolute value 3m-4,
// paired as in the matching-radius proof figure. Pre: m >= 4.
Labelling matching_harary_style(int m);

// -1 ; 1, 3, ..., 4m-5 ; 4m-4 on 2m vertices, range 4m-3. Pre: m >= 3.
Labelling matching_li(int m);

// -(n-1)..-ceil(n/2) and floor(n/2)..(n-1); radius n-1.
Labelling empty_graph(int n);
// odd numbers +-1, +-3, ..., +-(n-1); n even.
Labelling empty_graph_even_alt(int n);

// (a, 3a, 4a, 2a) in cycle order. Pre: a != 0 and 5a = 0 in the group.
// Errors: InvalidGenerator.
Labelling c4_over_abelian(const MagmaSpec& spec, const Element& a);

struct FibCycleResult {
    Labelling labelling;
    bool conditions_ok = true;          // order(a0) | delta(n) and d*a1 = z*a0
    std::string condition_note;         // which necessary condition failed
    FibParams params;
};

// a0, a1, then each label the sum of the previous two, around C_n. The
// necessary conditions are checked and reported; the construction is
// returned either way. Pre: n >= 3, spec a finite abelian kind.
FibCycleResult fibonacci_cycle(const MagmaSpec& spec, const Element& a0, const Element& a1, int n);

// Vertices a_i = (f_i mod f, f_{i-1} mod f) over Z_f x Z_f, f = fib(2l).
// Errors: DegenerateGroup for l = 1 (f = 1).
Labelling c4l_theorem_labelling(int l);

// v_{2i-1} = A_i, v_{2i} = A_i u A_{i+1} u B_i with singleton A_i, B_i over
// a 2k-element universe, around C_{2k}. Pre: k >= 2.
Labelling union_cycle(int k);

// Nested chain of n sets; verifies as K_n. Errors: UniverseTooSmall when
// n > s+1.
Labelling union_clique(int n, int s);

// All subsets (m = 2^k) or all non-empty subsets (m = 2^k - 1) under
// symmetric difference; verifies as K_m. Errors: NotRepresentable.
Labelling boolean_clique(long m);

// n copies of label 0 over (Z, +), relaxed; induces K_n.
Labelling relaxed_clique(int n);

}  // namespace sumgraph
