#include "sumgraph/exactla.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sumgraph/error.hpp"

namespace sumgraph {

BigInt determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw Error("NotSquare", "determinant needs a square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    IntMatrix w = m;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num / prev;  // exact by Bareiss
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

namespace {

// reduced row echelon form over the rationals; returns pivot columns
std::vector<int> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rational inv = m[r][c];
        for (int j = 0; j < cols; ++j) m[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<BigInt> to_primitive(const std::vector<Rational>& v) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    BigInt lcm = 1;
    for (const auto& x : v) {
        BigInt d = denominator(x);
        lcm = lcm / big_gcd(lcm, d) * d;
    }
    std::vector<BigInt> w(v.size());
    BigInt g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
        g = big_gcd(g, w[i]);
    }
    if (g > 1)
        for (auto& x : w) x /= g;
    for (const auto& x : w) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : w) y = -y;
        break;
    }
    return w;
}

}  // namespace

std::vector<std::vector<BigInt>> rational_nullspace(const IntMatrix& m) {
    int cols = m.cols;
    std::vector<std::vector<Rational>> w(m.rows, std::vector<Rational>(cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < cols; ++j) w[i][j] = Rational(m.at(i, j));
    std::vector<int> pivots = rref(w);
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<BigInt>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w[r][fc];
        basis.push_back(to_primitive(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> coords_in_basis(const std::vector<std::vector<BigInt>>& basis,
                                                     const std::vector<BigInt>& v) {
    if (basis.empty()) return std::nullopt;
    int dim = static_cast<int>(basis.size());
    int len = static_cast<int>(v.size());
    // solve [basis^T | v] exactly
    std::vector<std::vector<Rational>> aug(len, std::vector<Rational>(dim + 1));
    for (int i = 0; i < len; ++i) {
        for (int j = 0; j < dim; ++j) aug[i][j] = Rational(basis[j][i]);
        aug[i][dim] = Rational(v[i]);
    }
    std::vector<int> pivots = rref(aug);
    std::vector<Rational> out(dim, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == dim) return std::nullopt;  // inconsistent
        out[pivots[r]] = aug[r][dim];
    }
    return out;
}

KernelResult labelling_kernel(const Graph& g, const Labelling& lab) {
    if (lab.spec.kind != MagmaKind::IntAdd)
        throw Error("NotAValidLabelling", "labelling kernel is defined over (Z, +)");
    if (lab.relaxed) throw Error("NotAValidLabelling", "kernel needs distinct labels");
    Verdict verdict = verify(lab, g);
    if (!verdict.ok) throw Error("NotAValidLabelling", "labelling does not verify against the graph");
    std::map<BigInt, int> where;
    for (int i = 0; i < lab.size(); ++i) {
        if (where.count(lab.labels[i].num()))
            throw Error("AmbiguousWitness", "repeated label");  // unreachable for distinct labels
        where[lab.labels[i].num()] = i;
    }
    LabellingSystem sys;
    sys.graph = g;
    sys.labelling = lab;
    auto edge_list = g.edges();
    sys.matrix = IntMatrix(static_cast<int>(edge_list.size()), g.n());
    int r = 0;
    for (auto [i, j] : edge_list) {
        auto it = where.find(lab.labels[i].num() + lab.labels[j].num());
        if (it == where.end()) throw Error("NotAValidLabelling", "edge sum is not a label");
        int k = it->second;
        sys.rows.push_back({i, j, k});
        sys.matrix.at(r, i) += 1;
        sys.matrix.at(r, j) += 1;
        sys.matrix.at(r, k) -= 1;
        ++r;
    }
    KernelResult res;
    res.basis = rational_nullspace(sys.matrix);
    res.system = std::move(sys);
    return res;
}

std::vector<Labelling> enumerate_primitive_labellings(const Graph& g,
                                                      const std::vector<std::vector<BigInt>>& basis,
                                                      long box, long max_results) {
    if (box < 1) throw Error("InvalidParameter", "box must be >= 1");
    if (max_results < 1) throw Error("InvalidParameter", "max_results must be >= 1");
    std::vector<Labelling> out;
    std::set<std::vector<long>> kept;  // sign-canonical label vectors
    int dim = static_cast<int>(basis.size());
    if (dim == 0) return out;
    int n = g.n();
    // the scan runs on machine integers; guard the magnitudes once
    std::vector<std::vector<long>> b(dim, std::vector<long>(n));
    long max_entry = 0;
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < n; ++i) {
            if (basis[j][i] < -1000000 || basis[j][i] > 1000000)
                throw Error("InvalidParameter", "basis entries too large for the box scan");
            b[j][i] = static_cast<long>(basis[j][i]);
            max_entry = std::max(max_entry, std::abs(b[j][i]));
        }
    if (box > 1000000 / std::max<long>(1, max_entry * dim))
        throw Error("InvalidParameter", "box too large for the scan");
    std::vector<long> c(dim, -box);
    auto bump = [&]() {
        int i = dim - 1;
        while (i >= 0) {
            if (++c[i] <= box) return true;
            c[i] = -box;
            --i;
        }
        return false;
    };
    auto edges = g.edges();
    std::vector<long> v(n), sorted(n);
    while (true) {
        for (int i = 0; i < n; ++i) {
            long acc = 0;
            for (int j = 0; j < dim; ++j) acc += c[j] * b[j][i];
            v[i] = acc;
        }
        long gcd_all = 0;
        for (long x : v) {
            long y = std::abs(x);
            while (y != 0) {
                long t = gcd_all % y;
                gcd_all = y;
                y = t;
            }
        }
        if (gcd_all == 1) {  // primitive vectors only (the zero vector has gcd 0)
            sorted = v;
            std::sort(sorted.begin(), sorted.end());
            bool ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
            // membership via binary search on the sorted labels
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n && ok; ++j) {
                    bool member = std::binary_search(sorted.begin(), sorted.end(), v[i] + v[j]);
                    if (member != g.edge(i, j)) ok = false;
                }
            if (ok) {
                // primitive vectors are proportional exactly when they agree
                // up to sign: canonicalise the sign and dedupe
                std::vector<long> canon = v;
                for (long x : canon) {
                    if (x == 0) continue;
                    if (x < 0)
                        for (long& y : canon) y = -y;
                    break;
                }
                if (kept.insert(canon).second) {
                    Labelling lab{MagmaSpec::int_add(), {}, false};
                    for (long x : v) lab.labels.emplace_back(BigInt(x));
                    if (!verify(lab, g).ok)  // belt over the integer fast path
                        throw Error("InternalError", "box scan produced a non-verifying vector");
                    out.push_back(std::move(lab));
                    if (static_cast<long>(out.size()) >= max_results) return out;
                }
            }
        }
        if (!bump()) break;
    }
    return out;
}

bool in_primitive_box(const Graph& g, const std::vector<std::vector<BigInt>>& basis, long box,
                      const std::vector<BigInt>& v) {
    auto coords = coords_in_basis(basis, v);
    if (!coords) return false;
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    for (const auto& c : *coords) {
        if (denominator(c) != 1) return false;
        BigInt num = numerator(c);
        if (num < -box || num > box) return false;
    }
    BigInt gcd_all = 0;
    for (const auto& x : v) gcd_all = big_gcd(gcd_all, x);
    if (gcd_all != 1) return false;
    std::vector<BigInt> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    Labelling lab{MagmaSpec::int_add(), {}, false};
    for (const auto& x : v) lab.labels.emplace_back(x);
    return verify(lab, g).ok;
}

namespace {

std::vector<BigInt> factor_primes(BigInt n, long trial_bound, long rho_iters,
                                  std::vector<std::string>& warnings) {
    std::vector<BigInt> primes;
    if (n < 0) n = -n;
    if (n <= 1) return primes;
    for (BigInt p = 2; p * p <= n && p <= trial_bound; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n == 1) return primes;
    // Pollard rho on what's left, bounded; give up politely on failure
    std::vector<BigInt> stack{n};
    auto is_probably_prime = [](const BigInt& x) {
        if (x < 2) return false;
        // deterministic Miller-Rabin bases for 64-bit-ish sizes; fine at desk scale
        BigInt d = x - 1;
        int r = 0;
        while (d % 2 == 0) { d /= 2; ++r; }
        for (long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
            if (x == a) return true;
            if (x % a == 0) return false;
            BigInt v = boost::multiprecision::powm(BigInt(a), d, x);
            if (v == 1 || v == x - 1) continue;
            bool composite = true;
            for (int i = 1; i < r; ++i) {
                v = v * v % x;
                if (v == x - 1) { composite = false; break; }
            }
            if (composite) return false;
        }
        return true;
    };
    while (!stack.empty()) {
        BigInt m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_probably_prime(m)) {
            primes.push_back(m);
            continue;
        }
        BigInt x = 2, y = 2, d = 1, c = 1;
        long it = 0;
        bool split = false;
        while (it < rho_iters) {
            x = (x * x + c) % m;
            y = (y * y + c) % m;
            y = (y * y + c) % m;
            d = big_gcd(x >= y ? x - y : y - x, m);
            ++it;
            if (d != 1 && d != m) {
                stack.push_back(d);
                stack.push_back(m / d);
                split = true;
                break;
            }
            if (d == m) { c += 1; x = y = 2; }
        }
        if (!split) warnings.push_back("unfactored cofactor " + m.str() + " skipped");
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

// nonzero kernel vector of the n x n system modulo prime p, if any
std::optional<std::vector<long>> kernel_vector_mod_p(const std::vector<std::array<int, 3>>& rows,
                                                     int n, long p) {
    std::vector<std::vector<long>> m(rows.size(), std::vector<long>(n, 0));
    for (size_t r = 0; r < rows.size(); ++r) {
        auto [i, j, k] = rows[r];
        m[r][i] = (m[r][i] + 1) % p;
        m[r][j] = (m[r][j] + 1) % p;
        m[r][k] = (m[r][k] + p - 1) % p;
    }
    auto inv_mod = [&](long a) {
        long t = 0, newt = 1, r = p, newr = a % p;
        while (newr != 0) {
            long q = r / newr;
            long tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        return ((t % p) + p) % p;
    };
    std::vector<int> pivots;
    size_t rr = 0;
    std::vector<char> is_pivot(n, 0);
    for (int c = 0; c < n && rr < m.size(); ++c) {
        size_t pr = rr;
        while (pr < m.size() && m[pr][c] % p == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[rr], m[pr]);
        long inv = inv_mod(m[rr][c]);
        for (int j = 0; j < n; ++j) m[rr][j] = m[rr][j] * inv % p;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == rr || m[i][c] == 0) continue;
            long f = m[i][c];
            for (int j = 0; j < n; ++j) m[i][j] = ((m[i][j] - f * m[rr][j]) % p + p) % p;
        }
        pivots.push_back(c);
        is_pivot[c] = 1;
        ++rr;
    }
    int free_col = -1;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) { free_col = c; break; }
    if (free_col < 0) return std::nullopt;
    std::vector<long> v(n, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][free_col] % p) % p;
    return v;
}

}  // namespace

namespace {

// int64 fraction-free elimination; safe here because Hadamard bounds the
// minors of these {-1,0,1,2} cycle systems far below 2^62
long det_small(std::vector<long> w, int n) {
    long prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w[k * n + k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w[i * n + k] != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w[k * n + j], w[p * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                w[i * n + j] = (w[i * n + j] * w[k * n + k] - w[i * n + k] * w[k * n + j]) / prev;
            w[i * n + k] = 0;
        }
        prev = w[k * n + k];
    }
    return sign * w[(n - 1) * n + (n - 1)];
}

}  // namespace

RandomCycleResult random_cycle_search(int n, uint64_t seed, long prime_bound, long max_iterations) {
    if (n < 5) throw Error("InvalidParameter", "random cycle method needs n >= 5");
    if (n > 12) throw Error("InvalidParameter", "random cycle method is desk scale (n <= 12)");
    if (prime_bound < 2) throw Error("InvalidParameter", "prime bound must be >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    RandomCycleResult res;
    Graph cycle(n);
    for (int i = 0; i < n; ++i) cycle.set_edge(i, (i + 1) % n);
    for (long iter = 0; iter < max_iterations; ++iter) {
        res.iterations = iter + 1;
        // sample g with g(i) not in {i, i+1}; reject until the adjacent
        // constraint g(i) != g(i+1) holds cyclically (uniform over valid g)
        std::vector<int> g(n);
        for (int i = 0; i < n; ++i) {
            int v;
            do {
                v = pick(rng);
            } while (v == i || v == (i + 1) % n);
            g[i] = v;
        }
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if (g[i] == g[(i + 1) % n]) { ok = false; break; }
        if (!ok) continue;
        std::vector<std::array<int, 3>> rows;
        std::vector<long> m(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            rows.push_back({i, j, g[i]});
            m[i * n + i] += 1;
            m[i * n + j] += 1;
            m[i * n + g[i]] -= 1;
        }
        BigInt det = det_small(m, n);
        if (det == 0) continue;  // rational kernel exists but no finite field is forced
        for (const BigInt& p : factor_primes(det, 1000000, 10000, res.warnings)) {
            if (p > prime_bound) continue;
            if (p < n) continue;  // n distinct residues needed
            auto vec = kernel_vector_mod_p(rows, n, static_cast<long>(p));
            if (!vec) continue;
            Labelling lab{MagmaSpec::mod_add(p), {}, false};
            bool distinct_ok = true;
            {
                std::vector<long> s = *vec;
                std::sort(s.begin(), s.end());
                distinct_ok = std::adjacent_find(s.begin(), s.end()) == s.end();
            }
            if (!distinct_ok) continue;
            for (long x : *vec) lab.labels.emplace_back(BigInt(x));
            if (verify(lab, cycle).ok)
                res.hits.push_back({p, std::move(lab), g, det});
        }
        if (!res.hits.empty()) return res;
    }
    if (res.hits.empty())
        throw Error("NoSolutionWithinBudget",
                    "no verified cycle labelling within " + std::to_string(max_iterations) + " samples");
    return res;
}

}  // namespace sumgraph
