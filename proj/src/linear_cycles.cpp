#include "fermatlat/linear_cycles.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "fermatlat/errors.hpp"

namespace fermat {

namespace {

constexpr std::uint64_t kDefaultMaxCycles = 20000;

void check_params(const FermatParams& p) {
    if (p.n <= 0 || p.n % 2 != 0) throw std::invalid_argument("n must be even and positive");
    if (p.d < 2) throw std::invalid_argument("d must be >= 2");
}

bool is_prime(unsigned long v) {
    if (v < 2) return false;
    for (unsigned long q = 2; q * q <= v; ++q)
        if (v % q == 0) return false;
    return true;
}

}  // namespace

bool FermatParams::satisfies_degree_condition() const {
    if (is_prime(static_cast<unsigned long>(d)) || d == 4) return true;
    unsigned long g = 1;
    for (int k = 2; k <= n + 1; ++k)
        g = std::lcm<unsigned long>(g, static_cast<unsigned long>(k));
    // gcd(d, (n+1)!) = 1 iff d shares no prime with any of 2..n+1.
    return std::gcd<unsigned long>(static_cast<unsigned long>(d), g) == 1;
}

mpz_class linear_cycle_count(const FermatParams& p) {
    check_params(p);
    mpz_class count = 1;
    for (int k = 1; k <= p.n + 1; k += 2) count *= k;  // 1*3*...*(n+1)
    mpz_class dpow;
    mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(p.d),
                  static_cast<unsigned long>(p.n / 2 + 1));
    return count * dpow;
}

namespace {

void enumerate_pairings(int npts, std::vector<std::array<int, 2>>& current,
                        unsigned used_mask,
                        std::vector<std::vector<std::array<int, 2>>>& out) {
    if (static_cast<int>(current.size()) * 2 == npts) {
        out.push_back(current);
        return;
    }
    int u = 0;
    while (used_mask & (1u << u)) ++u;  // smallest unused index goes first
    for (int v = u + 1; v < npts; ++v) {
        if (used_mask & (1u << v)) continue;
        current.push_back({u, v});
        enumerate_pairings(npts, current, used_mask | (1u << u) | (1u << v), out);
        current.pop_back();
    }
}

}  // namespace

std::vector<LinearCycleSpec> enumerate_linear_cycles(const FermatParams& p,
                                                     std::uint64_t max_cycles) {
    check_params(p);
    const mpz_class n_total = linear_cycle_count(p);
    if (n_total > max_cycles)
        throw ResourceCapError("refusing (n,d)=(" + std::to_string(p.n) + "," +
                               std::to_string(p.d) + "): N=" + n_total.get_str() +
                               " linear cycles exceeds the cap of " +
                               std::to_string(max_cycles) +
                               " (raise --max-cycles to attempt)");

    const int npts = p.n + 2;
    const int npairs = p.n / 2 + 1;
    std::vector<std::vector<std::array<int, 2>>> pairings;
    std::vector<std::array<int, 2>> scratch;
    enumerate_pairings(npts, scratch, 0, pairings);

    std::vector<LinearCycleSpec> cycles;
    cycles.reserve(n_total.get_ui());
    std::vector<int> exps(npairs, 0);
    for (const auto& pairing : pairings) {
        // Odometer over exponent tuples, last position fastest:
        // lexicographic order on (pairing, exps).
        std::fill(exps.begin(), exps.end(), 0);
        for (;;) {
            cycles.push_back({pairing, exps});
            int pos = npairs - 1;
            while (pos >= 0 && exps[pos] == p.d - 1) exps[pos--] = 0;
            if (pos < 0) break;
            ++exps[pos];
        }
    }
    return cycles;
}

int intersection_dimension(const LinearCycleSpec& a, const LinearCycleSpec& b,
                           const FermatParams& p) {
    const int npts = p.n + 2;
    const int mod = 2 * p.d;

    // Weighted union-find: weight[x] is the exponent e with
    // x = zeta_{2d}^e * root(x). An inconsistent merge (same root,
    // mismatched weights) forces every coordinate of the component to 0.
    int parent[16], weight[16];
    bool dead[16];
    for (int i = 0; i < npts; ++i) {
        parent[i] = i;
        weight[i] = 0;
        dead[i] = false;
    }

    auto find = [&](int x, int& w) {
        w = 0;
        while (parent[x] != x) {
            w += weight[x];
            x = parent[x];
        }
        w %= mod;
        return x;
    };

    auto merge = [&](int u, int v, int e) {
        // equation: x_u = zeta^e x_v
        int wu, wv;
        const int ru = find(u, wu);
        const int rv = find(v, wv);
        if (ru == rv) {
            if ((wu - wv - e) % mod != 0) dead[ru] = true;
            return;
        }
        parent[ru] = rv;
        weight[ru] = ((e + wv - wu) % mod + mod) % mod;
        if (dead[ru]) dead[rv] = true;
    };

    for (std::size_t i = 0; i < a.pairs.size(); ++i)
        merge(a.pairs[i][0], a.pairs[i][1], 1 + 2 * a.exps[i]);
    for (std::size_t i = 0; i < b.pairs.size(); ++i)
        merge(b.pairs[i][0], b.pairs[i][1], 1 + 2 * b.exps[i]);

    int survivors = 0;
    for (int i = 0; i < npts; ++i) {
        int w;
        if (parent[i] == i && !dead[find(i, w)]) ++survivors;
    }
    return survivors - 1;
}

mpz_class intersection_number(int m, const FermatParams& p) {
    if (m < -1 || m > p.n / 2) throw std::invalid_argument("intersection dimension out of range");
    mpz_class pw;
    mpz_class base = 1 - p.d;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m + 1));
    mpz_class num = 1 - pw;
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(p.d));
    return q;
}

namespace {

void run_rows(std::size_t row_begin, std::size_t row_end, const FermatParams& p,
              const std::vector<LinearCycleSpec>& cycles, IntMatrix& out) {
    const std::size_t n = cycles.size();
    // Precompute the d+... possible values once per worker.
    std::vector<mpz_class> value_of_dim(static_cast<std::size_t>(p.n / 2 + 2));
    for (int m = -1; m <= p.n / 2; ++m)
        value_of_dim[static_cast<std::size_t>(m + 1)] = intersection_number(m, p);
    for (std::size_t i = row_begin; i < row_end; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const int m = intersection_dimension(cycles[i], cycles[j], p);
            out(i, j) = value_of_dim[static_cast<std::size_t>(m + 1)];
        }
    }
}

}  // namespace

IntMatrix full_intersection_matrix(const FermatParams& p,
                                   const std::vector<LinearCycleSpec>& cycles,
                                   int jobs) {
    check_params(p);
    const std::size_t n = cycles.size();
    IntMatrix out(n, n);
    if (jobs <= 1 || n < 64) {
        run_rows(0, n, p, cycles, out);
    } else {
        // Upper triangle only; interleave rows so the workload balances.
        const int workers = jobs;
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                std::vector<mpz_class> value_of_dim(static_cast<std::size_t>(p.n / 2 + 2));
                for (int m = -1; m <= p.n / 2; ++m)
                    value_of_dim[static_cast<std::size_t>(m + 1)] = intersection_number(m, p);
                for (std::size_t i = static_cast<std::size_t>(w); i < n;
                     i += static_cast<std::size_t>(workers))
                    for (std::size_t j = i; j < n; ++j) {
                        const int m = intersection_dimension(cycles[i], cycles[j], p);
                        out(i, j) = value_of_dim[static_cast<std::size_t>(m + 1)];
                    }
            });
        }
        for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) out(i, j) = out(j, i);
    return out;
}

IntMatrix primitive_intersection_matrix(const IntMatrix& full) {
    if (full.rows() != full.cols() || full.rows() == 0)
        throw std::invalid_argument("primitive_intersection_matrix: need square nonempty input");
    const std::size_t n = full.rows() - 1;
    IntMatrix out(n, n);
    const mpz_class& p11 = full(0, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = full(i + 1, j + 1) - full(i + 1, 0) - full(0, j + 1) + p11;
    return out;
}

IntMatrix full_intersection_matrix(const FermatParams& p) {
    return full_intersection_matrix(p, enumerate_linear_cycles(p, kDefaultMaxCycles));
}

IntMatrix primitive_intersection_matrix(const FermatParams& p) {
    return primitive_intersection_matrix(full_intersection_matrix(p));
}

nlohmann::json cycles_to_json(const std::vector<LinearCycleSpec>& cycles) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cycles) {
        nlohmann::json b = nlohmann::json::array();
        for (const auto& pr : c.pairs) b.push_back({pr[0], pr[1]});
        arr.push_back({{"b", b}, {"a", c.exps}});
    }
    return arr;
}

}  // namespace fermat
