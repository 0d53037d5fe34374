#include "fermatlat/hodge_cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermat {

namespace {

void check_params(const FermatParams& p) {
    if (p.n <= 0 || p.n % 2 != 0) throw std::invalid_argument("n must be even and positive");
    if (p.d < 2) throw std::invalid_argument("d must be >= 2");
}

std::vector<BetaIndex> all_indices(const FermatParams& p) {
    const int len = p.n + 1;
    const int top = p.d - 2;
    std::vector<BetaIndex> out;
    BetaIndex beta(static_cast<std::size_t>(len), 0);
    for (;;) {
        out.push_back(beta);
        int pos = len - 1;
        while (pos >= 0 && beta[static_cast<std::size_t>(pos)] == top)
            beta[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++beta[static_cast<std::size_t>(pos)];
    }
    return out;
}

// Perfect matching of vals into pairs summing to `target`, by
// backtracking on the first unmatched position. Tuples have at most 12
// entries, so exhaustive search is fine.
bool has_pair_matching(std::vector<int>& vals, std::vector<bool>& used, int target) {
    std::size_t first = 0;
    while (first < vals.size() && used[first]) ++first;
    if (first == vals.size()) return true;
    used[first] = true;
    for (std::size_t j = first + 1; j < vals.size(); ++j) {
        if (used[j] || vals[first] + vals[j] != target) continue;
        used[j] = true;
        if (has_pair_matching(vals, used, target)) {
            used[first] = used[j] = false;
            return true;
        }
        used[j] = false;
    }
    used[first] = false;
    return false;
}

}  // namespace

bool in_second_index_set(const BetaIndex& beta, const FermatParams& p) {
    int sum = 0;
    for (int b : beta) sum += b + 1;
    // Condition (a): some beta_0 in [0, d-2] completes the sum to
    // d*(n/2+1).
    const int beta0 = p.d * (p.n / 2 + 1) - sum - 1;
    if (beta0 < 0 || beta0 > p.d - 2) return false;
    // Condition (b): the extended tuple admits no fixed-point-free
    // involution pairing entries to d-2.
    std::vector<int> vals;
    vals.reserve(beta.size() + 1);
    vals.push_back(beta0);
    vals.insert(vals.end(), beta.begin(), beta.end());
    std::vector<bool> used(vals.size(), false);
    return !has_pair_matching(vals, used, p.d - 2);
}

HodgeIndexSets build_index_sets(const FermatParams& p) {
    check_params(p);
    HodgeIndexSets s;
    s.all = all_indices(p);
    for (const auto& beta : s.all) {
        int sum = 0;
        for (int b : beta) sum += b + 1;
        if (sum % p.d != 0 && sum < p.d * (p.n / 2)) s.i1.push_back(beta);
        if (in_second_index_set(beta, p)) s.i2.push_back(beta);
    }
    s.columns = s.i1;
    s.columns.insert(s.columns.end(), s.i2.begin(), s.i2.end());
    std::sort(s.columns.begin(), s.columns.end());
    s.columns.erase(std::unique(s.columns.begin(), s.columns.end()), s.columns.end());
    return s;
}

CyclotomicMatrix q_matrix(const FermatParams& p, const HodgeIndexSets& s) {
    check_params(p);
    const auto d = static_cast<unsigned long>(p.d);
    CyclotomicMatrix q;
    q.d = d;
    q.rows = s.mu();
    q.cols = s.mu_check();
    q.entries.assign(q.rows * q.cols, CyclotomicInt(d));

    // zeta^k for k = 0..d-1, computed once.
    std::vector<CyclotomicInt> zeta(d, CyclotomicInt(d));
    for (unsigned long k = 0; k < d; ++k) zeta[k] = zeta_power(static_cast<long>(k), d);

    for (std::size_t r = 0; r < q.rows; ++r) {
        const BetaIndex& beta = s.all[r];
        for (std::size_t c = 0; c < q.cols; ++c) {
            const BetaIndex& betap = s.columns[c];
            CyclotomicInt prod = CyclotomicInt::from_integer(d, 1);
            for (std::size_t i = 0; i < beta.size(); ++i) {
                const long bp1 = betap[i] + 1;
                const long e1 = ((beta[i] + 1) * bp1) % p.d;
                const long e2 = (beta[i] * bp1) % p.d;
                prod = prod * (zeta[static_cast<std::size_t>(e1)] -
                               zeta[static_cast<std::size_t>(e2)]);
            }
            q(r, c) = std::move(prod);
        }
    }
    return q;
}

IntMatrix coefficient_concatenation(const CyclotomicMatrix& q) {
    const std::size_t phi = euler_phi(q.d);
    IntMatrix a2(q.rows, q.cols * phi);
    for (std::size_t r = 0; r < q.rows; ++r)
        for (std::size_t c = 0; c < q.cols; ++c) {
            const auto& coeffs = q(r, c).coeffs();
            for (std::size_t i = 0; i < phi; ++i) a2(r, i * q.cols + c) = coeffs[i];
        }
    return a2;
}

IntMatrix pham_intersection_matrix(const FermatParams& p) {
    check_params(p);
    const auto sets = all_indices(p);
    const std::size_t mu = sets.size();
    const int len = p.n + 1;

    const int diag_sign = (p.n * (p.n - 1) / 2) % 2 == 0 ? 1 : -1;
    const int off_sign = (p.n * (p.n + 1) / 2) % 2 == 0 ? 1 : -1;

    IntMatrix psi(mu, mu);
    for (std::size_t r = 0; r < mu; ++r) {
        psi(r, r) = 2 * diag_sign;
        for (std::size_t c = r + 1; c < mu; ++c) {
            const BetaIndex& a = sets[r];
            const BetaIndex& b = sets[c];
            // Componentwise adjacency in either direction; other pairs
            // do not intersect.
            bool up = true, down = true;
            int delta = 0;
            for (int i = 0; i < len && (up || down); ++i) {
                const int diff = b[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i)];
                if (diff != 0 && diff != 1) up = false;
                if (diff != 0 && diff != -1) down = false;
                delta += diff;
            }
            if (!up && !down) continue;
            const int val = off_sign * ((delta % 2 == 0) ? 1 : -1);
            // n is even, so the form is symmetric and the swapped-role
            // case carries the same value.
            psi(r, c) = val;
            psi(c, r) = val;
        }
    }
    return psi;
}

HodgeBranch build_hodge_branch(const FermatParams& p) {
    HodgeBranch br;
    br.sets = build_index_sets(p);
    if (br.sets.mu_check() == 0) {
        // No period conditions: every primitive class is a linear Hodge
        // class and the kernel is all of Z^mu.
        br.degenerate = true;
        br.kernel = IntMatrix::identity(br.sets.mu());
        br.a3 = pham_intersection_matrix(p);
        return br;
    }
    br.a2 = coefficient_concatenation(q_matrix(p, br.sets));
    br.a2_snf = smith_decomposition(br.a2);
    br.kernel = br.a2_snf.u.row_slice(br.a2_snf.rank, br.a2.rows());
    br.a3 = congruent_transform(br.kernel, pham_intersection_matrix(p));
    return br;
}

IntMatrix primitive_hodge_matrix(const FermatParams& p) {
    return build_hodge_branch(p).a3;
}

nlohmann::json index_sets_to_json(const HodgeIndexSets& s) {
    nlohmann::json j;
    j["mu"] = s.mu();
    j["mu_check"] = s.mu_check();
    j["I1"] = s.i1;
    j["I2"] = s.i2;
    return j;
}

}  // namespace fermat
