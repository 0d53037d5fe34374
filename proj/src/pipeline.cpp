#include "fermatlat/pipeline.hpp"

#include <future>
#include <iostream>
#include <sstream>

namespace fermat {

namespace {

constexpr std::uint64_t kCheckPrime = 2147483647;  // 2^31 - 1
constexpr int kEntryBytes = 16;                    // mpz_class header + one limb

void progress(const RunConfig& cfg, const std::string& stage, const std::string& msg) {
    if (cfg.quiet) return;
    std::cerr << "[" << stage << "] (" << cfg.n << "," << cfg.d << ") " << msg << "\n";
}

std::string refuse_msg(const RunConfig& cfg, const std::string& what) {
    return "refusing (n,d)=(" + std::to_string(cfg.n) + "," + std::to_string(cfg.d) + "): " +
           what;
}

// Both branches refuse before touching memory; the advisory budget
// models the reduction working set (source plus the three transform
// matrices of the Smith reduction).
void check_linear_budget(const RunConfig& cfg, const mpz_class& n_cycles) {
    if (n_cycles > cfg.max_cycles)
        throw ResourceCapError(refuse_msg(
            cfg, "N=" + n_cycles.get_str() + " linear cycles exceeds the cap of " +
                     std::to_string(cfg.max_cycles) + " (raise --max-cycles to attempt)"));
    const mpz_class bytes = 4 * n_cycles * n_cycles * kEntryBytes;
    const mpz_class budget = mpz_class(cfg.memory_budget_mb) * 1024 * 1024;
    if (bytes > budget)
        throw ResourceCapError(refuse_msg(
            cfg, "the Smith reduction of the N=" + n_cycles.get_str() +
                     " intersection matrix needs an estimated " +
                     mpz_class(bytes / (1024 * 1024)).get_str() +
                     " MB, over the " + std::to_string(cfg.memory_budget_mb) +
                     " MB budget (raise --memory-mb to attempt)"));
}

void check_hodge_budget(const RunConfig& cfg, const mpz_class& mu) {
    if (mu > cfg.max_mu)
        throw ResourceCapError(refuse_msg(
            cfg, "mu=" + mu.get_str() + " vanishing cycles exceeds the cap of " +
                     std::to_string(cfg.max_mu) + " (raise --max-mu to attempt)"));
    const mpz_class bytes = 8 * mu * mu * kEntryBytes;
    const mpz_class budget = mpz_class(cfg.memory_budget_mb) * 1024 * 1024;
    if (bytes > budget)
        throw ResourceCapError(refuse_msg(
            cfg, "the vanishing-cycle branch at mu=" + mu.get_str() +
                     " needs an estimated " + mpz_class(bytes / (1024 * 1024)).get_str() +
                     " MB, over the " + std::to_string(cfg.memory_budget_mb) +
                     " MB budget (raise --memory-mb to attempt)"));
}

SmithDecomposition decomposition_from_parts(IntMatrix u, IntMatrix s, IntMatrix t) {
    SmithDecomposition dec;
    dec.u = std::move(u);
    dec.s = std::move(s);
    dec.t = std::move(t);
    const std::size_t nmin = std::min(dec.s.rows(), dec.s.cols());
    for (std::size_t k = 0; k < nmin && dec.s(k, k) != 0; ++k)
        dec.divisors.push_back(dec.s(k, k));
    dec.rank = dec.divisors.size();
    return dec;
}

// Reduce with a cache in front: cached U, S, T are only trusted after a
// modular replay of u*a*t = s.
SmithDecomposition snf_cached(const RunConfig& cfg, const MatrixCache& cache,
                              const std::string& stage, const IntMatrix& a) {
    const std::string base = cache_key(stage, cfg.n, cfg.d);
    if (cache.enabled()) {
        auto u = cache.load(base + ":U");
        auto s = cache.load(base + ":S");
        auto t = cache.load(base + ":T");
        if (u && s && t) {
            SmithDecomposition dec =
                decomposition_from_parts(std::move(*u), std::move(*s), std::move(*t));
            if (verify_decomposition_mod(a, dec, kCheckPrime)) {
                progress(cfg, "SNF", stage + ": cached decomposition verified");
                return dec;
            }
            std::cerr << "warning: cached decomposition for " << base
                      << " fails modular replay; recomputing\n";
        }
    }
    progress(cfg, "SNF", stage + ": reducing " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
    SmithDecomposition dec = smith_decomposition(a);
    if (!verify_decomposition_mod(a, dec, kCheckPrime))
        throw std::logic_error("Smith decomposition failed modular replay");
    if (cache.enabled()) {
        cache.store(base + ":U", dec.u);
        cache.store(base + ":S", dec.s);
        cache.store(base + ":T", dec.t);
    }
    return dec;
}

IntMatrix full_matrix_cached(const RunConfig& cfg) {
    const FermatParams p = cfg.params();
    const mpz_class n_cycles = linear_cycle_count(p);
    check_linear_budget(cfg, n_cycles);

    MatrixCache cache(cfg.cache_dir);
    const std::string key = cache_key("full", cfg.n, cfg.d);
    if (auto cached = cache.load(key)) {
        progress(cfg, "A1", "full intersection matrix loaded from cache");
        return std::move(*cached);
    }
    progress(cfg, "cycles", "enumerating N=" + n_cycles.get_str());
    const auto cycles = enumerate_linear_cycles(p, cfg.max_cycles);
    progress(cfg, "A1", "assembling full " + n_cycles.get_str() + "x" + n_cycles.get_str() +
                            " intersection matrix");
    IntMatrix full = full_intersection_matrix(p, cycles, cfg.jobs);
    cache.store(key, full);
    return full;
}

}  // namespace

LatticeReport run_linear_branch(const RunConfig& cfg) {
    if (cfg.target == Target::primitive_hodge)
        throw std::invalid_argument("run_linear_branch: wrong target");
    MatrixCache cache(cfg.cache_dir);
    IntMatrix full = full_matrix_cached(cfg);
    if (cfg.target == Target::full_linear) {
        const SmithDecomposition dec = snf_cached(cfg, cache, "full", full);
        return nondegenerate_quotient(full, dec, "full-linear", cfg.n, cfg.d);
    }
    progress(cfg, "A1", "expanding primitive differences");
    IntMatrix a1 = primitive_intersection_matrix(full);
    const SmithDecomposition dec = snf_cached(cfg, cache, "A1", a1);
    return nondegenerate_quotient(a1, dec, "primitive-linear", cfg.n, cfg.d);
}

LatticeReport run_hodge_branch(const RunConfig& cfg) {
    const FermatParams p = cfg.params();
    mpz_class mu;
    mpz_ui_pow_ui(mu.get_mpz_t(), static_cast<unsigned long>(p.d - 1),
                  static_cast<unsigned long>(p.n + 1));
    check_hodge_budget(cfg, mu);

    MatrixCache cache(cfg.cache_dir);
    const auto sets = build_index_sets(p);
    progress(cfg, "A2", "mu=" + std::to_string(sets.mu()) +
                            " mu_check=" + std::to_string(sets.mu_check()));

    IntMatrix kernel;
    if (sets.mu_check() == 0) {
        // Degenerate case: no period conditions, every primitive class
        // is a linear Hodge class.
        progress(cfg, "A2", "no period conditions; kernel is the identity");
        kernel = IntMatrix::identity(sets.mu());
    } else {
        const std::string a2_key = cache_key("A2", cfg.n, cfg.d);
        IntMatrix a2;
        if (auto cached = cache.load(a2_key)) {
            a2 = std::move(*cached);
            progress(cfg, "A2", "loaded from cache");
        } else {
            a2 = coefficient_concatenation(q_matrix(p, sets));
            cache.store(a2_key, a2);
        }
        const SmithDecomposition a2_snf = snf_cached(cfg, cache, "A2", a2);
        kernel = a2_snf.u.row_slice(a2_snf.rank, a2.rows());
        cache.store(cache_key("X", cfg.n, cfg.d), kernel);
    }

    const std::string a3_key = cache_key("A3", cfg.n, cfg.d);
    IntMatrix a3;
    if (auto cached = cache.load(a3_key)) {
        a3 = std::move(*cached);
        progress(cfg, "A3", "loaded from cache");
    } else {
        progress(cfg, "A3", "forming " + std::to_string(kernel.rows()) + "x" +
                                std::to_string(kernel.rows()) + " Hodge intersection matrix");
        a3 = congruent_transform(kernel, pham_intersection_matrix(p));
        cache.store(a3_key, a3);
    }
    const SmithDecomposition dec = snf_cached(cfg, cache, "A3", a3);
    return nondegenerate_quotient(a3, dec, "primitive-hodge", cfg.n, cfg.d);
}

VerificationResult verify(const RunConfig& cfg) {
    RunConfig full_cfg = cfg;
    full_cfg.target = Target::full_linear;
    RunConfig prim_cfg = cfg;
    prim_cfg.target = Target::primitive_linear;
    RunConfig hodge_cfg = cfg;
    hodge_cfg.target = Target::primitive_hodge;

    VerificationResult v;
    LatticeReport full_report;
    if (cfg.jobs > 1) {
        auto hodge = std::async(std::launch::async, run_hodge_branch, hodge_cfg);
        full_report = run_linear_branch(full_cfg);
        v.linear_report = run_linear_branch(prim_cfg);
        v.hodge_report = hodge.get();
    } else {
        full_report = run_linear_branch(full_cfg);
        v.linear_report = run_linear_branch(prim_cfg);
        v.hodge_report = run_hodge_branch(hodge_cfg);
    }

    v.lists_equal = v.linear_report.divisors == v.hodge_report.divisors;
    v.table_relation_ok =
        table_relation(full_report.divisors, cfg.d) == v.linear_report.divisors;
    v.condition_eq1 = cfg.params().satisfies_degree_condition();
    return v;
}

nlohmann::json verification_to_json(const VerificationResult& v) {
    nlohmann::json j;
    j["linear_report"] = report_to_json(v.linear_report);
    j["hodge_report"] = report_to_json(v.hodge_report);
    j["verify"] = {{"lists_equal", v.lists_equal},
                   {"table_relation_ok", v.table_relation_ok},
                   {"condition_eq1", v.condition_eq1}};
    return j;
}

std::string verification_to_table(const VerificationResult& v) {
    std::ostringstream os;
    os << "linear branch:\n" << report_to_table(v.linear_report);
    os << "hodge branch:\n" << report_to_table(v.hodge_report);
    os << "divisor lists equal    : " << (v.lists_equal ? "yes" : "no") << "\n"
       << "full/primitive relation: " << (v.table_relation_ok ? "yes" : "no") << "\n"
       << "degree condition       : " << (v.condition_eq1 ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace fermat
