#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "fermatlat/cache.hpp"
#include "fermatlat/errors.hpp"
#include "fermatlat/hodge_cycles.hpp"
#include "fermatlat/lattice.hpp"
#include "fermatlat/linear_cycles.hpp"

#include "json.hpp"

namespace fermat {

enum class Target { full_linear, primitive_linear, primitive_hodge };
enum class OutputFormat { json, csv, table };

constexpr std::uint64_t kDefaultMaxCycles = 20000;
constexpr std::uint64_t kDefaultMaxMu = 4096;
constexpr std::uint64_t kDefaultMemoryBudgetMb = 512;

struct RunConfig {
    int n = 2;
    int d = 3;
    Target target = Target::full_linear;
    std::filesystem::path cache_dir;  ///< empty disables caching
    int jobs = 1;
    std::uint64_t max_cycles = kDefaultMaxCycles;
    std::uint64_t max_mu = kDefaultMaxMu;
    std::uint64_t memory_budget_mb = kDefaultMemoryBudgetMb;
    bool quiet = false;  ///< suppress stage progress on stderr

    FermatParams params() const { return {n, d}; }
};

struct VerificationResult {
    LatticeReport linear_report;  ///< primitive linear-cycle lattice
    LatticeReport hodge_report;   ///< primitive Hodge-cycle lattice
    bool lists_equal = false;
    bool table_relation_ok = false;
    bool condition_eq1 = false;  ///< degree condition for the integral-Hodge implication
};

/// Enumerate cycles, assemble the requested intersection matrix (full
/// or primitive), reduce, and report. Refuses with ResourceCapError
/// before allocating anything large.
LatticeReport run_linear_branch(const RunConfig& cfg);

/// Index sets -> period matrix -> coefficient concatenation -> kernel
/// -> intersection matrix of primitive Hodge cycles -> report.
LatticeReport run_hodge_branch(const RunConfig& cfg);

/// Run both branches and compare their elementary-divisor lists; also
/// check the full-vs-primitive divisor relation and the degree
/// condition.
VerificationResult verify(const RunConfig& cfg);

nlohmann::json verification_to_json(const VerificationResult& v);
std::string verification_to_table(const VerificationResult& v);

}  // namespace fermat
