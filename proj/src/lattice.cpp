#include "fermatlat/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace fermat {

std::vector<std::pair<mpz_class, std::size_t>> group_divisors(const DivisorList& divisors) {
    std::vector<std::pair<mpz_class, std::size_t>> out;
    for (const auto& v : divisors) {
        if (!out.empty() && out.back().first == v)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

int discriminant_sign(const IntMatrix& a, const SmithDecomposition& dec) {
    (void)a;
    return unimodular_sign(dec.u) * unimodular_sign(dec.t);
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        out.push_back(p);
        while (v % p == 0) v /= p;
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace

LatticeReport nondegenerate_quotient(const IntMatrix& a, const SmithDecomposition& dec,
                                     std::string source, int n, int d) {
    if (!a.is_symmetric())
        throw std::invalid_argument("nondegenerate_quotient: Gram matrix must be symmetric");
    LatticeReport r;
    r.source = std::move(source);
    r.n = n;
    r.d = d;
    r.rank = dec.rank;
    r.divisors = dec.divisors;
    r.sign = discriminant_sign(a, dec);
    for (std::uint64_t p : prime_factors(static_cast<std::uint64_t>(d)))
        r.mod_p_ranks[p] = rank_mod_p(r.divisors, p);
    return r;
}

LatticeReport nondegenerate_quotient(const IntMatrix& a, std::string source, int n, int d) {
    if (!a.is_symmetric())
        throw std::invalid_argument("nondegenerate_quotient: Gram matrix must be symmetric");
    return nondegenerate_quotient(a, smith_decomposition(a), std::move(source), n, d);
}

std::size_t rank_mod_p(const DivisorList& divisors, std::uint64_t p) {
    mpz_class pz(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("rank_mod_p: p is not prime");
    std::size_t s = 0;
    for (const auto& a : divisors)
        if (!mpz_divisible_p(a.get_mpz_t(), pz.get_mpz_t())) ++s;
    return s;
}

DivisorList table_relation(const DivisorList& full_divisors, int d) {
    const std::size_t ones =
        static_cast<std::size_t>(std::count(full_divisors.begin(), full_divisors.end(), 1));
    if (ones < 2)
        throw std::invalid_argument(
            "table_relation: full lattice has fewer than two unit divisors");
    DivisorList out;
    out.reserve(full_divisors.size() - 1);
    std::size_t dropped = 0;
    for (const auto& v : full_divisors) {
        if (v == 1 && dropped < 2) {
            ++dropped;
            continue;
        }
        out.push_back(v);
    }
    out.push_back(mpz_class(d));
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_discriminant(const LatticeReport& r) {
    std::ostringstream os;
    os << (r.sign > 0 ? '+' : '-');
    if (r.divisors.empty()) {
        os << '1';
        return os.str();
    }
    bool first = true;
    for (const auto& [value, mult] : group_divisors(r.divisors)) {
        if (!first) os << '*';
        os << value.get_str() << '^' << mult;
        first = false;
    }
    return os.str();
}

nlohmann::json report_to_json(const LatticeReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["source"] = r.source;
    j["rank"] = r.rank;
    nlohmann::json divs = nlohmann::json::array();
    for (const auto& [value, mult] : group_divisors(r.divisors))
        divs.push_back({value.get_str(), mult});
    j["divisors"] = divs;
    j["sign"] = r.sign;
    nlohmann::json ranks = nlohmann::json::object();
    for (const auto& [p, s] : r.mod_p_ranks) ranks[std::to_string(p)] = s;
    j["mod_p_ranks"] = ranks;
    return j;
}

std::string report_to_csv(const LatticeReport& r, bool header) {
    std::ostringstream os;
    if (header) os << "n,d,source,rank,discriminant\n";
    os << r.n << ',' << r.d << ',' << r.source << ',' << r.rank << ','
       << format_discriminant(r) << '\n';
    return os.str();
}

std::string report_to_table(const LatticeReport& r) {
    std::ostringstream os;
    os << "lattice      : " << r.source << "\n"
       << "(n, d)       : (" << r.n << ", " << r.d << ")\n"
       << "rank         : " << r.rank << "\n"
       << "discriminant : " << format_discriminant(r) << "\n";
    for (const auto& [p, s] : r.mod_p_ranks)
        os << "rank mod " << p << "   : " << s << "\n";
    return os.str();
}

}  // namespace fermat
