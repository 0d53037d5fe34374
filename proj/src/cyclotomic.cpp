#include "fermatlat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace fermat {

unsigned long euler_phi(unsigned long d) {
    if (d == 0) throw std::invalid_argument("euler_phi(0)");
    unsigned long result = d;
    unsigned long m = d;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using Poly = std::vector<mpz_class>;  // low degree first

// Exact quotient a / b for monic b; remainder must vanish.
Poly divide_exact(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw std::logic_error("cyclotomic division underflow");
    Poly q(a.size() - db);
    for (std::size_t i = a.size(); i-- > db;) {
        mpz_class c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (const auto& r : a)
        if (r != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

// Reduce p in place modulo the monic polynomial phi; result has
// degree < deg(phi).
void reduce_mod(Poly& p, const Poly& phi) {
    const std::size_t dphi = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > dphi;) {
        mpz_class c = p[i];
        if (c == 0) continue;
        p[i] = 0;
        for (std::size_t j = 0; j < dphi; ++j) p[i - dphi + j] -= c * phi[j];
    }
    p.resize(dphi);
}

const Poly& cached_cyclotomic(unsigned long d) {
    static std::map<unsigned long, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, cyclotomic_polynomial(d)).first;
    return it->second;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned long d) {
    if (d == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
    Poly num(d + 1);
    num[0] = -1;
    num[d] = 1;  // x^d - 1
    for (unsigned long e = 1; e < d; ++e) {
        if (d % e == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(e));
    }
    return num;
}

CyclotomicInt::CyclotomicInt(unsigned long d) : d_(d), coeffs_(euler_phi(d)) {}

CyclotomicInt::CyclotomicInt(unsigned long d, std::vector<mpz_class> coeffs)
    : d_(d), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != euler_phi(d_))
        throw std::invalid_argument("CyclotomicInt: coefficient count != phi(d)");
}

CyclotomicInt CyclotomicInt::from_integer(unsigned long d, const mpz_class& v) {
    CyclotomicInt r(d);
    r.coeffs_[0] = v;
    return r;
}

bool CyclotomicInt::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.d_ != b.d_) throw std::invalid_argument("cyclotomic modulus mismatch");
    CyclotomicInt r(a.d_);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.d_ != b.d_) throw std::invalid_argument("cyclotomic modulus mismatch");
    CyclotomicInt r(a.d_);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.d_ != b.d_) throw std::invalid_argument("cyclotomic modulus mismatch");
    const std::size_t n = a.coeffs_.size();
    std::vector<mpz_class> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[j].get_mpz_t());
        }
    }
    reduce_mod(prod, cached_cyclotomic(a.d_));
    return CyclotomicInt(a.d_, std::move(prod));
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    return a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
}

bool operator!=(const CyclotomicInt& a, const CyclotomicInt& b) { return !(a == b); }

CyclotomicInt zeta_power(long k, unsigned long d) {
    long r = k % static_cast<long>(d);
    if (r < 0) r += static_cast<long>(d);
    Poly p(static_cast<std::size_t>(r) + 1);
    p.back() = 1;
    const Poly& phi = cached_cyclotomic(d);
    if (p.size() >= phi.size()) {
        reduce_mod(p, phi);
    } else {
        p.resize(phi.size() - 1);
    }
    return CyclotomicInt(d, std::move(p));
}

}  // namespace fermat
