#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace fermat {

unsigned long euler_phi(unsigned long d);

/// Monic cyclotomic polynomial Phi_d, coefficients low degree first,
/// degree phi(d). Computed by the divisor recursion
/// Phi_d = (x^d - 1) / prod_{e|d, e<d} Phi_e with exact division.
std::vector<mpz_class> cyclotomic_polynomial(unsigned long d);

/// Element of Z[zeta_d] on the power basis 1, zeta, ..., zeta^{phi(d)-1}.
/// The representation is canonical: equality is coefficientwise.
class CyclotomicInt {
public:
    explicit CyclotomicInt(unsigned long d);  // zero element
    CyclotomicInt(unsigned long d, std::vector<mpz_class> coeffs);

    static CyclotomicInt from_integer(unsigned long d, const mpz_class& v);

    unsigned long modulus() const { return d_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& coeff(std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const;

    friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b);
    friend CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b);
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);
    friend bool operator!=(const CyclotomicInt& a, const CyclotomicInt& b);

private:
    unsigned long d_;
    std::vector<mpz_class> coeffs_;  // length phi(d)
};

/// Canonical representative of zeta_d^k (k may be negative; reduced mod d).
CyclotomicInt zeta_power(long k, unsigned long d);

}  // namespace fermat
