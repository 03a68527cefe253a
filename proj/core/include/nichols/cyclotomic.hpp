#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "nichols/scalar.hpp"

namespace nichols {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact arithmetic in Q(zeta_L). Elements are coefficient vectors of length
/// phi(L) w.r.t. the power basis, reduced modulo the L-th cyclotomic polynomial.
class CycField {
  public:
    explicit CycField(std::int64_t L);

    std::int64_t order() const { return L_; }
    std::int64_t degree() const { return phi_; }

    using Elem = std::vector<Rational>;

    Elem zero() const { return Elem(phi_, Rational(0)); }
    Elem from_rational(const Rational& r) const;
    Elem root_power(std::int64_t k) const;  // zeta_L^k reduced
    Elem from_scalar(const ScalarContext& ctx, const Scalar& a) const;

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;  // throws on zero
    Elem div(const Elem& a, const Elem& b) const;

    /// Rank over Q(zeta_L) by fraction-free (Bareiss-style) elimination.
    int matrix_rank(std::vector<std::vector<Elem>> m) const;

    const std::vector<BigInt>& minimal_polynomial() const { return cyclo_; }

  private:
    std::int64_t L_;
    std::int64_t phi_;
    std::vector<BigInt> cyclo_;              // monic, degree phi_
    std::vector<Elem> power_reduction_;      // x^(phi_+j) reduced, j = 0..phi_-2
};

struct cyclotomic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficients of the L-th cyclotomic polynomial (index = degree).
std::vector<BigInt> cyclotomic_polynomial(std::int64_t L);

std::int64_t euler_phi(std::int64_t n);

}  // namespace nichols
