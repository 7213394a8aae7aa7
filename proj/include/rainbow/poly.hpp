#pragma once

#include <cstddef>
#include <vector>

#include "rainbow/exact.hpp"

namespace rainbow {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored dense, index = power. The zero polynomial has no coefficients and
/// degree -1; otherwise the leading coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigInt> coeffs);
    static UniPoly monomial(BigInt c, std::size_t power);

    long long degree() const noexcept { return static_cast<long long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    BigInt coeff(std::size_t power) const;
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator-(const UniPoly& other) const;
    UniPoly operator*(const UniPoly& other) const;
    bool operator==(const UniPoly& other) const noexcept { return coeffs_ == other.coeffs_; }

    BigInt eval(const BigInt& x) const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// Symbolic expansion in r of the certificate
///   ((r-1)(r-3) - q r) r^E - (r-1)(r-3) (prod_{l=t}^{E-1} (r-l)) (r^t - r)
/// with E = t(t-1)/2 and q = t(t-1)(t-2)(t-3)/8. q is an integer, so the
/// coefficients are integers with no scaling applied; evaluating at r gives
/// semifinal_value(t, r) exactly.
UniPoly semifinal_polynomial(int t);

/// Coefficient of r^(E+1) in semifinal_polynomial(t), after asserting that
/// the coefficient of r^(E+2) vanishes. Both facts are checked against the
/// closed forms (0 and t(t-1)(t-3)/2); a mismatch throws internal_error.
BigInt leading_gap_coefficient(int t);

} // namespace rainbow
