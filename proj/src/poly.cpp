#include "rainbow/poly.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace rainbow {

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::monomial(BigInt c, std::size_t power) {
    if (c == 0)
        return UniPoly();
    std::vector<BigInt> v(power + 1);
    v[power] = std::move(c);
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt UniPoly::coeff(std::size_t power) const {
    if (power >= coeffs_.size())
        return 0;
    return coeffs_[power];
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (BigInt& c : out.coeffs_)
        c = -c;
    return out;
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coeff(i) + other.coeff(i);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
    return *this + (-other);
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (is_zero() || other.is_zero())
        return UniPoly();
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return UniPoly(std::move(out));
}

BigInt UniPoly::eval(const BigInt& x) const {
    BigInt out = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        out = out * x + *it;
    return out;
}

UniPoly semifinal_polynomial(int t) {
    if (t < 4)
        throw domain_error("certificate needs t >= 4, got t = " + std::to_string(t));
    const auto e = static_cast<std::size_t>(t) * (t - 1) / 2;
    const BigInt q = BigInt(t) * (t - 1) * (t - 2) * (t - 3) / 8;

    const UniPoly x = UniPoly::monomial(1, 1);
    const UniPoly one = UniPoly::monomial(1, 0);
    const UniPoly corners = (x - one) * (x - UniPoly::monomial(3, 0));

    UniPoly falling = one;
    for (std::size_t l = static_cast<std::size_t>(t); l < e; ++l)
        falling = falling * (x - UniPoly::monomial(BigInt(l), 0));

    const UniPoly head = (corners - UniPoly::monomial(q, 1)) * UniPoly::monomial(1, e);
    const UniPoly tail =
        corners * falling * (UniPoly::monomial(1, static_cast<std::size_t>(t)) - x);
    return head - tail;
}

BigInt leading_gap_coefficient(int t) {
    const UniPoly p = semifinal_polynomial(t);
    const auto e = static_cast<std::size_t>(t) * (t - 1) / 2;
    if (p.coeff(e + 2) != 0)
        throw internal_error("top coefficient r^(E+2) did not cancel for t = " + std::to_string(t));
    const BigInt gap = p.coeff(e + 1);
    if (gap != BigInt(t) * (t - 1) * (t - 3) / 2)
        throw internal_error("gap coefficient mismatch at t = " + std::to_string(t));
    return gap;
}

} // namespace rainbow
