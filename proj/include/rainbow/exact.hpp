#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "rainbow/errors.hpp"

namespace rainbow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(long long n);

/// Standard convention: 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

BigInt int_pow(const BigInt& base, long long exp);

/// Fraction of colorings of a fixed e-edge set, over all r^e assignments,
/// in which the e colors are pairwise distinct: C(r,e) * e! / r^e.
/// Zero when r < e.
Rational baseline_proportion(int r, long long e);

/// Expected number of rainbow K_t in a uniform r-coloring of K_n:
/// C(n,t) * baseline_proportion(r, C(t,2)).
Rational expected_random_count(long long n, int t, int r);

/// Rainbow K_t copies guaranteed in the depth-k blow-up of a b-vertex base
/// containing a rainbow copies: a * (b^(t*k) - b^k) / (b^t - b).
/// The value is an integer for integer a; it is returned as a rational to
/// keep the closed form literal.
Rational blowup_lower_bound(const BigInt& a, int b, int t, int k);

/// Threshold the base count must beat for the blow-up family to outgrow the
/// random baseline: b * (b^(t-1) - 1) * C(r,e) * e! / (t! * r^e), e = C(t,2).
Rational criterion_rhs(int b, int t, int r);
bool criterion_holds(const BigInt& a, int b, int t, int r);

/// Asymptotic rainbow proportion certified by the blow-up family:
/// a * t! / (b^t - b).
Rational mrb_lower_bound(const BigInt& a, int b, int t);

/// Upper bounds on non-rainbow copies inside the r-class parallel coloring:
/// r * C(floor(r/2), 2) for K_4, times C(r-4, t-4) for K_t.
BigInt nonrainbow_bound_k4(int r);
BigInt nonrainbow_bound_kt(int r, int t);

/// C(r,t) * (1 - r * t(t-1)(t-2)(t-3) / (8 (r-1)(r-3))). May be negative
/// (vacuous) at small r; returned as-is, never clamped.
Rational rainbow_count_lower_bound(int t, int r);

/// Exact value of the integer certificate whose positivity implies the
/// blow-up criterion holds with base b = r:
///   ((r-1)(r-3) - r * t(t-1)(t-2)(t-3)/8) * r^(t(t-1)/2)
///   - (r-1)(r-3) * prod_{l=t}^{t(t-1)/2 - 1} (r-l) * (r^t - r).
/// t(t-1)(t-2)(t-3) is a product of four consecutive integers, hence
/// divisible by 8, so the value is an integer with no scaling applied.
BigInt semifinal_value(int t, int r);
bool semifinal_holds(int t, int r);

} // namespace rainbow
