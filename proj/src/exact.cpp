#include "rainbow/exact.hpp"

#include <string>

namespace rainbow {

BigInt factorial(long long n) {
    if (n < 0)
        throw domain_error("factorial of negative argument " + std::to_string(n));
    BigInt out = 1;
    for (long long i = 2; i <= n; ++i)
        out *= i;
    return out;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

BigInt int_pow(const BigInt& base, long long exp) {
    if (exp < 0)
        throw domain_error("negative exponent " + std::to_string(exp));
    BigInt out = 1;
    BigInt b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1)
            out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

namespace {

long long edges_of(int t) {
    return static_cast<long long>(t) * (t - 1) / 2;
}

void check_bt(int b, int t) {
    if (t < 2)
        throw domain_error("clique order must be >= 2, got t = " + std::to_string(t));
    if (b < t)
        throw domain_error("base order must be >= clique order, got b = " + std::to_string(b) +
                           " < t = " + std::to_string(t));
}

void check_tr_semifinal(int t, int r) {
    if (t < 4)
        throw domain_error("certificate needs t >= 4, got t = " + std::to_string(t));
    if (r < edges_of(t))
        throw domain_error("certificate needs r >= t(t-1)/2, got r = " + std::to_string(r));
}

} // namespace

Rational baseline_proportion(int r, long long e) {
    if (r < 1)
        throw domain_error("palette size must be >= 1, got r = " + std::to_string(r));
    if (e < 0)
        throw domain_error("edge count must be >= 0, got e = " + std::to_string(e));
    return Rational(binomial(r, e) * factorial(e), int_pow(r, e));
}

Rational expected_random_count(long long n, int t, int r) {
    if (t < 2)
        throw domain_error("clique order must be >= 2, got t = " + std::to_string(t));
    if (n < t)
        throw domain_error("host must have at least t vertices, got n = " + std::to_string(n));
    return Rational(binomial(n, t)) * baseline_proportion(r, edges_of(t));
}

Rational blowup_lower_bound(const BigInt& a, int b, int t, int k) {
    if (b < 2)
        throw domain_error("base order must be >= 2, got b = " + std::to_string(b));
    if (t < 2)
        throw domain_error("clique order must be >= 2, got t = " + std::to_string(t));
    if (k < 0)
        throw domain_error("depth must be >= 0, got k = " + std::to_string(k));
    if (a < 0)
        throw domain_error("base rainbow count must be >= 0");
    const BigInt bt = int_pow(b, t);
    if (bt == b)
        throw domain_error("b^t = b leaves the bound undefined");
    return Rational(a * (int_pow(bt, k) - int_pow(b, k)), bt - b);
}

Rational criterion_rhs(int b, int t, int r) {
    check_bt(b, t);
    const BigInt growth = BigInt(b) * (int_pow(b, t - 1) - 1);
    return Rational(growth) * baseline_proportion(r, edges_of(t)) / Rational(factorial(t));
}

bool criterion_holds(const BigInt& a, int b, int t, int r) {
    return Rational(a) > criterion_rhs(b, t, r);
}

Rational mrb_lower_bound(const BigInt& a, int b, int t) {
    check_bt(b, t);
    if (a < 0)
        throw domain_error("base rainbow count must be >= 0");
    return Rational(a * factorial(t), int_pow(b, t) - b);
}

BigInt nonrainbow_bound_k4(int r) {
    if (r < 6)
        throw domain_error("K4 bound needs r >= 6, got r = " + std::to_string(r));
    return BigInt(r) * binomial(r / 2, 2);
}

BigInt nonrainbow_bound_kt(int r, int t) {
    if (t < 4)
        throw domain_error("K_t bound needs t >= 4, got t = " + std::to_string(t));
    if (r < edges_of(t))
        throw domain_error("K_t bound needs r >= t(t-1)/2, got r = " + std::to_string(r));
    return nonrainbow_bound_k4(r) * binomial(r - 4, t - 4);
}

Rational rainbow_count_lower_bound(int t, int r) {
    check_tr_semifinal(t, r);
    const BigInt tttt = BigInt(t) * (t - 1) * (t - 2) * (t - 3);
    const Rational subtracted(BigInt(r) * tttt, BigInt(8) * (r - 1) * (r - 3));
    return Rational(binomial(r, t)) * (1 - subtracted);
}

BigInt semifinal_value(int t, int r) {
    check_tr_semifinal(t, r);
    // Four consecutive integers contain two evens, one divisible by 4.
    const BigInt tttt = BigInt(t) * (t - 1) * (t - 2) * (t - 3);
    if (tttt % 8 != 0)
        throw internal_error("t(t-1)(t-2)(t-3) not divisible by 8");
    const BigInt head = (BigInt(r - 1) * (r - 3) - BigInt(r) * (tttt / 8)) * int_pow(r, edges_of(t));
    BigInt falling = 1;
    for (long long l = t; l < edges_of(t); ++l)
        falling *= r - l;
    const BigInt tail = BigInt(r - 1) * (r - 3) * falling * (int_pow(r, t) - r);
    return head - tail;
}

bool semifinal_holds(int t, int r) {
    return semifinal_value(t, r) > 0;
}

} // namespace rainbow
