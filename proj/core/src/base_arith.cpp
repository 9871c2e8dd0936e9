#include "zelred/base_arith.hpp"

#include <string>

namespace zelred {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::int64_t order_mod(std::int64_t q, std::int64_t ell) {
    if (ell < 2) throw ConfigError("ell must be at least 2");
    if (q <= 0) throw ConfigError("q must be positive");
    const std::int64_t base = q % ell;
    if (base == 0) throw ConfigError("q is divisible by ell");
    std::int64_t x = base;
    for (std::int64_t e = 1; e <= ell; ++e) {
        if (x == 1 % ell) return e;
        x = (x * base) % ell;
    }
    throw ConfigError("q has no multiplicative order modulo ell");
}

CuspidalDatum make_datum(int g, int ell, std::int64_t q, std::optional<int> epsilon) {
    if (g < 1) throw ConfigError("g must be positive");
    if (!is_prime(ell)) throw ConfigError("ell must be prime: " + std::to_string(ell));
    const auto e = order_mod(q, ell);
    const int eps = epsilon.value_or(static_cast<int>(e));
    if (eps < 1 || e % eps != 0)
        throw ConfigError("epsilon " + std::to_string(eps) + " does not divide e_ell(q) = " +
                          std::to_string(e));
    CuspidalDatum d;
    d.g = g;
    d.ell = ell;
    d.q = q;
    d.epsilon = eps;
    d.m = eps > 1 ? eps : ell;
    return d;
}

CuspidalDatum abstract_datum(int ell, int m, int g) {
    if (g < 1) throw ConfigError("g must be positive");
    if (!is_prime(ell)) throw ConfigError("ell must be prime: " + std::to_string(ell));
    if (m < 2) throw ConfigError("m must be at least 2");
    CuspidalDatum d;
    d.g = g;
    d.ell = ell;
    d.q = 0;
    d.epsilon = m == ell ? 1 : m;
    d.m = m;
    return d;
}

CuspidalDatum datum_for_shape(int m, int ell) {
    if (!is_prime(ell)) throw ConfigError("ell must be prime: " + std::to_string(ell));
    for (std::int64_t q = 2; q < 200; ++q) {
        if (q % ell == 0) continue;
        if (m == ell) return make_datum(1, ell, q, 1);
        if (m > 1 && order_mod(q, ell) % m == 0) return make_datum(1, ell, q, m);
    }
    return abstract_datum(ell, m);
}

bool is_banal(const CuspidalDatum& datum, int d) {
    if (datum.abstract()) throw ConfigError("banality needs a concrete q");
    return order_mod(datum.q, datum.ell) > d;
}

DigitDecomposition digit_decompose(int m, int ell, std::int64_t s) {
    if (s < 0) throw ConfigError("s must be non-negative");
    if (m < 1 || ell < 2) throw ConfigError("invalid line shape");
    DigitDecomposition dd;
    dd.s = s;
    dd.m_minus1 = static_cast<int>(s % m);
    std::int64_t rest = s / m;
    while (rest > 0) {
        dd.digits.push_back(static_cast<int>(rest % ell));
        rest /= ell;
    }
    return dd;
}

DigitDecomposition digit_decompose(const CuspidalDatum& datum, std::int64_t s) {
    return digit_decompose(datum.m, datum.ell, s);
}

std::int64_t recompose(const DigitDecomposition& dd, int m, int ell) {
    std::int64_t total = dd.m_minus1;
    std::int64_t w = m;
    for (int digit : dd.digits) {
        total += digit * w;
        w *= ell;
    }
    return total;
}

}  // namespace zelred
