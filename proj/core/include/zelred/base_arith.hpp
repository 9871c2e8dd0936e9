#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace zelred {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A cuspidal base: everything in the library is expressed relative to one.
// q == 0 marks an abstract line shape whose residue cardinality is unspecified.
struct CuspidalDatum {
    int g = 1;
    int ell = 2;
    std::int64_t q = 0;
    int epsilon = 1;
    int m = 2;

    bool abstract() const { return q == 0; }
    friend bool operator==(const CuspidalDatum&, const CuspidalDatum&) = default;
};

struct DigitDecomposition {
    std::int64_t s = 0;
    int m_minus1 = 0;
    std::vector<int> digits;  // m_0, ..., m_u without trailing zeros

    int digit(std::size_t k) const { return k < digits.size() ? digits[k] : 0; }
};

bool is_prime(std::int64_t n);

// Least e >= 1 with q^e = 1 mod ell.
std::int64_t order_mod(std::int64_t q, std::int64_t ell);

// Validated constructor; epsilon defaults to order_mod(q, ell).
CuspidalDatum make_datum(int g, int ell, std::int64_t q, std::optional<int> epsilon = std::nullopt);

// Line shape with prescribed (ell, m): epsilon = 1 when m == ell, epsilon = m otherwise.
CuspidalDatum abstract_datum(int ell, int m, int g = 1);

// Datum with the given (m, ell): the smallest q in [2, 200) realizing it, else abstract_datum.
CuspidalDatum datum_for_shape(int m, int ell);

bool is_banal(const CuspidalDatum& datum, int d);

DigitDecomposition digit_decompose(int m, int ell, std::int64_t s);
DigitDecomposition digit_decompose(const CuspidalDatum& datum, std::int64_t s);
std::int64_t recompose(const DigitDecomposition& dd, int m, int ell);

std::int64_t ipow(std::int64_t base, int exp);

}  // namespace zelred
