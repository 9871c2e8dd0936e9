#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "zelred/base_arith.hpp"

namespace zelred {

// Finitely supported level sequence (i_0, i_1, ...). Missing entries read as zero.
struct LevelIndex {
    std::vector<int> entries;

    int at(std::size_t k) const { return k < entries.size() ? entries[k] : 0; }
    bool is_zero() const;
    // Sum of i_k ell^k.
    std::int64_t value(int ell) const;
    std::string str() const;  // dense list "[i_0, ..., i_u]"

    // Inverse-lexicographic: the highest differing index decides.
    friend std::strong_ordering operator<=>(const LevelIndex& a, const LevelIndex& b);
    friend bool operator==(const LevelIndex& a, const LevelIndex& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }
};

// m(rho) * i(ell).
std::int64_t level_mass(const CuspidalDatum& datum, const LevelIndex& i);
// s - m(rho) * i(ell).
std::int64_t s_rho(const CuspidalDatum& datum, std::int64_t s, const LevelIndex& i);

// Number of entries used for indices of size s: max(1, number of base-ell digits of s / m).
std::size_t level_width(int m, int ell, std::int64_t s);

std::vector<LevelIndex> enumerate_index_set(int m, int ell, std::int64_t s);
std::vector<LevelIndex> enumerate_index_set(const CuspidalDatum& datum, std::int64_t s);

// Indices with sum_{k>=r} (m_k - i_k) ell^{k-r} >= 0 for every r.
std::vector<LevelIndex> enumerate_digit_set(const std::vector<int>& digits, int ell);

LevelIndex cuspidal_level_of_product(const std::vector<LevelIndex>& levels);

}  // namespace zelred
