#include "zelred/levels.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace zelred {

bool LevelIndex::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](int v) { return v == 0; });
}

std::int64_t LevelIndex::value(int ell) const {
    std::int64_t total = 0;
    std::int64_t w = 1;
    for (int v : entries) {
        total += v * w;
        w *= ell;
    }
    return total;
}

std::string LevelIndex::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < entries.size(); ++k) os << (k ? ", " : "") << entries[k];
    os << ']';
    return os.str();
}

std::strong_ordering operator<=>(const LevelIndex& a, const LevelIndex& b) {
    const std::size_t n = std::max(a.entries.size(), b.entries.size());
    for (std::size_t k = n; k-- > 0;) {
        if (auto c = a.at(k) <=> b.at(k); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::int64_t level_mass(const CuspidalDatum& datum, const LevelIndex& i) {
    return static_cast<std::int64_t>(datum.m) * i.value(datum.ell);
}

std::int64_t s_rho(const CuspidalDatum& datum, std::int64_t s, const LevelIndex& i) {
    return s - level_mass(datum, i);
}

std::size_t level_width(int m, int ell, std::int64_t s) {
    return std::max<std::size_t>(1, digit_decompose(m, ell, s).digits.size());
}

std::vector<LevelIndex> enumerate_index_set(int m, int ell, std::int64_t s) {
    if (s < 0) throw ConfigError("s must be non-negative");
    const std::size_t width = level_width(m, ell, s);
    std::vector<LevelIndex> out;
    LevelIndex cur;
    cur.entries.assign(width, 0);
    // Budget counts multiples of m still available.
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t budget) {
        if (k == width) {
            out.push_back(cur);
            return;
        }
        const std::int64_t w = ipow(ell, static_cast<int>(k));
        for (std::int64_t v = 0; v * w <= budget; ++v) {
            cur.entries[k] = static_cast<int>(v);
            rec(k + 1, budget - v * w);
        }
        cur.entries[k] = 0;
    };
    rec(0, s / m);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LevelIndex> enumerate_index_set(const CuspidalDatum& datum, std::int64_t s) {
    return enumerate_index_set(datum.m, datum.ell, s);
}

std::vector<LevelIndex> enumerate_digit_set(const std::vector<int>& digits, int ell) {
    for (int d : digits)
        if (d < 0 || d >= ell) throw ConfigError("digit out of range");
    const std::size_t width = std::max<std::size_t>(1, digits.size());
    auto digit = [&](std::size_t k) { return k < digits.size() ? digits[k] : 0; };
    std::vector<LevelIndex> out;
    LevelIndex cur;
    cur.entries.assign(width, 0);
    // suffix = sum_{k>r} (m_k - i_k) ell^{k-r-1}; choose i_k from the top down.
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t suffix) {
        const std::int64_t cap = digit(k) + static_cast<std::int64_t>(ell) * suffix;
        for (std::int64_t v = 0; v <= cap; ++v) {
            cur.entries[k] = static_cast<int>(v);
            if (k == 0)
                out.push_back(cur);
            else
                rec(k - 1, cap - v);
        }
        cur.entries[k] = 0;
    };
    rec(width - 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

LevelIndex cuspidal_level_of_product(const std::vector<LevelIndex>& levels) {
    LevelIndex sum;
    for (const auto& l : levels) {
        if (l.entries.size() > sum.entries.size()) sum.entries.resize(l.entries.size(), 0);
        for (std::size_t k = 0; k < l.entries.size(); ++k) sum.entries[k] += l.entries[k];
    }
    if (sum.entries.empty()) sum.entries.push_back(0);
    return sum;
}

}  // namespace zelred
