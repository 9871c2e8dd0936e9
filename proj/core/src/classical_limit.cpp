#include "zelred/classical_limit.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace zelred {

void Regime::require(int d) const {
    if (ell < 2) throw RegimeError("ell must be at least 2");
    if (q <= 0 || q % ell != 1 % ell) throw RegimeError("classical limit needs q = 1 mod ell");
    if (d >= ell) throw RegimeError("classical limit needs d < ell, got d = " + std::to_string(d));
}

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_size(const Partition& p) {
    int n = 0;
    for (int r : p) n += r;
    return n;
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int col = 0; col < p.front(); ++col) {
        int h = 0;
        while (h < static_cast<int>(p.size()) && p[static_cast<std::size_t>(h)] > col) ++h;
        c.push_back(h);
    }
    return c;
}

std::string partition_str(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

std::vector<Partition> partitions(int d) {
    if (d < 0) throw std::invalid_argument("partition size must be non-negative");
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

std::int64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial out of range");
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::int64_t hook_dimension(const Partition& p) {
    if (!is_partition(p)) throw std::invalid_argument("not a partition: " + partition_str(p));
    const Partition c = conjugate(p);
    const std::int64_t num = factorial(partition_size(p));
    std::int64_t hooks = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j)
            hooks *= (p[i] - j - 1) + (c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    return num / hooks;
}

Decomposition borel_induction_decomposition(int d, const std::optional<Regime>& regime) {
    if (regime) regime->require(d);
    Decomposition out;
    for (const auto& p : partitions(d)) out[p] = hook_dimension(p);
    return out;
}

Decomposition induct_diagrams(const Partition& dy1, const Partition& dy2) {
    if (!is_partition(dy1) || !is_partition(dy2)) throw std::invalid_argument("not a partition");
    Decomposition out;
    const std::size_t rows = dy1.size() + dy2.size();
    std::vector<int> shape(dy1.begin(), dy1.end());
    shape.resize(rows, 0);
    // added[r][k]: boxes labelled k + 1 placed in row r.
    std::vector<std::vector<int>> added(rows, std::vector<int>(dy2.size(), 0));

    auto lattice_ok = [&]() {
        std::vector<int> seen(dy2.size(), 0);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t k = dy2.size(); k-- > 0;) {
                for (int c = 0; c < added[r][k]; ++c) {
                    ++seen[k];
                    if (k > 0 && seen[k] > seen[k - 1]) return false;
                }
            }
        }
        return true;
    };

    std::function<void(std::size_t)> place_label;
    // Distribute the boxes of label k as a horizontal strip, row by row.
    std::function<void(std::size_t, std::size_t, int, const std::vector<int>&)> strip =
        [&](std::size_t k, std::size_t r, int left, const std::vector<int>& before) {
            if (r == rows) {
                if (left == 0) place_label(k + 1);
                return;
            }
            const int room = r == 0 ? left : std::min(left, before[r - 1] - before[r]);
            for (int c = room; c >= 0; --c) {
                shape[r] = before[r] + c;
                added[r][k] = c;
                strip(k, r + 1, left - c, before);
            }
            shape[r] = before[r];
            added[r][k] = 0;
        };
    place_label = [&](std::size_t k) {
        if (k == dy2.size()) {
            if (!lattice_ok()) return;
            Partition p;
            for (int v : shape)
                if (v > 0) p.push_back(v);
            ++out[p];
            return;
        }
        const std::vector<int> before = shape;
        strip(k, 0, dy2[k], before);
        shape = before;
    };
    place_label(0);
    return out;
}

std::vector<ArrowRun> parse_pattern(const std::string& text) {
    std::vector<ArrowRun> runs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.size() < 2 || (item[0] != '<' && item[0] != '>'))
            throw UnsupportedPattern("malformed arrow run: '" + item + "'");
        ArrowRun run;
        run.left = item[0] == '<';
        try {
            std::size_t used = 0;
            run.length = std::stoi(item.substr(1), &used);
            if (used != item.size() - 1) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UnsupportedPattern("malformed arrow run: '" + item + "'");
        }
        if (run.length < 0) throw UnsupportedPattern("negative arrow length: '" + item + "'");
        runs.push_back(run);
    }
    if (runs.empty()) throw UnsupportedPattern("empty arrow pattern");
    return runs;
}

Decomposition add(const Decomposition& a, const Decomposition& b) {
    Decomposition out = a;
    for (const auto& [p, m] : b) {
        out[p] += m;
        if (out[p] == 0) out.erase(p);
    }
    return out;
}

Decomposition sub(const Decomposition& a, const Decomposition& b) {
    Decomposition neg;
    for (const auto& [p, m] : b) neg[p] = -m;
    return add(a, neg);
}

namespace {

Partition column(int n) { return Partition(static_cast<std::size_t>(n), 1); }
Partition row(int n) { return n > 0 ? Partition{n} : Partition{}; }

// Diagram of the elliptic with k right arrows among s - 1, via DY(k+1) = row(k+1) x column(s-1-k) - DY(k).
Decomposition hook_recurrence(int s, int k) {
    Decomposition dy{{column(s), 1}};
    for (int step = 0; step < k; ++step) dy = sub(induct_diagrams(row(step + 1), column(s - 1 - step)), dy);
    return dy;
}

}  // namespace

Decomposition elliptic_reduction_classical(const std::vector<ArrowRun>& pattern, const std::optional<Regime>& regime) {
    int d = 1;
    for (const auto& r : pattern) d += r.length;
    if (regime) regime->require(d);
    if (pattern.size() == 1) return hook_recurrence(d, pattern[0].left ? 0 : pattern[0].length);
    if (pattern.size() == 2 && pattern[0].left != pattern[1].left) {
        const int right = pattern[0].left ? pattern[1].length : pattern[0].length;
        return hook_recurrence(d, right);
    }
    if (pattern.size() == 3 && pattern[0].left && !pattern[1].left && pattern[2].left && pattern[0].length == 1 &&
        pattern[1].length == 1 && pattern[2].length == 1) {
        // Recorded decomposition of the single three-run case.
        return Decomposition{{Partition{2, 1, 1}, 1}, {Partition{2, 2}, 1}};
    }
    std::string text;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        text += (i ? "," : "") + std::string(pattern[i].left ? "<" : ">") + std::to_string(pattern[i].length);
    throw UnsupportedPattern("no reduction rule for arrow pattern " + text);
}

GrothElement to_groth(const Decomposition& d) {
    GrothElement e;
    for (const auto& [p, m] : d) e.add_term(partition_str(p), m);
    return e;
}

std::string decomposition_json(const Decomposition& d) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        os << (first ? "" : ", ") << "{\"partition\": [";
        for (std::size_t i = 0; i < it->first.size(); ++i) os << (i ? ", " : "") << it->first[i];
        os << "], \"mult\": " << it->second << '}';
        first = false;
    }
    os << ']';
    return os.str();
}

std::int64_t centralizer_order(const Partition& cycle_type) {
    std::map<int, int> counts;
    for (int c : cycle_type) ++counts[c];
    std::int64_t z = 1;
    for (const auto& [len, mult] : counts) {
        for (int i = 0; i < mult; ++i) z *= len;
        z *= factorial(mult);
    }
    return z;
}

namespace {

// Murnaghan-Nakayama on beta-sets: removing an r-rim hook moves one bead down by r.
std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
    if (partition_size(lambda) != partition_size(mu)) throw std::invalid_argument("size mismatch");
    if (mu.empty()) return 1;
    const int n = static_cast<int>(lambda.size());
    std::vector<int> beta;
    for (int i = 0; i < n; ++i) beta.push_back(lambda[static_cast<std::size_t>(i)] + (n - 1 - i));
    const int r = mu.front();
    const Partition rest(mu.begin() + 1, mu.end());
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int target = b - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int x : beta)
            if (x > target && x < b) ++between;
        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        Partition smaller;
        const int len = static_cast<int>(nb.size());
        for (int j = 0; j < len; ++j) {
            const int part = nb[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0) smaller.push_back(part);
        }
        const std::int64_t sign = between % 2 == 0 ? 1 : -1;
        total += sign * mn_character(smaller, rest);
    }
    return total;
}

}  // namespace

std::size_t CharacterTable::index_of(const Partition& p) const {
    auto it = std::find(irreducibles.begin(), irreducibles.end(), p);
    if (it == irreducibles.end()) throw std::invalid_argument("unknown partition " + partition_str(p));
    return static_cast<std::size_t>(it - irreducibles.begin());
}

std::int64_t CharacterTable::value(const Partition& irreducible, const Partition& cls) const {
    return values[index_of(irreducible)][index_of(cls)];
}

CharacterTable character_oracle(int d) {
    if (d < 0 || d > 7) throw std::invalid_argument("character tables are limited to d <= 7");
    static std::mutex mutex;
    static std::map<int, CharacterTable> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
    CharacterTable t;
    t.d = d;
    t.irreducibles = partitions(d);
    t.classes = t.irreducibles;
    for (const auto& mu : t.classes) t.centralizer.push_back(centralizer_order(mu));
    for (const auto& lambda : t.irreducibles) {
        std::vector<std::int64_t> row_values;
        for (const auto& mu : t.classes) row_values.push_back(mn_character(lambda, mu));
        t.values.push_back(std::move(row_values));
    }
    cache.emplace(d, t);
    return t;
}

std::int64_t oracle_induction_multiplicity(const Partition& dy1, const Partition& dy2, const Partition& target) {
    const int a = partition_size(dy1);
    const int b = partition_size(dy2);
    if (partition_size(target) != a + b) return 0;
    const CharacterTable ta = character_oracle(a);
    const CharacterTable tb = character_oracle(b);
    const CharacterTable tn = character_oracle(a + b);
    const std::int64_t scale = factorial(a) * factorial(b);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < ta.classes.size(); ++i) {
        for (std::size_t j = 0; j < tb.classes.size(); ++j) {
            Partition merged = ta.classes[i];
            merged.insert(merged.end(), tb.classes[j].begin(), tb.classes[j].end());
            std::sort(merged.begin(), merged.end(), std::greater<>());
            const std::int64_t weight = scale / (ta.centralizer[i] * tb.centralizer[j]);
            sum += weight * ta.value(dy1, ta.classes[i]) * tb.value(dy2, tb.classes[j]) * tn.value(target, merged);
        }
    }
    if (sum % scale != 0) throw std::logic_error("non-integral induction multiplicity");
    return sum / scale;
}

}  // namespace zelred
