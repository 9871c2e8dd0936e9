#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace zelred {

class ContextError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using LabelId = std::uint32_t;

// Thread-safe global interning of canonical label texts.
LabelId intern_label(const std::string& text);
const std::string& label_text(LabelId id);
std::size_t interned_label_count();

// Formal integer combination of canonical irreducible labels.
class GrothElement {
public:
    GrothElement() = default;
    explicit GrothElement(std::string context) : context_(std::move(context)) {}

    static GrothElement of(const std::string& label, std::int64_t mult = 1, std::string context = {});

    const std::map<LabelId, std::int64_t>& terms() const { return terms_; }
    const std::string& context() const { return context_; }
    const std::set<std::string>& rules() const { return rules_; }

    bool is_zero() const { return terms_.empty(); }
    std::int64_t coefficient(const std::string& label) const;
    std::size_t size() const { return terms_.size(); }

    void add_term(LabelId id, std::int64_t mult);
    void add_term(const std::string& label, std::int64_t mult) { add_term(intern_label(label), mult); }
    void record_rule(const std::string& tag) { rules_.insert(tag); }

    // Terms sorted by label text.
    std::map<std::string, std::int64_t> sorted_terms() const;
    std::string to_json() const;  // [{"label": ..., "mult": n}]

    friend bool operator==(const GrothElement& a, const GrothElement& b) { return a.terms_ == b.terms_; }

private:
    std::string context_;
    std::map<LabelId, std::int64_t> terms_;
    std::set<std::string> rules_;
};

GrothElement add(const GrothElement& a, const GrothElement& b);
GrothElement sub(const GrothElement& a, const GrothElement& b);
GrothElement scale(const GrothElement& a, std::int64_t k);
bool is_effective(const GrothElement& e);

// Pair labels "a (x) b"; bilinear.
std::string tensor_label(const std::string& a, const std::string& b);
GrothElement tensor(const GrothElement& a, const GrothElement& b);

// A decomposition rule for products of two irreducibles; returns nullopt when it does not apply.
struct ProductRule {
    std::string tag;
    std::function<std::optional<GrothElement>(const std::string&, const std::string&)> apply;
};

// Formal product label "a x b".
std::string product_label(const std::string& a, const std::string& b);

// Bilinear product. Pairs the rule decomposes are replaced and the rule tag recorded;
// all other pairs stay formal.
GrothElement formal_product(const GrothElement& a, const GrothElement& b,
                            const std::optional<ProductRule>& rule = std::nullopt);

}  // namespace zelred
