#include "zelred/grothendieck.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace zelred {

namespace {

struct LabelTable {
    std::shared_mutex mutex;
    std::unordered_map<std::string, LabelId> ids;
    std::deque<std::string> texts;  // stable addresses
};

LabelTable& table() {
    static LabelTable t;
    return t;
}

void json_escape(std::ostringstream& os, const std::string& s) {
    os << '"';
    for (char c : s) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
    }
    os << '"';
}

const std::string& merged_context(const GrothElement& a, const GrothElement& b) {
    if (!a.context().empty() && !b.context().empty() && a.context() != b.context())
        throw ContextError("context mismatch: " + a.context() + " vs " + b.context());
    return a.context().empty() ? b.context() : a.context();
}

}  // namespace

LabelId intern_label(const std::string& text) {
    auto& t = table();
    {
        std::shared_lock lock(t.mutex);
        if (auto it = t.ids.find(text); it != t.ids.end()) return it->second;
    }
    std::unique_lock lock(t.mutex);
    if (auto it = t.ids.find(text); it != t.ids.end()) return it->second;
    const auto id = static_cast<LabelId>(t.texts.size());
    t.texts.push_back(text);
    t.ids.emplace(text, id);
    return id;
}

const std::string& label_text(LabelId id) {
    auto& t = table();
    std::shared_lock lock(t.mutex);
    return t.texts.at(id);
}

std::size_t interned_label_count() {
    auto& t = table();
    std::shared_lock lock(t.mutex);
    return t.texts.size();
}

GrothElement GrothElement::of(const std::string& label, std::int64_t mult, std::string context) {
    GrothElement e(std::move(context));
    e.add_term(label, mult);
    return e;
}

std::int64_t GrothElement::coefficient(const std::string& label) const {
    auto it = terms_.find(intern_label(label));
    return it == terms_.end() ? 0 : it->second;
}

void GrothElement::add_term(LabelId id, std::int64_t mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.emplace(id, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

std::map<std::string, std::int64_t> GrothElement::sorted_terms() const {
    std::map<std::string, std::int64_t> out;
    for (const auto& [id, mult] : terms_) out.emplace(label_text(id), mult);
    return out;
}

std::string GrothElement::to_json() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& [label, mult] : sorted_terms()) {
        os << (first ? "" : ", ") << "{\"label\": ";
        json_escape(os, label);
        os << ", \"mult\": " << mult << '}';
        first = false;
    }
    os << ']';
    return os.str();
}

GrothElement add(const GrothElement& a, const GrothElement& b) {
    GrothElement out(merged_context(a, b));
    for (const auto& [id, m] : a.terms()) out.add_term(id, m);
    for (const auto& [id, m] : b.terms()) out.add_term(id, m);
    for (const auto& r : a.rules()) out.record_rule(r);
    for (const auto& r : b.rules()) out.record_rule(r);
    return out;
}

GrothElement sub(const GrothElement& a, const GrothElement& b) { return add(a, scale(b, -1)); }

GrothElement scale(const GrothElement& a, std::int64_t k) {
    GrothElement out(a.context());
    for (const auto& [id, m] : a.terms()) out.add_term(id, m * k);
    for (const auto& r : a.rules()) out.record_rule(r);
    return out;
}

bool is_effective(const GrothElement& e) {
    for (const auto& [id, m] : e.terms())
        if (m < 0) return false;
    return true;
}

std::string tensor_label(const std::string& a, const std::string& b) { return a + " (x) " + b; }

GrothElement tensor(const GrothElement& a, const GrothElement& b) {
    GrothElement out(merged_context(a, b));
    for (const auto& [ia, ma] : a.terms())
        for (const auto& [ib, mb] : b.terms()) out.add_term(tensor_label(label_text(ia), label_text(ib)), ma * mb);
    return out;
}

std::string product_label(const std::string& a, const std::string& b) { return "(" + a + ") x (" + b + ")"; }

GrothElement formal_product(const GrothElement& a, const GrothElement& b, const std::optional<ProductRule>& rule) {
    GrothElement out(merged_context(a, b));
    for (const auto& [ia, ma] : a.terms()) {
        for (const auto& [ib, mb] : b.terms()) {
            const std::string& la = label_text(ia);
            const std::string& lb = label_text(ib);
            std::optional<GrothElement> decomposed;
            if (rule) decomposed = rule->apply(la, lb);
            if (decomposed) {
                for (const auto& [id, m] : decomposed->terms()) out.add_term(id, m * ma * mb);
                out.record_rule(rule->tag);
            } else {
                out.add_term(product_label(la, lb), ma * mb);
            }
        }
    }
    return out;
}

}  // namespace zelred
