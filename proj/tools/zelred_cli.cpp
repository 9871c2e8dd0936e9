#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zelred/base_arith.hpp"
#include "zelred/classical_limit.hpp"
#include "zelred/invariants.hpp"
#include "zelred/involution.hpp"
#include "zelred/levels.hpp"
#include "zelred/reduction.hpp"

using json = nlohmann::ordered_json;
using namespace zelred;

namespace {

constexpr int kConfigExit = 2;
constexpr int kViolationExit = 1;

struct DatumOptions {
    std::optional<int> m;
    int ell = 3;
    std::optional<std::int64_t> q;
    std::optional<int> epsilon;
    int g = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--m", m, "m(rho); realized by the smallest suitable q when --q is absent");
        cmd->add_option("--ell", ell, "prime ell")->capture_default_str();
        cmd->add_option("--q", q, "residue field cardinality");
        cmd->add_option("--epsilon", epsilon, "line size epsilon(rho), a divisor of e_ell(q)");
        cmd->add_option("--g", g, "rho lives on GL_g")->capture_default_str();
    }

    CuspidalDatum datum() const {
        if (q) return make_datum(g, ell, *q, epsilon);
        if (!m) throw ConfigError("give --q or --m");
        if (epsilon) throw ConfigError("--epsilon needs --q");
        CuspidalDatum d = datum_for_shape(*m, ell);
        d.g = g;
        return d;
    }
};

json context_json(const CuspidalDatum& d) {
    json c;
    c["g"] = d.g;
    c["ell"] = d.ell;
    c["q"] = d.abstract() ? json(nullptr) : json(d.q);
    c["epsilon"] = d.epsilon;
    c["m"] = d.m;
    return c;
}

json level_json(const LevelIndex& i) { return json(i.entries); }

json parameter_json(const ZParameter& p) {
    json out = json::array();
    for (const auto& s : p.segments()) out.push_back(json::array({s.base.str(), s.start.str(), s.length}));
    return out;
}

json labels_json(const CuspidalDatum& d, const std::vector<ConstituentLabel>& labels,
                 const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    json out;
    out["context"] = context_json(d);
    json cs = json::array();
    for (const auto& c : labels) {
        json entry;
        entry["level"] = level_json(c.level());
        entry["parameter"] = parameter_json(c.explicit_parameter());
        entry["opaque"] = c.opaque_atoms();
        entry["canonical"] = c.canonical();
        cs.push_back(entry);
    }
    out["constituents"] = cs;
    json es = json::array();
    for (const auto& [a, b] : edges) es.push_back(json::array({a, b}));
    out["edges"] = es;
    return out;
}

json groth_json(const GrothElement& e) {
    json out = json::array();
    for (const auto& [label, mult] : e.sorted_terms()) out.push_back(json{{"label", label}, {"mult", mult}});
    return out;
}

json decomposition_to_json(const Decomposition& d) { return json::parse(decomposition_json(d)); }

LevelIndex parse_level(const std::string& text) {
    LevelIndex i;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            i.entries.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ConfigError("malformed level index: " + text);
        }
    }
    if (i.entries.empty()) throw ConfigError("empty level index");
    return i;
}

Partition parse_partition(const std::string& text) {
    Partition p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            p.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ConfigError("malformed partition: " + text);
        }
    }
    if (!is_partition(p)) throw ConfigError("not a partition: " + text);
    return p;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduction modulo ell of elliptic representations: constituents, graphs and checks"};
    app.require_subcommand(1);

    DatumOptions opts;
    int s = 1;
    int t = 1;
    int t1 = 2;
    int eps_line = 2;
    bool dot = false;
    std::string variant = "std";
    std::string arrow = "left";
    std::string level;
    std::string pattern;
    std::vector<std::string> induct;
    std::optional<int> borel;
    std::optional<std::int64_t> regime_q;

    auto* index_set = app.add_subcommand("index-set", "ordered index set for s");
    opts.attach(index_set);
    index_set->add_option("--s", s, "size s")->required();

    auto* digits = app.add_subcommand("digits", "digit decomposition of s");
    opts.attach(digits);
    digits->add_option("--s", s, "size s")->required();

    auto* involute = app.add_subcommand("involute", "involution of one segment on a line of size epsilon");
    involute->add_option("--epsilon", eps_line, "line size, at least 2")->required();
    involute->add_option("--s", s, "segment length")->required();

    auto* reduce_st = app.add_subcommand("reduce-steinberg", "constituents of the reduction of a Steinberg");
    opts.attach(reduce_st);
    reduce_st->add_option("--s", s, "size s")->required();

    auto* reduce_lt = app.add_subcommand("reduce-lt", "constituents of the reduction of a Lubin-Tate elliptic");
    opts.attach(reduce_lt);
    reduce_lt->add_option("--s", s, "size s")->required();
    reduce_lt->add_option("--t", t, "1 <= t <= s")->required();

    auto* jacquet = app.add_subcommand("jacquet", "Jacquet modules of a Steinberg or Speh, or of one constituent");
    opts.attach(jacquet);
    jacquet->add_option("--s", s, "size s")->required();
    jacquet->add_option("--t", t, "1 <= t <= s - 1")->required();
    jacquet->add_option("--variant", variant, "std or op")->check(CLI::IsMember({"std", "op"}));
    jacquet->add_option("--arrow", arrow, "left or right")->check(CLI::IsMember({"left", "right"}));
    jacquet->add_option("--level", level, "comma-separated level index; selects one constituent");

    auto* graph_st = app.add_subcommand("graph-steinberg", "extension graph of the Steinberg induction lattice");
    opts.attach(graph_st);
    graph_st->add_option("--s", s, "size s")->required();
    graph_st->add_flag("--dot", dot, "emit DOT instead of JSON");

    auto* graph_lt = app.add_subcommand("graph-lt", "extension graph of the Lubin-Tate induction lattice");
    opts.attach(graph_lt);
    graph_lt->add_option("--s", s, "size s")->required();
    graph_lt->add_option("--t", t, "1 <= t <= s")->required();
    graph_lt->add_flag("--dot", dot, "emit DOT instead of JSON");

    auto* euler = app.add_subcommand("euler", "alternating-sum identity over the length-two inductions");
    euler->add_option("--s", s, "size s")->required();

    auto* disjoint = app.add_subcommand("disjoint", "disjointness of two Lubin-Tate reductions");
    opts.attach(disjoint);
    disjoint->add_option("--s", s, "size s")->required();
    disjoint->add_option("--t", t, "first t")->required();
    disjoint->add_option("--t1", t1, "second t")->required();

    auto* classical = app.add_subcommand("classical", "Young-diagram computations in the classical limit");
    auto* pattern_opt = classical->add_option("--pattern", pattern, "arrow pattern such as \"<1,>1,<1\"");
    auto* induct_opt = classical->add_option("--induct", induct, "two partitions such as 2,1 1")->expected(2);
    auto* borel_opt = classical->add_option("--borel", borel, "Borel induction of size d");
    pattern_opt->excludes(induct_opt)->excludes(borel_opt);
    induct_opt->excludes(borel_opt);
    classical->add_option("--q", regime_q, "enforce the regime q = 1 mod ell, d < ell");
    classical->add_option("--ell", opts.ell, "prime ell for the regime check");

    auto* check = app.add_subcommand("check", "run the invariant suite (grid from ZELRED_CHECK_GRID)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigExit;
    }

    try {
        if (*index_set) {
            json out = json::array();
            for (const auto& i : enumerate_index_set(opts.datum(), s)) out.push_back(level_json(i));
            emit(out);
        } else if (*digits) {
            const auto d = opts.datum();
            const auto dd = digit_decompose(d, s);
            emit(json{{"s", dd.s}, {"m_minus1", dd.m_minus1}, {"digits", dd.digits}});
        } else if (*involute) {
            const ZParameter z = involute_single_segment(Base::unit(), s, eps_line);
            emit(json{{"epsilon", eps_line}, {"s", s}, {"parameter", parameter_json(z)}});
        } else if (*reduce_st) {
            const auto d = opts.datum();
            emit(labels_json(d, steinberg_constituents(d, s), {}));
        } else if (*reduce_lt) {
            const auto d = opts.datum();
            emit(labels_json(d, lubin_tate_constituents(d, s, t), {}));
        } else if (*jacquet) {
            if (level.empty()) {
                const auto [a, b] = jacquet_steinberg(s, t, arrow == "left" ? Arrow::Left : Arrow::Right,
                                                      variant == "std" ? Parabolic::Standard : Parabolic::Opposite);
                emit(json{{"first", a.str()}, {"second", b.str()}});
            } else {
                const auto d = opts.datum();
                const LevelIndex i = parse_level(level);
                emit(json{{"context", context_json(d)},
                          {"level", level_json(i)},
                          {"terms", groth_json(jacquet_constituent(d, s, i, t))}});
            }
        } else if (*graph_st || *graph_lt) {
            const auto d = opts.datum();
            const ExtensionGraph g = *graph_st ? extension_graph_steinberg(d, s) : extension_graph_lubin_tate(d, s, t);
            if (dot) {
                std::cout << g.to_dot(*graph_st ? "steinberg" : "lubin_tate");
            } else {
                json out = labels_json(d, g.vertices, g.edges);
                out["orientation"] = "lower-to-higher";
                out["reversible"] = g.orientation_reversible;
                emit(out);
            }
        } else if (*euler) {
            emit(json{{"s", s},
                      {"holds", euler_check(s)},
                      {"telescoped", telescoping_check(s)},
                      {"lhs", groth_json(euler_lhs(s))},
                      {"rhs", groth_json(euler_rhs(s))}});
        } else if (*disjoint) {
            const auto r = constituents_disjoint(opts.datum(), s, t, t1);
            for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
            emit(json{{"disjoint", r.disjoint}, {"warnings", r.warnings}});
        } else if (*classical) {
            std::optional<Regime> regime;
            if (regime_q) regime = Regime{*regime_q, opts.ell};
            if (!pattern.empty()) {
                emit(decomposition_to_json(elliptic_reduction_classical(parse_pattern(pattern), regime)));
            } else if (!induct.empty()) {
                const Partition a = parse_partition(induct[0]);
                const Partition b = parse_partition(induct[1]);
                if (regime) regime->require(partition_size(a) + partition_size(b));
                emit(decomposition_to_json(induct_diagrams(a, b)));
            } else if (borel) {
                emit(decomposition_to_json(borel_induction_decomposition(*borel, regime)));
            } else {
                throw ConfigError("classical needs --pattern, --induct or --borel");
            }
        } else if (*check) {
            const auto results = run_invariant_suite(CheckGrid::from_env());
            std::cout << report_json(results);
            for (const auto& r : results)
                if (!r.pass) return kViolationExit;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigExit;
    }
    return 0;
}
