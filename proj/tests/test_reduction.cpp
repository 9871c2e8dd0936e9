#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "zelred/involution.hpp"
#include "zelred/reduction.hpp"

using namespace zelred;

namespace {

const CuspidalDatum kD23 = datum_for_shape(2, 3);

std::vector<std::string> canonicals(const std::vector<ConstituentLabel>& labels) {
    std::vector<std::string> out;
    for (const auto& l : labels) out.push_back(l.canonical());
    return out;
}

// Path shape checked from degrees and connectivity, independent of edge order.
bool undirected_path(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (n == 0 || edges.size() != n - 1) return false;
    std::vector<int> degree(n, 0);
    std::vector<std::size_t> parent(n);
    for (std::size_t k = 0; k < n; ++k) parent[k] = k;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) {
        if (a >= n || b >= n || a == b) return false;
        ++degree[a];
        ++degree[b];
        const auto ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; });
}

}  // namespace

TEST(Reduction, SmallSteinbergIsIrreducible) {
    for (int ell : {2, 3, 5}) {
        for (int m : {2, 3, 5}) {
            const auto d = datum_for_shape(m, ell);
            for (int s = 1; s < m; ++s) {
                const auto labels = steinberg_constituents(d, s);
                ASSERT_EQ(labels.size(), 1u);
                EXPECT_TRUE(labels[0].fully_explicit());
                EXPECT_EQ(labels[0].explicit_parameter(),
                          steinberg_parameter(Line::of(d), Base::datum(), HalfInt{1 - s}, s));
            }
        }
    }
}

TEST(Reduction, SteinbergFiveAtShapeTwoThree) {
    const auto labels = steinberg_constituents(kD23, 5);
    ASSERT_EQ(labels.size(), 3u);
    EXPECT_EQ(canonicals(labels),
              (std::vector<std::string>{"[(rho, 0, 5)]", "[(rho, 0, 1), (rho, 0, 3), (rho, 1, 1)]",
                                        "[(rho, 0, 1), (rho, 0, 1), (rho, 0, 1), (rho, 1, 1), (rho, 1, 1)]"}));
    const auto& mid = labels[1];
    EXPECT_EQ(mid.level(), LevelIndex{{1}});
    ASSERT_EQ(mid.factors().size(), 2u);
    const auto cycle = std::find_if(mid.factors().begin(), mid.factors().end(), [](const Factor& f) { return f.slot == 0; });
    const auto rho = std::find_if(mid.factors().begin(), mid.factors().end(), [](const Factor& f) { return f.slot == -1; });
    ASSERT_NE(cycle, mid.factors().end());
    ASSERT_NE(rho, mid.factors().end());
    EXPECT_EQ(cycle->size(), 1);
    EXPECT_EQ(cycle->base, Base::steinberg(2));
    EXPECT_EQ(cycle->start, HalfInt{-4});
    EXPECT_EQ(rho->size(), 3);
    EXPECT_EQ(rho->start, HalfInt{0});
}

TEST(Reduction, SteinbergSevenAtShapeTwoThree) {
    const auto labels = steinberg_constituents(kD23, 7);
    ASSERT_EQ(labels.size(), 5u);
    std::vector<std::string> levels;
    for (const auto& l : labels) levels.push_back(l.level().str());
    EXPECT_EQ(levels, (std::vector<std::string>{"[0, 0]", "[1, 0]", "[2, 0]", "[3, 0]", "[0, 1]"}));
    EXPECT_EQ(labels[3].canonical(), "[(rho, 1, 1)] * I0[<2](St2(rho){0})");
    EXPECT_FALSE(labels[3].fully_explicit());
    EXPECT_EQ(labels[4].canonical(),
              "[(rho, 0, 1), (rho, 0, 1), (rho, 0, 1), (rho, 1, 1), (rho, 1, 1), (rho, 1, 1), (rho, 1, 1)]");
}

TEST(Reduction, EpsilonOneUsesOpaqueSuperunipotentFactors) {
    const auto d = datum_for_shape(2, 2);
    ASSERT_EQ(d.epsilon, 1);
    EXPECT_EQ(canonicals(steinberg_constituents(d, 4)),
              (std::vector<std::string>{"[] * I0[<3](rho{1/2})", "[(rho, 1/2, 1), (rho, 1/2, 1)] * I0[<1](rho{1/2})",
                                        "[] * I0[<1](St2(rho){1/2})",
                                        "[(rho, 1/2, 1), (rho, 1/2, 1), (rho, 1/2, 1), (rho, 1/2, 1)]"}));
}

TEST(Reduction, LubinTateExamples) {
    EXPECT_EQ(canonicals(lubin_tate_constituents(kD23, 2, 1)), (std::vector<std::string>{"[(rho, 3/2, 2)]"}));
    EXPECT_EQ(canonicals(lubin_tate_constituents(kD23, 4, 2)), (std::vector<std::string>{"[] * I0[<1,>2](rho{1/2})"}));
    const auto six = lubin_tate_constituents(kD23, 6, 4);
    ASSERT_EQ(six.size(), 2u);
    EXPECT_EQ(six[1].level(), LevelIndex{{1}});
    EXPECT_EQ(six[1].canonical(), "[(rho, 1/2, 1), (rho, 3/2, 1)] * I0[<1,>2](rho{3/2})");
    EXPECT_THROW(lubin_tate_constituents(kD23, 4, 5), ParameterError);
    EXPECT_THROW(lubin_tate_constituents(kD23, 4, 0), ParameterError);
}

TEST(Reduction, LubinTateAtFullSizeIsContainedInSteinberg) {
    for (int ell : {2, 3, 5}) {
        for (int m : {2, 3, 5}) {
            const auto d = datum_for_shape(m, ell);
            for (int s = 1; s <= 12; ++s) {
                const auto st = canonicals(steinberg_constituents(d, s));
                const std::set<std::string> all(st.begin(), st.end());
                for (const auto& c : canonicals(lubin_tate_constituents(d, s, s)))
                    EXPECT_TRUE(all.count(c)) << "m=" << m << " ell=" << ell << " s=" << s << " " << c;
            }
        }
    }
}

TEST(Reduction, ElementaryJacquetFormulas) {
    auto a = jacquet_steinberg(3, 1, Arrow::Left, Parabolic::Standard);
    EXPECT_EQ(a.first.str(), "[<0]_{pi{1}}");
    EXPECT_EQ(a.second.str(), "[<1]_{pi{-1/2}}");
    auto b = jacquet_steinberg(4, 2, Arrow::Right, Parabolic::Opposite);
    EXPECT_EQ(b.first.str(), "[>1]_{pi{1}}");
    EXPECT_EQ(b.second.str(), "[>1]_{pi{-1}}");
    auto c = jacquet_steinberg(5, 2, Arrow::Left, Parabolic::Standard);
    EXPECT_EQ(c.first.str(), "[<1]_{pi{3/2}}");
    EXPECT_EQ(c.second.str(), "[<2]_{pi{-1}}");
    EXPECT_THROW(jacquet_steinberg(3, 3, Arrow::Left, Parabolic::Standard), ParameterError);
    EXPECT_THROW(jacquet_steinberg(3, 0, Arrow::Right, Parabolic::Standard), ParameterError);
}

TEST(Reduction, JacquetConstituentLevelZero) {
    const auto e = jacquet_constituent(kD23, 5, LevelIndex{}, 2);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e.coefficient("[(rho, 0, 2)] (x) [(rho, 0, 3)]"), 1);
}

TEST(Reduction, JacquetConstituentSumsAllSplittings) {
    // t = 2 splits either through the cycle slot or through the rho slot.
    const auto e = jacquet_constituent(kD23, 5, LevelIndex{{1}}, 2);
    EXPECT_EQ(e.to_json(),
              R"([{"label": "[(rho, 0, 1), (rho, 1, 1)] (x) [(rho, 0, 3)]", "mult": 1}, )"
              R"({"label": "[(rho, 0, 2)] (x) [(rho, 0, 1), (rho, 0, 1), (rho, 1, 1)]", "mult": 1}])");
    EXPECT_THROW(jacquet_constituent(kD23, 5, LevelIndex{{0, 1}}, 2), ParameterError);
}

TEST(Reduction, JacquetClosureGrid) {
    for (int ell : {2, 3, 5}) {
        for (int m : {2, 3, 5}) {
            const auto d = datum_for_shape(m, ell);
            for (int s = 2; s <= 9; ++s) {
                for (int t = 1; t < s; ++t) {
                    GrothElement sum;
                    for (const auto& i : enumerate_index_set(d, s)) sum = add(sum, jacquet_constituent(d, s, i, t));
                    ASSERT_EQ(sum, jacquet_expected(d, s, t)) << "m=" << m << " ell=" << ell << " s=" << s << " t=" << t;
                    ASSERT_TRUE(is_effective(sum));
                }
            }
        }
    }
}

TEST(Reduction, LubinTateJacquetFixture) {
    EXPECT_EQ(lubin_tate_jacquet_fixture(kD23).to_json(),
              R"([{"label": "[(rho, 0, 1), (rho, 1, 1)] (x) rho{1/2}", "mult": 1}, )"
              R"({"label": "[(rho, 0, 2)] (x) rho{1/2}", "mult": 1}, )"
              R"({"label": "[(rho, 1, 2)] (x) rho{1/2}", "mult": 1}])");
    EXPECT_THROW(lubin_tate_jacquet_fixture(datum_for_shape(3, 5)), ParameterError);
}

TEST(Reduction, ExtensionGraphs) {
    const auto small = extension_graph_steinberg(datum_for_shape(5, 3), 3);
    EXPECT_EQ(small.vertices.size(), 1u);
    EXPECT_TRUE(small.edges.empty());

    const auto five = extension_graph_steinberg(kD23, 5);
    EXPECT_EQ(five.vertices.size(), 3u);
    EXPECT_EQ(five.edges.size(), 2u);
    EXPECT_TRUE(five.orientation_reversible);
    EXPECT_EQ(extension_graph_steinberg(kD23, 7).edges.size(), 4u);

    EXPECT_EQ(extension_graph_lubin_tate(kD23, 5, 1).vertices.size(), 1u);
    const auto lt = extension_graph_lubin_tate(kD23, 6, 4);
    EXPECT_EQ(lt.vertices.size(), 2u);
    EXPECT_EQ(lt.edges.size(), 1u);

    const auto full = extension_graph_lubin_tate(kD23, 7, 7);
    const auto st = extension_graph_steinberg(kD23, 7);
    EXPECT_LE(full.vertices.size(), st.vertices.size());
    EXPECT_TRUE(full.is_simple_path());
}

TEST(Reduction, DotOutput) {
    EXPECT_EQ(extension_graph_steinberg(kD23, 5).to_dot("g"),
              "digraph g {\n"
              "  v0 [label=\"[0]\\n[(rho, 0, 5)]\"];\n"
              "  v1 [label=\"[1]\\n[(rho, 0, 1), (rho, 0, 3), (rho, 1, 1)]\"];\n"
              "  v2 [label=\"[2]\\n[(rho, 0, 1), (rho, 0, 1), (rho, 0, 1), (rho, 1, 1), (rho, 1, 1)]\"];\n"
              "  v0 -> v1;\n"
              "  v1 -> v2;\n"
              "}\n");
}

TEST(Reduction, SemisimpleLatticeHasNoEdges) {
    EXPECT_TRUE(semisimple_lattice_graph(steinberg_constituents(kD23, 1)).edges.empty());
    const auto g = semisimple_lattice_graph(steinberg_constituents(kD23, 5));
    EXPECT_EQ(g.vertices.size(), 3u);
    EXPECT_TRUE(g.edges.empty());
    EXPECT_EQ(semisimple_lattice_graph(lubin_tate_constituents(kD23, 8, 7)).vertices.size(),
              enumerate_index_set(kD23, 6).size());
}

TEST(Reduction, LengthTwoInduction) {
    const auto a = induced_length_two(2, 1);
    EXPECT_EQ(a.sub, "[<0,>1]");
    EXPECT_EQ(a.quotient, "[<1,>0]");
    EXPECT_EQ(a.cls, add(GrothElement::of("[<0,>1]"), GrothElement::of("[<1,>0]")));
    const auto dual = induced_length_two(2, 1, true);
    EXPECT_EQ(dual.sub, a.quotient);
    EXPECT_EQ(dual.quotient, a.sub);
    EXPECT_EQ(dual.cls, a.cls);
    EXPECT_EQ(induced_length_two(5, 2).sub, "[<1,>3]");
    EXPECT_THROW(induced_length_two(2, 2), ParameterError);
}

TEST(Reduction, EulerSumsTelescope) {
    EXPECT_TRUE(euler_check(1));
    EXPECT_EQ(euler_lhs(3).to_json(), R"([{"label": "[<0,>2]", "mult": -1}])");
    EXPECT_EQ(euler_rhs(3).to_json(),
              R"([{"label": "[<0,>2]", "mult": -1}, {"label": "[<1,>1]", "mult": 1}, {"label": "[<2,>0]", "mult": -1}])");
    for (int s = 1; s <= 12; ++s) EXPECT_TRUE(telescoping_check(s)) << s;
    // Both sides differ once the middle classes stop cancelling.
    for (int s = 2; s <= 12; ++s) EXPECT_FALSE(euler_check(s)) << s;
}

TEST(Reduction, Disjointness) {
    EXPECT_TRUE(constituents_disjoint(kD23, 5, 1, 2).disjoint);
    EXPECT_TRUE(constituents_disjoint(kD23, 5, 1, 2).warnings.empty());
    const auto same = constituents_disjoint(kD23, 5, 2, 2);
    EXPECT_FALSE(same.disjoint);
    EXPECT_FALSE(same.warnings.empty());
    for (int ell : {3, 5})
        for (int m : {2, 3}) {
            const auto d = datum_for_shape(m, ell);
            for (int s = 3; s <= 8; ++s)
                for (int t = 1; t < s; ++t)
                    for (int t1 = t + 1; t1 < s; ++t1)
                        EXPECT_TRUE(constituents_disjoint(d, s, t, t1).disjoint)
                            << "m=" << m << " ell=" << ell << " s=" << s << " t=" << t << " t1=" << t1;
        }
}

TEST(Reduction, SpehDiffersFromSuperunipotentFactor) {
    const auto d = make_datum(1, 7, 2);  // epsilon 3
    for (int a = 2; a <= 10; ++a)
        for (int t = 1; t < a; ++t) EXPECT_TRUE(speh_never_equals_I0(d, t, a)) << t << "," << a;
    EXPECT_THROW(speh_never_equals_I0(d, 0, 3), ParameterError);
    EXPECT_THROW(speh_never_equals_I0(datum_for_shape(3, 2), 1, 3), ParameterError);
}

TEST(ReductionProperty, CountAndLevelAdditivity) {
    std::mt19937 rng(29);
    const int shapes[] = {2, 3, 5};
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> ps(1, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = datum_for_shape(shapes[pick(rng)], shapes[pick(rng)]);
        const int s = ps(rng);
        const auto labels = steinberg_constituents(d, s);
        const auto index = oracle::index_set(d.m, d.ell, s);
        ASSERT_EQ(labels.size(), index.size());
        std::set<std::string> seen;
        for (std::size_t k = 0; k < labels.size(); ++k) {
            ASSERT_EQ(oracle::trim(labels[k].level().entries), index[k]);
            ASSERT_EQ(labels[k].factor_level_sum(), labels[k].level());
            ASSERT_EQ(labels[k].size(), s);
            ASSERT_TRUE(seen.insert(labels[k].canonical()).second) << labels[k].canonical();
        }
        std::uniform_int_distribution<int> pt(1, s);
        const int t = pt(rng);
        const auto lt = lubin_tate_constituents(d, s, t);
        ASSERT_EQ(lt.size(), oracle::index_set(d.m, d.ell, t - 1).size());
        for (const auto& l : lt) ASSERT_EQ(l.size(), s);
    }
}

TEST(ReductionProperty, GraphsArePathsInIndexOrder) {
    std::mt19937 rng(31);
    const int shapes[] = {2, 3, 5};
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> ps(1, 16);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = datum_for_shape(shapes[pick(rng)], shapes[pick(rng)]);
        const int s = ps(rng);
        const auto g = extension_graph_steinberg(d, s);
        ASSERT_TRUE(undirected_path(g.vertices.size(), g.edges));
        ASSERT_TRUE(g.vertex_order_increasing());
        std::uniform_int_distribution<int> pt(1, s);
        const auto h = extension_graph_lubin_tate(d, s, pt(rng));
        ASSERT_TRUE(undirected_path(h.vertices.size(), h.edges));
        ASSERT_TRUE(h.vertex_order_increasing());
    }
}

TEST(ReductionProperty, SupportMatchesSteinbergSegment) {
    std::mt19937 rng(37);
    const int shapes[] = {2, 3, 5};
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> ps(1, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = datum_for_shape(shapes[pick(rng)], shapes[pick(rng)]);
        const int s = ps(rng);
        const auto expected = support(steinberg_parameter(Line::of(d), Base::datum(), HalfInt{1 - s}, s));
        for (const auto& l : steinberg_constituents(d, s)) ASSERT_EQ(l.support(), expected) << l.canonical();
    }
}
