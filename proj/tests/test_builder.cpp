#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "gasketlab/builder.hpp"
#include "gasketlab/error.hpp"

using namespace gasketlab;
using fixtures::complete;
using fixtures::path;

namespace {

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    std::size_t count = 0;
    for (std::string line; std::getline(in, line);) {
        count += line.find(needle) != std::string::npos ? 1 : 0;
    }
    return count;
}

} // namespace

TEST_CASE("Sierpinski graph examples") {
    const auto k3 = build_sierpinski(complete(3), 2);
    CHECK(k3.order() == 9);
    CHECK(k3.size() == 12);

    const auto c5 = fixtures::cycle(5);
    const auto base = build_sierpinski(c5, 1);
    CHECK(base.order() == 5);
    CHECK(base.size() == 5);

    const auto p3 = build_sierpinski(path(3), 3);
    CHECK(p3.order() == 27);
    CHECK(p3.size() == 26);
    CHECK(p3.component_count() == 1);
}

TEST_CASE("recursive edge list matches the word rule") {
    for (const auto& g : fixtures::connected_upto(4)) {
        for (int t = 1; t <= 3; ++t) {
            auto recursive = sierpinski_edges(g, t);
            std::sort(recursive.begin(), recursive.end());
            std::vector<WordEdge> brute;
            const auto words = fixtures::all_words(g.order(), t);
            for (std::size_t a = 0; a < words.size(); ++a) {
                for (std::size_t b = a + 1; b < words.size(); ++b) {
                    if (fixtures::rule_adjacent(g, words[a], words[b])) {
                        brute.emplace_back(a, b);
                    }
                }
            }
            CHECK(recursive == brute);
            CHECK(sierpinski_edges_by_rule(g, t) == brute);
        }
    }
}

TEST_CASE("gasket examples") {
    const auto k3 = complete(3);
    const auto g2 = build_gasket(k3, 2);
    CHECK(g2.order() == 6);
    CHECK(g2.size() == 9);
    const auto g3 = build_gasket(k3, 3);
    CHECK(g3.order() == 15);
    CHECK(g3.size() == 27);
    CHECK(build_gasket(fixtures::graph(4, {{1, 2}, {3, 4}}), 2).component_count() == 6);

    const auto empty = build_gasket(fixtures::edgeless(3), 2);
    CHECK(empty.order() == 9);
    CHECK(empty.size() == 0);
    CHECK(empty.component_count() == 9);
    CHECK(verify_counts(empty).all_pass());
}

TEST_CASE("gasket equals the union-find quotient of S(G,t)") {
    auto family = fixtures::connected_upto(4);
    for (auto& g : fixtures::corpus("disconnected_n4")) {
        family.push_back(std::move(g));
    }
    for (const auto& g : family) {
        for (int t = 1; t <= 3; ++t) {
            const auto m = build_gasket(g, t);
            const auto q = fixtures::contract_linking_edges(g, t);
            REQUIRE(m.order() == q.classes.size());
            std::map<std::set<Word>, std::size_t> vertex_of;
            for (std::size_t v = 0; v < m.order(); ++v) {
                const auto forms = expand(m.label(v));
                vertex_of[std::set<Word>(forms.begin(), forms.end())] = v;
            }
            std::set<std::pair<std::size_t, std::size_t>> expected;
            for (auto [a, b] : q.edges) {
                expected.insert(std::minmax(vertex_of.at(q.classes[a]), vertex_of.at(q.classes[b])));
            }
            const auto built = m.edges();
            CHECK(std::set<std::pair<std::size_t, std::size_t>>(built.begin(), built.end()) == expected);
            CHECK(m.component_count() == q.components);
            CHECK(m.collapsed_parallel_edges() == 0);
            CHECK(verify_counts(m).all_pass());
        }
    }
}

TEST_CASE("verify_counts covers both families") {
    const auto report = verify_counts(build_gasket(complete(3), 3));
    CHECK(report.all_pass());
    CHECK(report.checks.size() >= 4);
    for (const auto& g : fixtures::connected_upto(5)) {
        for (int t = 1; t <= 3; ++t) {
            CHECK(verify_counts(build_sierpinski(g, t)).all_pass());
            const auto m = build_gasket(g, t);
            CHECK(verify_counts(m).all_pass());
            CHECK(m.component_count() == 1);
        }
    }
}

TEST_CASE("labels and find agree") {
    const auto m = build_gasket(fixtures::cycle(4), 3);
    for (std::size_t v = 0; v < m.order(); ++v) {
        CHECK(m.find(m.label(v)) == v);
        if (v > 0) {
            CHECK(m.label(v - 1) < m.label(v));
        }
    }
    CHECK_FALSE(m.find(VertexLabel::plain(fixtures::word({1, 2, 1}))).has_value());
}

TEST_CASE("adjacency lists are sorted and symmetric") {
    const auto m = build_gasket(complete(4), 3);
    for (std::size_t v = 0; v < m.order(); ++v) {
        const auto nb = m.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        for (auto u : nb) {
            CHECK(m.adjacent(u, v));
            CHECK(u != v);
        }
    }
}

TEST_CASE("cap is enforced before allocation") {
    CHECK_THROWS_AS(build_gasket(complete(10), 8), CapExceeded);
    CHECK_THROWS_AS(build_sierpinski(complete(3), 5, 100), CapExceeded);
    CHECK_NOTHROW(build_sierpinski(complete(3), 4, 81));
}

TEST_CASE("DOT export") {
    const auto dot = export_dot(build_gasket(complete(3), 2));
    CHECK(dot.rfind("graph gasket {", 0) == 0);
    CHECK(count_lines_with(dot, " -- ") == 9);
    CHECK(count_lines_with(dot, "\";") - count_lines_with(dot, " -- ") == 6);

    const auto isolated = export_dot(build_gasket(fixtures::edgeless(2), 2));
    CHECK(count_lines_with(isolated, " -- ") == 0);
    CHECK(count_lines_with(isolated, "\";") == 4);
}

TEST_CASE("JSON export round-trips") {
    const auto g = fixtures::cycle(4);
    for (const auto& m : {build_gasket(g, 3), build_sierpinski(g, 2)}) {
        const auto back = import_json(export_json(m), g);
        CHECK(back.kind() == m.kind());
        CHECK(back.order() == m.order());
        CHECK(back.edges() == m.edges());
        CHECK(export_json(back) == export_json(m));
    }
    CHECK_THROWS(import_json("{\"kind\":\"gasket\"}", g));
}
