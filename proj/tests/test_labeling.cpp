#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "gasketlab/error.hpp"

using namespace gasketlab;
using fixtures::complete;
using fixtures::path;
using fixtures::word;

namespace {

VertexLabel contracted(std::initializer_list<int> prefix, int a, int b, int level) {
    return VertexLabel::contracted(word(prefix), static_cast<Letter>(a - 1), static_cast<Letter>(b - 1), level);
}

std::vector<BaseGraph> small_family() {
    auto out = fixtures::connected_upto(4);
    for (auto& g : fixtures::corpus("disconnected_n4")) {
        out.push_back(std::move(g));
    }
    out.push_back(fixtures::edgeless(3));
    return out;
}

} // namespace

TEST_CASE("canonicalize examples") {
    const auto k3 = complete(3);
    CHECK(canonicalize(word({1, 2, 2}), k3) == contracted({}, 1, 2, 3));
    CHECK(canonicalize(word({2, 1, 1}), k3) == contracted({}, 1, 2, 3));
    CHECK(canonicalize(word({1, 1, 1}), k3) == VertexLabel::plain(word({1, 1, 1})));
    CHECK(canonicalize(word({2, 1, 3}), path(3)) == VertexLabel::plain(word({2, 1, 3})));
    CHECK(canonicalize(word({1, 2, 3}), k3) == contracted({1}, 2, 3, 2));
}

TEST_CASE("expand examples") {
    CHECK(expand(contracted({}, 1, 2, 3)) == std::vector<Word>{word({1, 2, 2}), word({2, 1, 1})});
    CHECK(expand(VertexLabel::plain(word({1, 1, 1}))) == std::vector<Word>{word({1, 1, 1})});
    CHECK(expand(contracted({1}, 2, 3, 2)) == std::vector<Word>{word({1, 2, 3}), word({1, 3, 2})});
}

TEST_CASE("contracted labels reject degenerate pairs") {
    CHECK_THROWS_AS(contracted({}, 1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(contracted({}, 1, 2, 1), std::invalid_argument);
    CHECK(contracted({}, 2, 1, 2) == contracted({}, 1, 2, 2));
}

TEST_CASE("canonical labels partition the words like the linking-edge quotient") {
    for (const auto& g : small_family()) {
        for (int t = 1; t <= 3; ++t) {
            const auto q = fixtures::contract_linking_edges(g, t);
            std::set<VertexLabel> seen;
            for (const auto& cls : q.classes) {
                const auto label = canonicalize(*cls.begin(), g);
                for (const auto& w : cls) {
                    CHECK(canonicalize(w, g) == label);
                }
                const auto forms = expand(label);
                CHECK(std::set<Word>(forms.begin(), forms.end()) == cls);
                CHECK(seen.insert(label).second);
            }
            const auto labels = enumerate_labels(g, t);
            CHECK(std::set<VertexLabel>(labels.begin(), labels.end()) == seen);
            CHECK(labels.size() == gasket_order(g, t));
            CHECK(std::is_sorted(labels.begin(), labels.end()));
        }
    }
}

TEST_CASE("expand and canonicalize are inverse") {
    const auto g = fixtures::cycle(4);
    for (int t = 1; t <= 4; ++t) {
        for (const auto& label : enumerate_labels(g, t)) {
            for (const auto& w : expand(label)) {
                CHECK(canonicalize(w, g) == label);
            }
            CHECK(expand(label).front() == label.representative());
            CHECK(label.depth() == static_cast<std::size_t>(t));
        }
    }
}

TEST_CASE("enumerate_labels examples") {
    const auto k3 = enumerate_labels(complete(3), 2);
    CHECK(k3.size() == 6);
    CHECK(std::count_if(k3.begin(), k3.end(), [](const VertexLabel& v) { return v.is_contracted(); }) == 3);
    CHECK(enumerate_labels(path(3), 2).size() == 7);
    const auto base = enumerate_labels(fixtures::cycle(5), 1);
    REQUIRE(base.size() == 5);
    CHECK(base[4] == VertexLabel::plain(word({5})));
}

TEST_CASE("label text format") {
    const auto k3 = complete(3);
    CHECK(format_label(contracted({1}, 2, 3, 2)) == "1.{2,3}@2");
    CHECK(format_label(contracted({}, 1, 2, 3)) == "{1,2}@3");
    CHECK(format_label(VertexLabel::plain(word({1, 1, 1}))) == "1.1.1");
    CHECK(parse_label("1.1.1", k3, 3) == VertexLabel::plain(word({1, 1, 1})));
    CHECK(parse_label("{1,2}@3", k3, 3) == contracted({}, 1, 2, 3));
    CHECK(parse_label("{2,1}@3", k3, 3) == contracted({}, 1, 2, 3));
    for (int t = 1; t <= 3; ++t) {
        for (const auto& label : enumerate_labels(k3, t)) {
            CHECK(parse_label(format_label(label), k3, t) == label);
        }
    }
}

TEST_CASE("parse_label rejects invalid labels") {
    const auto k3 = complete(3);
    const auto p3 = path(3);
    CHECK_THROWS_AS(parse_label("", k3, 2), ParseError);
    CHECK_THROWS_AS(parse_label("1.4", k3, 2), ParseError);
    CHECK_THROWS_AS(parse_label("1.2.3", k3, 2), ParseError);
    CHECK_THROWS_AS(parse_label("{1,3}@2", p3, 2), ParseError);
    CHECK_THROWS_AS(parse_label("{1,2}@3", k3, 2), ParseError);
    CHECK_THROWS_AS(parse_label("1{1,2}@2", k3, 3), ParseError);
    CHECK_THROWS_AS(parse_label("1.x", k3, 2), ParseError);
    // An expanded form is a word, not a vertex, unless canonicalization is asked for.
    CHECK_THROWS_AS(parse_label("1.2.2", k3, 3), ParseError);
    CHECK(parse_label("1.2.2", k3, 3, true) == contracted({}, 1, 2, 3));
}

TEST_CASE("word indexing") {
    for (std::uint64_t i = 0; i < 125; ++i) {
        CHECK(word_index(word_at(i, 5, 3), 5) == i);
    }
    CHECK(word_at(5, 3, 2) == word({2, 3}));
    CHECK(bounded_power(10, 7, 10'000'000) == 10'000'000U);
    CHECK_FALSE(bounded_power(10, 8, 10'000'000));
    CHECK_THROWS_AS(word_count_within(10, 8, 10'000'000), CapExceeded);
}

TEST_CASE("order and size formulas") {
    const auto k3 = complete(3);
    CHECK(sierpinski_order(k3, 2) == 9);
    CHECK(sierpinski_size(k3, 2) == 12);
    CHECK(gasket_order(k3, 2) == 6);
    CHECK(gasket_size(k3, 2) == 9);
    CHECK(gasket_order(k3, 3) == 15);
    CHECK(gasket_size(k3, 3) == 27);
    CHECK(sierpinski_size(path(3), 3) == 26);
    const auto two_k2 = fixtures::graph(4, {{1, 2}, {3, 4}});
    CHECK(component_formula(two_k2, 2, 2) == 6);
    CHECK(component_formula(k3, 1, 5) == 1);
    CHECK(component_formula(fixtures::edgeless(3), 3, 2) == 9);
}

TEST_CASE("stripping the first letter maps a copy onto the smaller gasket") {
    const auto k3 = complete(3);
    CHECK(strip_first_letter(contracted({}, 1, 2, 3), 0, k3) == VertexLabel::plain(word({2, 2})));
    CHECK(strip_first_letter(contracted({}, 1, 2, 3), 1, k3) == VertexLabel::plain(word({1, 1})));
    CHECK_FALSE(strip_first_letter(contracted({}, 1, 2, 3), 2, k3));
    CHECK(strip_first_letter(contracted({1}, 2, 3, 2), 0, k3) == contracted({}, 2, 3, 2));
}
