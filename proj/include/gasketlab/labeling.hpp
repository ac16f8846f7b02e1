#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gasketlab/base_graph.hpp"

namespace gasketlab {

// 0-based letter of a word; printed 1-based.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Vertex of S[G,t]: either a plain word or the contraction of the linking
// edge prefix·a·b^(L-1) -- prefix·b·a^(L-1) made at level L (2 <= L <= t).
// The pair is stored with low < high.
class VertexLabel {
public:
    VertexLabel() = default;

    static VertexLabel plain(Word word);
    static VertexLabel contracted(Word prefix, Letter a, Letter b, int level);

    bool is_contracted() const { return level_ > 0; }

    // The whole word when plain, the prefix when contracted.
    const Word& letters() const { return letters_; }
    Letter low() const { return low_; }
    Letter high() const { return high_; }
    // Contraction level; 0 for plain labels.
    int level() const { return level_; }

    std::size_t depth() const { return letters_.size() + static_cast<std::size_t>(level_); }

    // prefix·low·high^(L-1) for contractions, the word itself otherwise.
    // Distinct vertices of one gasket have distinct representatives.
    Word representative() const;

    bool operator==(const VertexLabel&) const = default;
    // Orders by representative word.
    std::strong_ordering operator<=>(const VertexLabel& other) const;

private:
    Word letters_;
    Letter low_ = 0;
    Letter high_ = 0;
    int level_ = 0;
};

// The gasket vertex a word of S(G,t) is merged into.
//
// Let p be the last position with w[p] != w[p+1]. A linking edge endpoint
// has the shape x·a·b^m (m >= 1, ab an edge), whose last change is exactly
// between a and the constant run b^m, so p is the only position at which w
// can be an expanded form. Hence w is contracted iff p exists and
// w[p]w[p+1] is an edge, giving prefix w[0..p) and level t - p. Constant
// words (extreme vertices) are never contracted.
VertexLabel canonicalize(std::span<const Letter> word, const BaseGraph& g);

// The one or two words of S(G,t) merged into `label`; the representative
// comes first.
std::vector<Word> expand(const VertexLabel& label);

// Throws std::invalid_argument unless `label` is a vertex of S[G,t].
void validate_label(const VertexLabel& label, const BaseGraph& g, int t);

// Grammar: plain "1.2.3"; contracted "1.{2,3}@2", or "{1,2}@3" with no
// prefix. Letters are 1-based decimal.
std::string format_label(const VertexLabel& label);

// Parses the grammar above and validates against (g, t). With
// `canonicalize_words`, a plain word that is an expanded form is accepted and
// mapped to its contracted label instead of being rejected.
VertexLabel parse_label(std::string_view text, const BaseGraph& g, int t, bool canonicalize_words = false);

std::string format_word(std::span<const Letter> word);

// A word of S(G,t) in the plain-label grammar, with no canonicalization.
Word parse_word(std::string_view text, const BaseGraph& g, int t);

// Words of length t over n letters indexed in base n, first letter most
// significant, so index order is lexicographic order.
std::uint64_t word_index(std::span<const Letter> word, int n);
Word word_at(std::uint64_t index, int n, int t);

// n^t, or nullopt if it exceeds `cap`.
std::optional<std::uint64_t> bounded_power(int n, int t, std::uint64_t cap);

// n^t, throwing CapExceeded when it is above `cap`.
std::uint64_t word_count_within(int n, int t, std::uint64_t cap);

inline constexpr std::uint64_t default_vertex_cap = 10'000'000;

// Calls `visit` once per vertex of S[G,t], in representative order.
void for_each_label(const BaseGraph& g, int t, std::uint64_t cap,
                    const std::function<void(const VertexLabel&)>& visit);

std::vector<VertexLabel> enumerate_labels(const BaseGraph& g, int t, std::uint64_t cap = default_vertex_cap);

// For a label lying in copy `first` (some expanded word starts with it),
// the matching vertex of S[G,t-1]; nullopt otherwise or when t = 1.
std::optional<VertexLabel> strip_first_letter(const VertexLabel& label, Letter first, const BaseGraph& g);

// Closed forms for both families.
std::uint64_t sierpinski_order(const BaseGraph& g, int t);
std::uint64_t sierpinski_size(const BaseGraph& g, int t);
std::uint64_t gasket_order(const BaseGraph& g, int t);
std::uint64_t gasket_size(const BaseGraph& g, int t);
// Shared by S(G,t) and S[G,t]: (n^t (cc - 1) + n - cc) / (n - 1).
std::uint64_t component_formula(const BaseGraph& g, std::size_t base_components, int t);

} // namespace gasketlab

template <>
struct std::hash<gasketlab::VertexLabel> {
    std::size_t operator()(const gasketlab::VertexLabel& label) const noexcept;
};
