#include "gasketlab/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "gasketlab/error.hpp"

namespace gasketlab {

VertexLabel VertexLabel::plain(Word word) {
    VertexLabel label;
    label.letters_ = std::move(word);
    return label;
}

VertexLabel VertexLabel::contracted(Word prefix, Letter a, Letter b, int level) {
    if (a == b) {
        throw std::invalid_argument("contracted pair needs two distinct letters");
    }
    if (level < 2) {
        throw std::invalid_argument("contraction level must be at least 2, got " + std::to_string(level));
    }
    VertexLabel label;
    label.letters_ = std::move(prefix);
    label.low_ = std::min(a, b);
    label.high_ = std::max(a, b);
    label.level_ = level;
    return label;
}

Word VertexLabel::representative() const {
    Word w = letters_;
    if (is_contracted()) {
        w.push_back(low_);
        w.insert(w.end(), static_cast<std::size_t>(level_ - 1), high_);
    }
    return w;
}

std::strong_ordering VertexLabel::operator<=>(const VertexLabel& other) const {
    if (auto c = representative() <=> other.representative(); c != 0) {
        return c;
    }
    if (auto c = level_ <=> other.level_; c != 0) {
        return c;
    }
    if (auto c = low_ <=> other.low_; c != 0) {
        return c;
    }
    return high_ <=> other.high_;
}

VertexLabel canonicalize(std::span<const Letter> word, const BaseGraph& g) {
    const auto t = word.size();
    for (std::size_t p = t == 0 ? 0 : t - 1; p-- > 0;) {
        if (word[p] == word[p + 1]) {
            continue;
        }
        if (g.adjacent(word[p], word[p + 1])) {
            return VertexLabel::contracted(Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p)), word[p],
                                           word[p + 1], static_cast<int>(t - p));
        }
        break;
    }
    return VertexLabel::plain(Word(word.begin(), word.end()));
}

std::vector<Word> expand(const VertexLabel& label) {
    if (!label.is_contracted()) {
        return {label.letters()};
    }
    Word other = label.letters();
    other.push_back(label.high());
    other.insert(other.end(), static_cast<std::size_t>(label.level() - 1), label.low());
    return {label.representative(), std::move(other)};
}

void validate_label(const VertexLabel& label, const BaseGraph& g, int t) {
    const auto n = g.order();
    if (label.depth() != static_cast<std::size_t>(t)) {
        throw std::invalid_argument("label " + format_label(label) + " has depth " + std::to_string(label.depth()) +
                                    ", expected " + std::to_string(t));
    }
    for (auto letter : label.letters()) {
        if (letter >= n) {
            throw std::invalid_argument("letter " + std::to_string(letter + 1) + " is outside 1.." + std::to_string(n));
        }
    }
    if (label.is_contracted()) {
        if (label.high() >= n) {
            throw std::invalid_argument("pair letter " + std::to_string(label.high() + 1) + " is outside 1.." +
                                        std::to_string(n));
        }
        if (!g.adjacent(label.low(), label.high())) {
            throw std::invalid_argument("pair {" + std::to_string(label.low() + 1) + "," +
                                        std::to_string(label.high() + 1) + "} is not an edge of the base graph");
        }
        if (label.level() > t) {
            throw std::invalid_argument("contraction level " + std::to_string(label.level()) + " exceeds t=" +
                                        std::to_string(t));
        }
    } else if (canonicalize(label.letters(), g).is_contracted()) {
        throw std::invalid_argument("word " + format_word(label.letters()) + " is an expanded form of " +
                                    format_label(canonicalize(label.letters(), g)));
    }
}

std::string format_word(std::span<const Letter> word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) {
            out.push_back('.');
        }
        out += std::to_string(word[i] + 1);
    }
    return out;
}

std::string format_label(const VertexLabel& label) {
    std::string out = format_word(label.letters());
    if (label.is_contracted()) {
        if (!out.empty()) {
            out.push_back('.');
        }
        out += "{" + std::to_string(label.low() + 1) + "," + std::to_string(label.high() + 1) + "}@" +
               std::to_string(label.level());
    }
    return out;
}

namespace {

int parse_number(std::string_view token, std::string_view context) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("label '" + std::string(context) + "': '" + std::string(token) + "' is not a number");
    }
    return value;
}

Word parse_letters(std::string_view text, const BaseGraph& g, std::string_view context) {
    Word w;
    while (true) {
        const auto dot = text.find('.');
        const int v = parse_number(text.substr(0, dot), context);
        if (v < 1 || v > g.order()) {
            throw ParseError("label '" + std::string(context) + "': letter " + std::to_string(v) + " is outside 1.." +
                             std::to_string(g.order()));
        }
        w.push_back(static_cast<Letter>(v - 1));
        if (dot == std::string_view::npos) {
            break;
        }
        text.remove_prefix(dot + 1);
    }
    return w;
}

} // namespace

Word parse_word(std::string_view text, const BaseGraph& g, int t) {
    auto w = parse_letters(text, g, text);
    if (w.size() != static_cast<std::size_t>(t)) {
        throw ParseError("word '" + std::string(text) + "' has length " + std::to_string(w.size()) + ", expected " +
                         std::to_string(t));
    }
    return w;
}

VertexLabel parse_label(std::string_view text, const BaseGraph& g, int t, bool canonicalize_words) {
    VertexLabel label;
    const auto brace = text.find('{');
    if (brace == std::string_view::npos) {
        label = VertexLabel::plain(parse_letters(text, g, text));
        if (canonicalize_words && label.depth() == static_cast<std::size_t>(t)) {
            label = canonicalize(label.letters(), g);
        }
    } else {
        Word prefix;
        if (brace > 0) {
            if (text[brace - 1] != '.') {
                throw ParseError("label '" + std::string(text) + "': expected '.' before '{'");
            }
            prefix = parse_letters(text.substr(0, brace - 1), g, text);
        }
        auto rest = text.substr(brace + 1);
        const auto comma = rest.find(',');
        const auto close = rest.find('}');
        if (comma == std::string_view::npos || close == std::string_view::npos || comma > close ||
            close + 1 >= rest.size() || rest[close + 1] != '@') {
            throw ParseError("label '" + std::string(text) + "': contracted part must look like {i,j}@L");
        }
        const int a = parse_number(rest.substr(0, comma), text);
        const int b = parse_number(rest.substr(comma + 1, close - comma - 1), text);
        const int level = parse_number(rest.substr(close + 2), text);
        if (a < 1 || a > g.order() || b < 1 || b > g.order() || a == b) {
            throw ParseError("label '" + std::string(text) + "': pair must be two distinct letters in 1.." +
                             std::to_string(g.order()));
        }
        if (level < 2) {
            throw ParseError("label '" + std::string(text) + "': level must be at least 2");
        }
        label = VertexLabel::contracted(std::move(prefix), static_cast<Letter>(a - 1), static_cast<Letter>(b - 1),
                                        level);
    }
    try {
        validate_label(label, g, t);
    } catch (const std::invalid_argument& e) {
        throw ParseError("label '" + std::string(text) + "': " + e.what());
    }
    return label;
}

std::uint64_t word_index(std::span<const Letter> word, int n) {
    std::uint64_t index = 0;
    for (auto letter : word) {
        index = index * static_cast<std::uint64_t>(n) + letter;
    }
    return index;
}

Word word_at(std::uint64_t index, int n, int t) {
    Word w(static_cast<std::size_t>(t));
    for (auto i = static_cast<std::size_t>(t); i-- > 0;) {
        w[i] = static_cast<Letter>(index % static_cast<std::uint64_t>(n));
        index /= static_cast<std::uint64_t>(n);
    }
    return w;
}

std::optional<std::uint64_t> bounded_power(int n, int t, std::uint64_t cap) {
    std::uint64_t value = 1;
    for (int i = 0; i < t; ++i) {
        if (value > cap / static_cast<std::uint64_t>(n)) {
            return std::nullopt;
        }
        value *= static_cast<std::uint64_t>(n);
    }
    if (value > cap) {
        return std::nullopt;
    }
    return value;
}

std::uint64_t word_count_within(int n, int t, std::uint64_t cap) {
    if (t < 1) {
        throw std::invalid_argument("depth t must be at least 1, got " + std::to_string(t));
    }
    auto count = bounded_power(n, t, cap);
    if (!count) {
        throw CapExceeded(std::to_string(n) + "^" + std::to_string(t) + " words exceed the vertex cap of " +
                          std::to_string(cap) + "; lower t or raise the cap (GASKETLAB_VERTEX_CAP / --vertex-cap)");
    }
    return *count;
}

void for_each_label(const BaseGraph& g, int t, std::uint64_t cap,
                    const std::function<void(const VertexLabel&)>& visit) {
    const auto total = word_count_within(g.order(), t, cap);
    Word w(static_cast<std::size_t>(t), 0);
    for (std::uint64_t index = 0; index < total; ++index) {
        auto label = canonicalize(w, g);
        // Each class is visited at its representative, the smaller word.
        if (!label.is_contracted() || w.back() == label.high()) {
            visit(label);
        }
        for (auto i = w.size(); i-- > 0;) {
            if (++w[i] < g.order()) {
                break;
            }
            w[i] = 0;
        }
    }
}

std::vector<VertexLabel> enumerate_labels(const BaseGraph& g, int t, std::uint64_t cap) {
    std::vector<VertexLabel> out;
    for_each_label(g, t, cap, [&](const VertexLabel& label) { out.push_back(label); });
    return out;
}

std::optional<VertexLabel> strip_first_letter(const VertexLabel& label, Letter first, const BaseGraph& g) {
    if (label.depth() < 2) {
        return std::nullopt;
    }
    for (const auto& w : expand(label)) {
        if (w.front() == first) {
            return canonicalize(std::span<const Letter>(w).subspan(1), g);
        }
    }
    return std::nullopt;
}

namespace {

std::uint64_t power(int n, int t) {
    std::uint64_t value = 1;
    for (int i = 0; i < t; ++i) {
        value *= static_cast<std::uint64_t>(n);
    }
    return value;
}

// 1 + n + ... + n^(k-1) = (n^k - 1) / (n - 1).
std::uint64_t geometric(int n, int k) {
    std::uint64_t sum = 0;
    for (int i = 0; i < k; ++i) {
        sum += power(n, i);
    }
    return sum;
}

} // namespace

std::uint64_t sierpinski_order(const BaseGraph& g, int t) { return power(g.order(), t); }

std::uint64_t sierpinski_size(const BaseGraph& g, int t) { return g.edge_count() * geometric(g.order(), t); }

std::uint64_t gasket_order(const BaseGraph& g, int t) {
    return power(g.order(), t) - g.edge_count() * geometric(g.order(), t - 1);
}

std::uint64_t gasket_size(const BaseGraph& g, int t) { return g.edge_count() * power(g.order(), t - 1); }

std::uint64_t component_formula(const BaseGraph& g, std::size_t base_components, int t) {
    const auto n = static_cast<std::uint64_t>(g.order());
    const auto cc = static_cast<std::uint64_t>(base_components);
    return (power(g.order(), t) * (cc - 1) + n - cc) / (n - 1);
}

} // namespace gasketlab

std::size_t std::hash<gasketlab::VertexLabel>::operator()(const gasketlab::VertexLabel& label) const noexcept {
    std::size_t h = static_cast<std::size_t>(label.level()) * 0x9E3779B97F4A7C15ULL;
    h ^= (static_cast<std::size_t>(label.low()) << 8) | label.high();
    for (auto letter : label.letters()) {
        h = (h ^ letter) * 0x100000001B3ULL;
    }
    return h;
}
