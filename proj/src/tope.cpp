#include "cyclotope/tope.hpp"

#include <algorithm>
#include <bit>

namespace cyclotope {

Tope make_tope(std::span<const int> entries) {
    if (entries.empty()) throw EmptyInput();
    Tope tope;
    tope.signs.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] != 1 && entries[i] != -1) throw BadEntry(i, entries[i]);
        tope.signs.push_back(static_cast<std::int8_t>(entries[i]));
    }
    return tope;
}

Tope make_tope(std::initializer_list<int> entries) {
    return make_tope(std::span<const int>(entries.begin(), entries.size()));
}

Tope positive_tope(int t) {
    Tope tope;
    tope.signs.assign(static_cast<std::size_t>(t), 1);
    return tope;
}

Tope negate(const Tope& tope) {
    Tope out = tope;
    for (auto& s : out.signs) s = static_cast<std::int8_t>(-s);
    return out;
}

Tope flipped(const Tope& tope, int position) {
    Tope out = tope;
    auto& s = out.signs[static_cast<std::size_t>(position)];
    s = static_cast<std::int8_t>(-s);
    return out;
}

std::string to_string(const Tope& tope) {
    std::string text;
    text.reserve(tope.signs.size());
    for (auto s : tope.signs) text.push_back(s > 0 ? '+' : '-');
    return text;
}

Tope parse_tope(const std::string& text) {
    if (text.empty()) throw EmptyInput();
    Tope tope;
    tope.signs.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '+')
            tope.signs.push_back(1);
        else if (text[i] == '-')
            tope.signs.push_back(-1);
        else
            throw ParseError("bad sign character '" + std::string(1, text[i]) + "' at column " +
                             std::to_string(i + 1));
    }
    return tope;
}

bool tope_less(const Tope& a, const Tope& b) {
    const std::size_t n = std::min(a.signs.size(), b.signs.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.signs[i] != b.signs[i]) return a.signs[i] > b.signs[i];  // +1 sorts first
    }
    return a.signs.size() < b.signs.size();
}

std::uint64_t tope_mask(const Tope& tope) {
    std::uint64_t mask = 0;
    for (int i = 0; i < tope.t(); ++i)
        if (tope.signs[static_cast<std::size_t>(i)] < 0) mask |= std::uint64_t{1} << i;
    return mask;
}

Tope tope_from_mask(int t, std::uint64_t mask) {
    Tope tope = positive_tope(t);
    for (int i = 0; i < t; ++i)
        if (mask & (std::uint64_t{1} << i)) tope.signs[static_cast<std::size_t>(i)] = -1;
    return tope;
}

static void require_same_length(const Tope& a, const Tope& b) {
    if (a.signs.size() != b.signs.size()) throw LengthMismatch(a.signs.size(), b.signs.size());
}

long long inner_product(const Tope& a, const Tope& b) {
    require_same_length(a, b);
    long long sum = 0;
    for (std::size_t i = 0; i < a.signs.size(); ++i)
        sum += static_cast<long long>(a.signs[i]) * b.signs[i];
    return sum;
}

std::vector<int> separation_set(const Tope& a, const Tope& b) {
    require_same_length(a, b);
    std::vector<int> elements;
    for (int i = 0; i < a.t(); ++i)
        if (a.signs[static_cast<std::size_t>(i)] != b.signs[static_cast<std::size_t>(i)])
            elements.push_back(i + 1);
    return elements;
}

std::uint64_t separation_mask(const Tope& a, const Tope& b) {
    require_same_length(a, b);
    return tope_mask(a) ^ tope_mask(b);
}

long long graph_distance(const Tope& a, const Tope& b) {
    return (a.t() - inner_product(a, b)) / 2;
}

long long poset_rank(const Tope& tope, const Tope& base) { return graph_distance(base, tope); }

bool poset_leq(const Tope& a, const Tope& b, const Tope& base) {
    const std::uint64_t sa = separation_mask(base, a);
    const std::uint64_t sb = separation_mask(base, b);
    return (sa & ~sb) == 0;
}

}  // namespace cyclotope
