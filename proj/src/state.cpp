#include "ducci/state.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace ducci {

bool PState::is_all_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](PElement e) { return e.is_zero(); });
}

PState rotate(const PState& state, std::ptrdiff_t k) {
    PState out = state;
    const auto n = static_cast<std::ptrdiff_t>(state.size());
    if (n == 0) return out;
    const std::ptrdiff_t shift = ((k % n) + n) % n;
    std::rotate(out.entries.begin(), out.entries.begin() + shift, out.entries.end());
    return out;
}

std::optional<PState> as_pstate(const RationalState& seed) {
    PState out{{}, seed.prime};
    out.entries.reserve(seed.size());
    for (const Rational& x : seed.entries) {
        auto el = as_element(x, seed.prime);
        if (!el) return std::nullopt;
        out.entries.push_back(*el);
    }
    return out;
}

RationalState materialize(const PState& state, std::int64_t bound) {
    RationalState out{{}, state.prime};
    out.entries.reserve(state.size());
    for (PElement el : state.entries) out.entries.push_back(element_value(el, state.prime, bound));
    return out;
}

std::string to_string(PElement el, Prime p) {
    if (el.is_zero()) return "0";
    return std::to_string(p.value()) + "^" + std::to_string(el.exponent());
}

namespace {

template <class T, class F>
std::string join(const std::vector<T>& items, F&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        out += fmt(items[i]);
    }
    return out;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    if (text.empty()) throw std::invalid_argument("empty state");
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    for (auto part : parts)
        if (part.empty()) throw std::invalid_argument("empty entry in '" + std::string(text) + "'");
    return parts;
}

template <class Int>
Int parse_int(std::string_view text, std::string_view what) {
    Int value{};
    std::string_view body = text;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc() || ptr != body.data() + body.size() || body.empty())
        throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

} // namespace

std::string to_string(const PState& state) {
    return join(state.entries, [&](PElement e) { return to_string(e, state.prime); });
}

std::string to_string(const RationalState& state) {
    return join(state.entries, [](const Rational& r) { return r.to_string(); });
}

std::string to_string(const BitState& state) {
    std::string out;
    for (auto b : state.bits) out += b ? '1' : '0';
    return out;
}

PElement parse_element(std::string_view text, Prime p) {
    if (text == "0") return PElement::zero();
    const auto caret = text.find('^');
    if (caret == std::string_view::npos)
        throw std::invalid_argument("malformed element: '" + std::string(text) + "' (expected 0 or p^e)");
    const auto base = parse_int<std::uint64_t>(text.substr(0, caret), "element base");
    if (base != p.value())
        throw std::invalid_argument("element base " + std::to_string(base) + " does not match p = " +
                                    std::to_string(p.value()));
    return PElement::pow(parse_int<std::int64_t>(text.substr(caret + 1), "element exponent"));
}

PState parse_pstate(std::string_view text, Prime p) {
    PState out{{}, p};
    for (auto part : split_commas(text)) out.entries.push_back(parse_element(part, p));
    return out;
}

RationalState parse_seed(std::string_view text, Prime p) {
    RationalState out{{}, p};
    for (auto part : split_commas(text)) out.entries.push_back(Rational::parse(part));
    return out;
}

BitState parse_bits(std::string_view text) {
    BitState out;
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("malformed bit string: '" + std::string(text) + "'");
        out.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

} // namespace ducci
