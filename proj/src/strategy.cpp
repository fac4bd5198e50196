#include "achlioptas/strategy.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace achlioptas {

BoundedSizeStrategy::BoundedSizeStrategy(std::uint32_t cutoff, std::vector<int> weights)
    : cutoff_(cutoff), weights_(std::move(weights)) {
    if (cutoff_ == 0) {
        throw std::invalid_argument("BoundedSizeStrategy: cutoff must be >= 1");
    }
    if (weights_.size() != static_cast<std::size_t>(cutoff_) + 1) {
        throw std::invalid_argument("BoundedSizeStrategy: need cutoff+1 weights (one per size class)");
    }
}

int BoundedSizeStrategy::weight(std::uint32_t size) const noexcept {
    const std::uint32_t clamped = size > cutoff_ ? cutoff_ + 1 : size;
    return weights_[clamped - 1];
}

Choice BoundedSizeStrategy::decide(const RoundSizes& s) const noexcept {
    const long first = static_cast<long>(weight(s.a)) + weight(s.b);
    const long second = static_cast<long>(weight(s.c)) + weight(s.d);
    return first <= second ? Choice::First : Choice::Second;
}

std::string BoundedSizeStrategy::name() const {
    if (cutoff_ == 1 && weights_ == std::vector<int>{1, 2}) {
        return "minp1";
    }
    std::ostringstream out;
    out << "bounded:K=" << cutoff_ << ";w=";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        out << (i ? "," : "") << weights_[i];
    }
    return out.str();
}

BoundedSizeStrategy BoundedSizeStrategy::min_p1() {
    return BoundedSizeStrategy(1, {1, 2});
}

Choice decide_first_edge(const RoundSizes&) noexcept {
    return Choice::First;
}

Choice decide_bohman_frieze(const RoundSizes& s) noexcept {
    return (s.a == 1 && s.b == 1) ? Choice::First : Choice::Second;
}

namespace {

// strict base-10 integer parse of the whole token
template <typename T>
T parse_int(std::string_view token, const char* what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument(std::string("strategy spec: bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

std::unique_ptr<Strategy> parse_strategy(std::string_view spec) {
    if (spec == "minp1") {
        return std::make_unique<BoundedSizeStrategy>(BoundedSizeStrategy::min_p1());
    }
    if (spec == "first-edge") {
        return std::make_unique<FirstEdgeStrategy>();
    }
    if (spec == "bohman-frieze") {
        return std::make_unique<BohmanFriezeStrategy>();
    }
    constexpr std::string_view prefix = "bounded:K=";
    if (spec.substr(0, prefix.size()) == prefix) {
        std::string_view rest = spec.substr(prefix.size());
        const auto semi = rest.find(";w=");
        if (semi == std::string_view::npos) {
            throw std::invalid_argument("strategy spec: expected 'bounded:K=<k>;w=<w1,...,wK,wBig>'");
        }
        const auto cutoff = parse_int<std::uint32_t>(rest.substr(0, semi), "cutoff");
        std::string_view list = rest.substr(semi + 3);
        std::vector<int> weights;
        while (!list.empty()) {
            const auto comma = list.find(',');
            weights.push_back(parse_int<int>(list.substr(0, comma), "weight"));
            if (comma == std::string_view::npos) {
                break;
            }
            list = list.substr(comma + 1);
        }
        return std::make_unique<BoundedSizeStrategy>(cutoff, std::move(weights));
    }
    throw std::invalid_argument("unknown strategy '" + std::string(spec) +
                                "' (expected minp1 | first-edge | bohman-frieze | bounded:K=<k>;w=<list>)");
}

} // namespace achlioptas
