#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace achlioptas {

/// Component sizes of the four endpoints of a round, taken before the round's
/// edge is added: the first candidate edge joins components of sizes (a, b),
/// the second one (c, d). All values are >= 1.
struct RoundSizes {
    std::uint32_t a;
    std::uint32_t b;
    std::uint32_t c;
    std::uint32_t d;
};

enum class Choice { First, Second };

/// An edge-choice rule. Strategies see only the four component sizes, never
/// vertex identities, and carry no state between rounds.
class Strategy {
  public:
    virtual ~Strategy() = default;
    virtual Choice decide(const RoundSizes& sizes) const noexcept = 0;
    /// Spec string accepted by parse_strategy.
    virtual std::string name() const = 0;
};

/// Bounded-size rule with cutoff K: every component size above K gets the same
/// weight, so the decision depends on sizes only through min(size, K+1).
/// Takes the first edge iff w(a)+w(b) <= w(c)+w(d) (ties go to the first edge).
class BoundedSizeStrategy final : public Strategy {
  public:
    /// weights[i] is the weight of size i+1 for i < K; weights[K] applies to
    /// every size above K. Requires cutoff >= 1 and weights.size() == cutoff+1.
    BoundedSizeStrategy(std::uint32_t cutoff, std::vector<int> weights);

    Choice decide(const RoundSizes& sizes) const noexcept override;
    std::string name() const override;

    int weight(std::uint32_t size) const noexcept;
    std::uint32_t cutoff() const noexcept { return cutoff_; }
    const std::vector<int>& weights() const noexcept { return weights_; }

    /// The greedy isolated-vertex minimizer: K = 1, w(1) = 1, w(s) = 2 for s > 1.
    static BoundedSizeStrategy min_p1();

  private:
    std::uint32_t cutoff_;
    std::vector<int> weights_;
};

/// Always the first edge: the classical one-choice (Erdos-Renyi) baseline.
Choice decide_first_edge(const RoundSizes& sizes) noexcept;

/// First edge iff it joins two isolated vertices, else second (Bohman-Frieze).
Choice decide_bohman_frieze(const RoundSizes& sizes) noexcept;

class FirstEdgeStrategy final : public Strategy {
  public:
    Choice decide(const RoundSizes& sizes) const noexcept override { return decide_first_edge(sizes); }
    std::string name() const override { return "first-edge"; }
};

class BohmanFriezeStrategy final : public Strategy {
  public:
    Choice decide(const RoundSizes& sizes) const noexcept override { return decide_bohman_frieze(sizes); }
    std::string name() const override { return "bohman-frieze"; }
};

/// Parses "minp1", "first-edge", "bohman-frieze" or
/// "bounded:K=<k>;w=<w1,...,wK,wBig>". Throws std::invalid_argument.
std::unique_ptr<Strategy> parse_strategy(std::string_view spec);

} // namespace achlioptas
