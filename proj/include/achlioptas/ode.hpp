#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace achlioptas {

/// Expected one-round change of the isolated-vertex proportion under the
/// greedy MinP1 rule: -4x + 4x^2 - 4x^3 + 2x^4. Domain [0,1].
double drift(double x);

/// The same quantity rebuilt from the six-case round classification
/// (probability times change, summed over the cases). Serves as an
/// independent route to drift(); the two agree identically on [0,1].
double drift_from_cases(double x);

/// Dense solution grid of i' = drift(i), i(0) = 1 on [0, t_end]. Nodes sit at
/// k*h with one shortened final step landing exactly on t_end when t_end is
/// not a multiple of h. Values are strictly decreasing and stay in (0, 1].
class OdeSolution {
  public:
    OdeSolution(double h, double t_end, std::vector<double> values, std::string method);

    double step() const { return h_; }
    double t_end() const { return t_end_; }
    const std::string& method() const { return method_; }

    std::size_t grid_size() const { return values_.size(); }
    double grid_t(std::size_t k) const;
    double grid_value(std::size_t k) const { return values_[k]; }

    /// Linear interpolation between adjacent grid nodes; exact at nodes.
    /// Throws std::out_of_range outside [0, t_end].
    double eval(double t) const;

  private:
    double h_;
    double t_end_;
    std::vector<double> values_;
    std::string method_;
};

/// Classic fixed-step fourth-order Runge-Kutta for the isolated-vertex ODE.
/// Requires 0 < h <= 0.01 and 0 < t_end <= 1.
OdeSolution solve_isolated_ode(double h, double t_end);

/// CSV "t,i", one row per grid node, thinned by `stride` (>= 1). The final
/// node is always written.
void write_ode_csv(const OdeSolution& sol, std::ostream& out, std::size_t stride = 1);

} // namespace achlioptas
