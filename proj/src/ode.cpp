#include "achlioptas/ode.hpp"

#include "achlioptas/format.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace achlioptas {

namespace {

void check_unit_interval(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("drift: argument must lie in [0,1]");
    }
}

// unchecked quartic, used by the integrator on intermediate stage values
inline double drift_poly(double x) {
    return x * (-4.0 + x * (4.0 + x * (-4.0 + 2.0 * x)));
}

inline double rk4_step(double value, double h) {
    const double k1 = drift_poly(value);
    const double k2 = drift_poly(value + 0.5 * h * k1);
    const double k3 = drift_poly(value + 0.5 * h * k2);
    const double k4 = drift_poly(value + h * k3);
    return value + h / 6.0 * (k1 + 2.0 * (k2 + k3) + k4);
}

} // namespace

double drift(double x) {
    check_unit_interval(x);
    return drift_poly(x);
}

double drift_from_cases(double x) {
    check_unit_interval(x);
    // Case 1: (1,1,*,*), prob x^2, change -2. Cases 2+3: exactly one isolated
    // endpoint on the first edge and the second edge is not (1,1), prob
    // x(1-x)(1-x^2) each, change -1. Case 4: first edge not (1,1), second
    // (1,1), prob (1-x^2)x^2, change -2. Cases 5+6: first edge between
    // non-isolated components, second edge with exactly one isolated endpoint,
    // prob x(1-x)^3 each, change -1.
    const double one = 1.0 - x;
    return -2.0 * x * x
           - 2.0 * x * one * (1.0 - x * x)
           - 2.0 * x * x * (1.0 - x * x)
           - 2.0 * x * one * one * one;
}

OdeSolution::OdeSolution(double h, double t_end, std::vector<double> values, std::string method)
    : h_(h), t_end_(t_end), values_(std::move(values)), method_(std::move(method)) {}

double OdeSolution::grid_t(std::size_t k) const {
    const double t = static_cast<double>(k) * h_;
    return t < t_end_ ? t : t_end_;
}

double OdeSolution::eval(double t) const {
    if (!(t >= 0.0) || t > t_end_ * (1.0 + 1e-12) + 1e-15) {
        throw std::out_of_range("OdeSolution::eval: t outside solved range");
    }
    if (t > t_end_) {
        t = t_end_;
    }
    const double pos = t / h_;
    auto k = static_cast<std::size_t>(pos);
    if (pos - static_cast<double>(k) > 1.0 - 1e-6) {
        ++k; // t is numerically the (k+1)-th node
    }
    if (k + 1 >= values_.size()) {
        return values_.back();
    }
    const double t0 = grid_t(k);
    const double t1 = grid_t(k + 1);
    const double w = t > t0 ? (t - t0) / (t1 - t0) : 0.0;
    return values_[k] + w * (values_[k + 1] - values_[k]);
}

OdeSolution solve_isolated_ode(double h, double t_end) {
    if (!(h > 0.0) || h > 0.01) {
        throw std::invalid_argument("solve_isolated_ode: step size must lie in (0, 0.01]");
    }
    if (!(t_end > 0.0) || t_end > 1.0) {
        throw std::invalid_argument("solve_isolated_ode: t_end must lie in (0, 1]");
    }
    const double ratio = t_end / h;
    auto steps = static_cast<std::size_t>(ratio);
    if (ratio - static_cast<double>(steps) > 1.0 - 1e-9) {
        ++steps; // t_end is numerically a multiple of h
    }
    std::vector<double> values;
    values.reserve(steps + 2);
    double value = 1.0;
    values.push_back(value);
    for (std::size_t k = 0; k < steps; ++k) {
        value = rk4_step(value, h);
        values.push_back(value);
    }
    const double remainder = t_end - static_cast<double>(steps) * h;
    if (remainder > 1e-9 * h) {
        values.push_back(rk4_step(value, remainder));
    }
    return OdeSolution(h, t_end, std::move(values), "rk4");
}

void write_ode_csv(const OdeSolution& sol, std::ostream& out, std::size_t stride) {
    if (stride == 0) {
        throw std::invalid_argument("write_ode_csv: stride must be >= 1");
    }
    out << "t,i\n";
    const std::size_t last = sol.grid_size() - 1;
    for (std::size_t k = 0; k < sol.grid_size(); k += stride) {
        out << format_g10(sol.grid_t(k)) << ',' << format_g10(sol.grid_value(k)) << '\n';
        if (k < last && k + stride > last) {
            out << format_g10(sol.grid_t(last)) << ',' << format_g10(sol.grid_value(last)) << '\n';
        }
    }
}

} // namespace achlioptas
