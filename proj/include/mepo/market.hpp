#pragma once

#include <cstdint>
#include <vector>

#include "mepo/mdp.hpp"

// Driftless multi-factor lognormal forward-curve model: exact simulation and
// the closed-form conditional moments of the basis-function family.

namespace mepo {

// Piecewise-constant factor loadings. sigma(c, k, i, j) is the loading of
// factor k on commodity c's futures maturing at stage j, in force over the
// stage interval [T_i, T_{i+1}); defined for 0 <= i < j <= I-1.
class FactorLoadings {
  public:
    FactorLoadings() = default;
    FactorLoadings(int stages, int factors, std::vector<double> stage_year_fraction);

    int stages() const { return stages_; }
    int factors() const { return factors_; }
    double dt(int interval) const { return dt_.at(interval); }
    const std::vector<double>& stage_year_fraction() const { return dt_; }

    double sigma(Commodity c, int k, int interval, int maturity) const {
        return sigma_[index(static_cast<int>(c), k, interval, maturity)];
    }
    void set_sigma(Commodity c, int k, int interval, int maturity, double value);

    // sum over k and intervals u in [i, j) of sigma(c,k,u,m) * sigma(c2,k,u,m2) * dt[u]
    double covariance_sum(Commodity c, int m, Commodity c2, int m2, int i, int j) const;

    bool is_zero() const;
    void validate() const;

  private:
    std::size_t index(int c, int k, int interval, int maturity) const;

    int stages_ = 0;
    int factors_ = 0;
    std::vector<double> dt_;
    std::vector<double> sigma_;
};

// One simulated path of forward curves: F(i, c, j) is the stage-i futures
// price of commodity c delivering at stage j >= i. F(i, c, i) is the spot.
class ForwardCurveScenario {
  public:
    explicit ForwardCurveScenario(int stages);

    int stages() const { return stages_; }
    double F(int i, Commodity c, int j) const { return data_[index(i, static_cast<int>(c), j)]; }
    double& F(int i, Commodity c, int j) { return data_[index(i, static_cast<int>(c), j)]; }

    SpotVector spot(int i) const {
        return {F(i, Commodity::Corn, i), F(i, Commodity::Ethanol, i), F(i, Commodity::Gas, i)};
    }

  private:
    std::size_t index(int i, int c, int j) const;

    int stages_;
    std::vector<std::size_t> row_offset_;  // triangular layout, one row per stage
    std::vector<double> data_;
};

// Initial forward curves F0: one price per commodity and maturity stage.
struct InitialCurves {
    std::vector<double> corn;     // $/bushel, index = maturity stage
    std::vector<double> ethanol;  // $/gallon
    std::vector<double> gas;      // $/MMBtu

    int stages() const { return static_cast<int>(corn.size()); }
    double at(Commodity c, int j) const;
    void validate(int stages) const;
};

// Deterministic per-path generator. Path l is a pure function of
// (F0, loadings, seed, l), independent of any other path.
class PathSimulator {
  public:
    PathSimulator(InitialCurves f0, FactorLoadings loadings, std::uint64_t seed);

    ForwardCurveScenario path(std::uint64_t l) const;
    int stages() const { return loadings_.stages(); }
    const InitialCurves& initial_curves() const { return f0_; }
    const FactorLoadings& loadings() const { return loadings_; }
    std::uint64_t seed() const { return seed_; }

  private:
    InitialCurves f0_;
    FactorLoadings loadings_;
    std::uint64_t seed_;
};

struct ScenarioSet {
    std::vector<ForwardCurveScenario> scenarios;
    std::uint64_t seed = 0;

    int count() const { return static_cast<int>(scenarios.size()); }
    const ForwardCurveScenario& operator[](int l) const { return scenarios[l]; }
};

// Simulates L paths by the exact lognormal step; deterministic given seed.
ScenarioSet simulate(const InitialCurves& f0, const FactorLoadings& loadings, int count,
                     std::uint64_t seed);

enum class MomentKind { Linear, Square, CrossCommodity, AdjacentMaturity };

// E[phi(F_j) | F_i] for the four non-constant basis kinds, conditioning on
// the stage-i curve of one scenario. c2 is used by CrossCommodity only.
double cond_moment(MomentKind kind, Commodity c, Commodity c2, int i, int j, int maturity,
                   const ForwardCurveScenario& scenario, const FactorLoadings& loadings);

// E[F_j^c(m) * F_j^c2(m2) | F_i]; the generic product moment behind the
// square, cross-commodity and adjacent-maturity kinds.
double expected_product(Commodity c, int m, Commodity c2, int m2, int i, int j,
                        const ForwardCurveScenario& scenario, const FactorLoadings& loadings);

}  // namespace mepo
