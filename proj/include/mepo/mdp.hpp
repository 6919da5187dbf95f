#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Plant MDP: operating modes, feasible actions, per-stage rewards and the
// full / reduced / stage transition functions of the switching model.

namespace mepo {

// Commodity order is fixed everywhere: corn, ethanol, natural gas.
enum class Commodity : int { Corn = 0, Ethanol = 1, Gas = 2 };
inline constexpr int kCommodityCount = 3;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Plant parameters. Money is in millions of dollars; output in millions of
// gallons per stage, so the production reward needs no unit conversion.
struct PlantParams {
    int stages = 24;              // I
    int mothball_stages = 1;      // N_M, duration of the mothballing process
    int reactivation_stages = 3;  // N_R, duration of the reactivation process
    double output_mgal = 8.33;    // Q, millions of gallons per stage
    double corn_per_gallon = 0.36;   // gamma_C, bushels of corn per gallon
    double gas_per_gallon = 0.035;   // gamma_N, MMBtu of gas per gallon
    double production_cost = 2.25;   // C_P
    double suspension_cost = 0.5208; // C_S
    double mothball_cost = 0.02917;  // C_M
    double mothball_initiation_cost = 0.5;     // I_M
    double reactivation_initiation_cost = 2.5; // I_R
    double salvage_value = 0.0;   // S, net of abandonment costs
    double discount_factor = 0.995; // delta, per stage

    void validate() const;
};

// Operating mode: abandoned, operational, in stage n of mothballing
// (n = 1..N_M; n = N_M is fully mothballed), or in stage n of reactivation
// (n = 1..N_R-1).
class OperatingMode {
  public:
    enum class Tag : std::uint8_t { Abandoned, Operational, Mothballed, Reactivating };

    static OperatingMode abandoned() { return {Tag::Abandoned, 0}; }
    static OperatingMode operational() { return {Tag::Operational, 0}; }
    static OperatingMode mothballed(int n, const PlantParams& params);
    static OperatingMode fully_mothballed(const PlantParams& params);
    static OperatingMode reactivating(int n, const PlantParams& params);

    Tag tag() const { return tag_; }
    int step() const { return step_; }  // n for Mothballed/Reactivating, 0 otherwise

    bool is_fully_mothballed(const PlantParams& params) const {
        return tag_ == Tag::Mothballed && step_ == params.mothball_stages;
    }
    // X' = {O, M_{N_M}}: the modes carrying a value function approximation.
    bool in_vfa_set(const PlantParams& params) const {
        return tag_ == Tag::Operational || is_fully_mothballed(params);
    }
    // X'' = X' + {A}: the reduced-chain mode set.
    bool in_reduced_set(const PlantParams& params) const {
        return tag_ == Tag::Abandoned || in_vfa_set(params);
    }

    std::string name() const;
    friend bool operator==(const OperatingMode&, const OperatingMode&) = default;

  private:
    OperatingMode(Tag tag, int step) : tag_(tag), step_(step) {}
    Tag tag_;
    int step_;
};

// Index of a reduced-chain mode in dense tables: O = 0, M_{N_M} = 1, A = 2.
enum class ReducedMode : int { Operational = 0, FullyMothballed = 1, Abandoned = 2 };
inline constexpr int kReducedModeCount = 3;
inline constexpr int kVfaModeCount = 2;  // X' = {Operational, FullyMothballed}

ReducedMode reduced_index(const OperatingMode& x, const PlantParams& params);
OperatingMode mode_of(ReducedMode m, const PlantParams& params);
std::string reduced_mode_name(ReducedMode m);

// Plant action. Only feasible_actions constructs these, so an Action in
// hand is always a member of some feasible set.
class Action {
  public:
    enum class Tag : std::uint8_t {
        Produce,
        Suspend,
        Abandon,
        ToMothball,    // step() names the mothball stage entered
        ToReactivate,  // step() names the reactivation stage entered
        ToOperational,
    };

    Tag tag() const { return tag_; }
    int step() const { return step_; }

    std::string name() const;
    friend bool operator==(const Action&, const Action&) = default;

    friend std::vector<Action> feasible_actions(int stage, const OperatingMode& x,
                                                const PlantParams& params);

  private:
    Action(Tag tag, int step) : tag_(tag), step_(step) {}
    Tag tag_;
    int step_;
};

// Spot prices at one stage: corn $/bushel, ethanol $/gallon, gas $/MMBtu.
struct SpotVector {
    double corn = 0.0;
    double ethanol = 0.0;
    double gas = 0.0;

    double operator[](Commodity c) const {
        switch (c) {
        case Commodity::Corn: return corn;
        case Commodity::Ethanol: return ethanol;
        case Commodity::Gas: return gas;
        }
        throw std::domain_error("invalid commodity");
    }
};

// A_i(x): the feasible actions at stage i in mode x, in the canonical
// tie-break order (produce, suspend, mothball/reactivate transitions,
// stay, abandon). At the final stage it is {Abandon} for every mode.
std::vector<Action> feasible_actions(int stage, const OperatingMode& x,
                                     const PlantParams& params);

// r(x, s, a): the per-stage reward in $M. Throws std::domain_error when
// (x, a) is not feasible at any stage.
double reward(const OperatingMode& x, const SpotVector& s, const Action& a,
              const PlantParams& params);

// f(x, a): next-stage operating mode in the full chain.
OperatingMode mode_transition(const OperatingMode& x, const Action& a,
                              const PlantParams& params);

// f'(x, a): next mode in the reduced chain over X''. Requires x in X''.
OperatingMode reduced_transition(const OperatingMode& x, const Action& a,
                                 const PlantParams& params);

// g(i, x, a): stage reached by the reduced chain. Requires x in X'.
int stage_transition(int stage, const OperatingMode& x, const Action& a,
                     const PlantParams& params);

}  // namespace mepo
