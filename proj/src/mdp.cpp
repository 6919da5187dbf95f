#include "mepo/mdp.hpp"

namespace mepo {

void PlantParams::validate() const {
    if (stages < 2) throw ConfigError("stage count must be at least 2");
    if (mothball_stages < 1) throw ConfigError("mothball duration must be at least 1 stage");
    if (reactivation_stages < 1) throw ConfigError("reactivation duration must be at least 1 stage");
    if (!(discount_factor > 0.0 && discount_factor <= 1.0))
        throw ConfigError("discount factor must lie in (0, 1]");
    if (!(mothball_cost < suspension_cost && suspension_cost < production_cost))
        throw ConfigError("cost ordering C_M < C_S < C_P violated");
    if (output_mgal <= 0.0) throw ConfigError("output per stage must be positive");
}

OperatingMode OperatingMode::mothballed(int n, const PlantParams& params) {
    if (n < 1 || n > params.mothball_stages)
        throw std::domain_error("mothball step out of range");
    return {Tag::Mothballed, n};
}

OperatingMode OperatingMode::fully_mothballed(const PlantParams& params) {
    return {Tag::Mothballed, params.mothball_stages};
}

OperatingMode OperatingMode::reactivating(int n, const PlantParams& params) {
    if (n < 1 || n > params.reactivation_stages - 1)
        throw std::domain_error("reactivation step out of range");
    return {Tag::Reactivating, n};
}

std::string OperatingMode::name() const {
    switch (tag_) {
    case Tag::Abandoned: return "abandoned";
    case Tag::Operational: return "operational";
    case Tag::Mothballed: return "mothballed-" + std::to_string(step_);
    case Tag::Reactivating: return "reactivating-" + std::to_string(step_);
    }
    return "?";
}

ReducedMode reduced_index(const OperatingMode& x, const PlantParams& params) {
    if (x.tag() == OperatingMode::Tag::Operational) return ReducedMode::Operational;
    if (x.is_fully_mothballed(params)) return ReducedMode::FullyMothballed;
    if (x.tag() == OperatingMode::Tag::Abandoned) return ReducedMode::Abandoned;
    throw std::domain_error("mode " + x.name() + " is not in the reduced set");
}

OperatingMode mode_of(ReducedMode m, const PlantParams& params) {
    switch (m) {
    case ReducedMode::Operational: return OperatingMode::operational();
    case ReducedMode::FullyMothballed: return OperatingMode::fully_mothballed(params);
    case ReducedMode::Abandoned: return OperatingMode::abandoned();
    }
    throw std::domain_error("invalid reduced mode");
}

std::string reduced_mode_name(ReducedMode m) {
    switch (m) {
    case ReducedMode::Operational: return "operational";
    case ReducedMode::FullyMothballed: return "mothballed";
    case ReducedMode::Abandoned: return "abandoned";
    }
    return "?";
}

std::string Action::name() const {
    switch (tag_) {
    case Tag::Produce: return "produce";
    case Tag::Suspend: return "suspend";
    case Tag::Abandon: return "abandon";
    case Tag::ToMothball: return "mothball-" + std::to_string(step_);
    case Tag::ToReactivate: return "reactivate-" + std::to_string(step_);
    case Tag::ToOperational: return "to-operational";
    }
    return "?";
}

std::vector<Action> feasible_actions(int stage, const OperatingMode& x,
                                     const PlantParams& params) {
    const int last = params.stages - 1;
    if (stage < 0 || stage > last) throw std::domain_error("stage index out of range");

    using AT = Action::Tag;
    using MT = OperatingMode::Tag;

    // Abandonment is compulsory at the horizon end.
    if (stage == last) return {Action(AT::Abandon, 0)};

    std::vector<Action> out;
    switch (x.tag()) {
    case MT::Operational:
        out.emplace_back(Action(AT::Produce, 0));
        out.emplace_back(Action(AT::Suspend, 0));
        if (stage <= last - params.mothball_stages)
            out.emplace_back(Action(AT::ToMothball, 1));
        out.emplace_back(Action(AT::Abandon, 0));
        break;
    case MT::Mothballed:
        if (x.step() != params.mothball_stages) {
            out.emplace_back(Action(AT::ToMothball, x.step() + 1));
        } else {
            if (stage <= last - params.reactivation_stages)
                out.emplace_back(Action(AT::ToReactivate, 1));
            out.emplace_back(Action(AT::ToMothball, params.mothball_stages));  // stay
            out.emplace_back(Action(AT::Abandon, 0));
        }
        break;
    case MT::Reactivating:
        if (x.step() != params.reactivation_stages - 1)
            out.emplace_back(Action(AT::ToReactivate, x.step() + 1));
        else
            out.emplace_back(Action(AT::ToOperational, 0));
        break;
    case MT::Abandoned:
        out.emplace_back(Action(AT::Abandon, 0));
        break;
    }
    return out;
}

namespace {

// (x, a) pairs admitted by some stage's feasible set.
bool pair_feasible(const OperatingMode& x, const Action& a, const PlantParams& params) {
    using AT = Action::Tag;
    using MT = OperatingMode::Tag;
    switch (x.tag()) {
    case MT::Operational:
        return a.tag() == AT::Produce || a.tag() == AT::Suspend || a.tag() == AT::Abandon ||
               (a.tag() == AT::ToMothball && a.step() == 1);
    case MT::Mothballed:
        if (a.tag() == AT::Abandon) return true;  // forced at the final stage
        if (x.step() != params.mothball_stages)
            return a.tag() == AT::ToMothball && a.step() == x.step() + 1;
        return (a.tag() == AT::ToMothball && a.step() == params.mothball_stages) ||
               (a.tag() == AT::ToReactivate && a.step() == 1);
    case MT::Reactivating:
        if (a.tag() == AT::Abandon) return true;
        if (x.step() != params.reactivation_stages - 1)
            return a.tag() == AT::ToReactivate && a.step() == x.step() + 1;
        return a.tag() == AT::ToOperational;
    case MT::Abandoned:
        return a.tag() == AT::Abandon;
    }
    return false;
}

}  // namespace

double reward(const OperatingMode& x, const SpotVector& s, const Action& a,
              const PlantParams& params) {
    using AT = Action::Tag;
    using MT = OperatingMode::Tag;
    if (!pair_feasible(x, a, params))
        throw std::domain_error("infeasible mode/action pair " + x.name() + "/" + a.name());

    if (a.tag() == AT::Abandon)
        return x.tag() == MT::Abandoned ? 0.0 : params.salvage_value;

    if (x.tag() == MT::Operational) {
        switch (a.tag()) {
        case AT::Produce: {
            const double spread =
                s.ethanol - params.corn_per_gallon * s.corn - params.gas_per_gallon * s.gas;
            return spread * params.output_mgal - params.production_cost;
        }
        case AT::Suspend: return -params.suspension_cost;
        case AT::ToMothball: return -params.mothball_initiation_cost;
        default: break;
        }
    }
    if (x.is_fully_mothballed(params)) {
        if (a.tag() == AT::ToMothball) return -params.mothball_cost;   // keep mothballed
        if (a.tag() == AT::ToReactivate) return -params.reactivation_initiation_cost;
    }
    // Forced continuation steps of mothballing/reactivation carry no cash flow.
    return 0.0;
}

OperatingMode mode_transition(const OperatingMode& x, const Action& a,
                              const PlantParams& params) {
    using AT = Action::Tag;
    if (!pair_feasible(x, a, params))
        throw std::domain_error("infeasible mode/action pair " + x.name() + "/" + a.name());
    switch (a.tag()) {
    case AT::Produce:
    case AT::Suspend:
    case AT::ToOperational: return OperatingMode::operational();
    case AT::Abandon: return OperatingMode::abandoned();
    case AT::ToMothball: return OperatingMode::mothballed(a.step(), params);
    case AT::ToReactivate:
        // With a one-stage reactivation process there is no intermediate mode.
        if (a.step() > params.reactivation_stages - 1) return OperatingMode::operational();
        return OperatingMode::reactivating(a.step(), params);
    }
    throw std::domain_error("invalid action");
}

OperatingMode reduced_transition(const OperatingMode& x, const Action& a,
                                 const PlantParams& params) {
    using AT = Action::Tag;
    if (!x.in_reduced_set(params))
        throw std::domain_error("mode " + x.name() + " is not in the reduced set");
    if (!pair_feasible(x, a, params))
        throw std::domain_error("infeasible mode/action pair " + x.name() + "/" + a.name());
    switch (a.tag()) {
    case AT::Produce:
    case AT::Suspend:
    case AT::ToReactivate: return OperatingMode::operational();
    case AT::ToMothball: return OperatingMode::fully_mothballed(params);
    case AT::Abandon: return OperatingMode::abandoned();
    default:
        throw std::domain_error("action " + a.name() + " leaves the reduced chain");
    }
}

int stage_transition(int stage, const OperatingMode& x, const Action& a,
                     const PlantParams& params) {
    using AT = Action::Tag;
    if (!x.in_vfa_set(params))
        throw std::domain_error("mode " + x.name() + " has no stage transition");
    if (!pair_feasible(x, a, params))
        throw std::domain_error("infeasible mode/action pair " + x.name() + "/" + a.name());
    if (x.tag() == OperatingMode::Tag::Operational && a.tag() == AT::ToMothball)
        return stage + params.mothball_stages;
    if (x.is_fully_mothballed(params) && a.tag() == AT::ToReactivate)
        return stage + params.reactivation_stages;
    return stage + 1;
}

}  // namespace mepo
