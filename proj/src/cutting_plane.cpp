#include "cpmatch/cutting_plane.hpp"

#include <stdexcept>

#include "cpmatch/bp.hpp"
#include "cpmatch/oracle.hpp"

namespace cpmatch {

std::string to_string(CPStatus s) {
    switch (s) {
        case CPStatus::MATCHING: return "MATCHING";
        case CPStatus::NON_HALF_INTEGRAL_TERMINATION: return "NON_HALF_INTEGRAL_TERMINATION";
        case CPStatus::NO_ODD_CYCLE_FOUND: return "NO_ODD_CYCLE_FOUND";
        case CPStatus::BUDGET_EXHAUSTED: return "BUDGET_EXHAUSTED";
    }
    return "UNKNOWN";
}

std::string to_string(InstanceClass c) {
    switch (c) {
        case InstanceClass::BASE_TIGHT: return "BASE_TIGHT";
        case InstanceClass::SOLVED_WITH_CUTS: return "SOLVED_WITH_CUTS";
        case InstanceClass::UNSOLVED: return "UNSOLVED";
    }
    return "UNKNOWN";
}

namespace {

struct StepResult {
    TernaryAssignment x;
    bool in_domain;
    long bp_rounds;
    bool bp_converged;
};

void count_values(const TernaryAssignment& x, CPRoundLog& log) {
    log.count_zero = log.count_half = log.count_one = 0;
    for (Tern t : x) {
        if (t == Tern::ZERO) ++log.count_zero;
        else if (t == Tern::HALF) ++log.count_half;
        else ++log.count_one;
    }
}

// Shared loop of the two variants; `relax` produces x under the current cycles.
template <typename Relax>
CPOutcome cp_loop(const WeightedGraph& g, int max_rounds, Relax relax) {
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
    CPOutcome out;
    OddCycleSet cycles;
    std::vector<bool> forbidden(g.edge_count(), false);

    for (int round = 1; round <= max_rounds; ++round) {
        StepResult step = relax(cycles);
        CPRoundLog log{round, cycles.size(), step.bp_rounds, step.bp_converged, 0, 0, 0};
        count_values(step.x, log);
        out.log.push_back(log);
        out.x = step.x;
        out.cycles = cycles;

        bool has_half = false;
        for (Tern t : step.x) has_half |= t == Tern::HALF;
        if (step.in_domain && !has_half) {
            Matching m;
            for (int id = 0; id < g.edge_count(); ++id)
                if (step.x[id] == Tern::ONE) m.edge_ids.push_back(id);
            MatchingCheck chk = validate_matching(g, m);
            if (!chk.ok) {
                // Integral but inconsistent decode; treated like the
                // non-half-integral terminal (the relaxation step failed).
                out.status = CPStatus::NON_HALF_INTEGRAL_TERMINATION;
                return out;
            }
            out.status = CPStatus::MATCHING;
            out.matching = std::move(m);
            out.weight = chk.total_weight;
            return out;
        }
        // An out-of-domain projection (inconsistent HALF spokes) is treated as
        // uncertainty: the flagged edges already read HALF, so another cut is
        // attempted instead of terminating outright.
        std::vector<bool> allowed(g.edge_count(), false);
        for (int id = 0; id < g.edge_count(); ++id) allowed[id] = step.x[id] == Tern::HALF;
        OddCycle found;
        if (!find_odd_cycle(g, allowed, forbidden, found)) {
            out.status = step.in_domain ? CPStatus::NO_ODD_CYCLE_FOUND
                                        : CPStatus::NON_HALF_INTEGRAL_TERMINATION;
            return out;
        }
        for (int id : found.edge_ids) forbidden[id] = true;
        cycles.cycles.push_back(std::move(found));
    }
    out.status = CPStatus::BUDGET_EXHAUSTED;
    out.cycles = std::move(cycles);
    return out;
}

}  // namespace

CPOutcome cp_bp(const WeightedGraph& g, long T, int max_rounds) {
    if (T < 2) throw std::invalid_argument("iteration budget must be >= 2");
    return cp_loop(g, max_rounds, [&](const OddCycleSet& cycles) {
        TransformedModel model = build_transform(g, cycles);
        TransformedBPRun run = run_bp(model, T);
        Projection proj = project_y_to_x(model, run.y);
        return StepResult{std::move(proj.x), proj.in_domain, run.rounds_used, run.converged};
    });
}

CPOutcome cp_lp(const WeightedGraph& g, int max_rounds) {
    return cp_loop(g, max_rounds, [&](const OddCycleSet& cycles) {
        LPSolution sol = solve(build_clp(g, cycles));
        // Vertices of the relaxation are half-integral; an exact solve cannot
        // leave the {0, 1/2, 1} domain.
        if (!sol.is_half_integral)
            throw std::logic_error("relaxation vertex is not half-integral");
        TernaryAssignment x(g.edge_count(), Tern::ZERO);
        for (int id = 0; id < g.edge_count(); ++id) {
            if (sol.x[id] == 1) x[id] = Tern::ONE;
            else if (sol.x[id] == Rational(1, 2)) x[id] = Tern::HALF;
        }
        return StepResult{std::move(x), true, 0, true};
    });
}

bool verify_optimal_matching(const WeightedGraph& g, const CPOutcome& outcome) {
    if (outcome.status != CPStatus::MATCHING) return false;
    if (g.edge_count() <= 30) {
        OracleResult oracle = brute_force_mwm(g);
        return outcome.weight == oracle.best_objective;
    }
    // Any relaxation optimum upper-bounds the MWM, so a matching attaining an
    // integral relaxation optimum is certified optimal.
    CPOutcome lp = cp_lp(g, default_max_rounds(g));
    if (lp.status == CPStatus::MATCHING) return outcome.weight == lp.weight;
    LPSolution bound = solve(build_clp(g, lp.cycles));
    return Rational(outcome.weight) == bound.objective;
}

InstanceClass classify_instance(const WeightedGraph& g, long T) {
    if (check_tight_unique(g, OddCycleSet{}).tight) return InstanceClass::BASE_TIGHT;
    CPOutcome bp = cp_bp(g, T, default_max_rounds(g));
    if (verify_optimal_matching(g, bp)) return InstanceClass::SOLVED_WITH_CUTS;
    return InstanceClass::UNSOLVED;
}

}  // namespace cpmatch
