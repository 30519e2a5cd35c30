#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "cpmatch/graph.hpp"
#include "cpmatch/transform.hpp"

namespace cpmatch {

using Rational = boost::multiprecision::mpq_rational;

enum class Relation : std::uint8_t { LE, GE };

enum class RowTag : std::uint8_t { VERTEX, CYCLE, ALT_SUM, DEGREE };

struct LinRow {
    std::vector<std::pair<int, Rational>> terms;  // (variable, coefficient), sparse
    Relation rel;
    Rational rhs;
    RowTag tag;
    int tag_a = -1;  // VERTEX: i; CYCLE/DEGREE: cycle index; ALT_SUM: cycle index
    int tag_b = -1;  // ALT_SUM: position of the cycle edge
};

/// Maximization LP with variable bounds 0 <= x_j <= upper[j].
struct RationalLP {
    std::vector<Rational> objective;
    std::vector<LinRow> rows;
    std::vector<Rational> upper;

    int num_vars() const { return static_cast<int>(objective.size()); }
};

struct LPSolution {
    std::vector<Rational> x;
    Rational objective;
    std::vector<int> basis;  // basic variable per row (slacks are n..n+m-1)
    bool optimal = false;
    bool is_integral = false;
    bool is_half_integral = false;
};

/// Matching relaxation on the original edge variables: one row per vertex,
/// one odd-cycle row per cycle, box bounds [0, 1].
RationalLP build_clp(const WeightedGraph& g, const OddCycleSet& cycles);

/// Image of the relaxation under the graph transformation, at the 2x weight
/// scale: vertex rows for original vertices only, one degree row per cycle and
/// two alternating-sum rows per cycle edge.
RationalLP build_clp_prime(const TransformedModel& model);

/// Exact primal simplex (bounded variables, Dantzig rule with a Bland
/// anti-cycling fallback). Deterministic; asserts the LP is feasible/bounded.
LPSolution solve(const RationalLP& lp);

struct TightUnique {
    bool tight = false;   // every optimal vertex found is integral
    bool unique = false;  // exactly one optimal vertex found, search uncapped
    LPSolution solution;
};

/// Solves the relaxation and walks the optimal face: zero-reduced-cost pivots
/// and bound flips, breadth-first over bases with a fixed budget. A capped
/// search reports unique=false and judges tightness from the vertices found.
TightUnique check_tight_unique(const WeightedGraph& g, const OddCycleSet& cycles);
TightUnique check_tight_unique_lp(const RationalLP& lp);

/// Text dump in LP format for cross-checking with external solvers.
std::string dump_lp(const RationalLP& lp);

bool is_integral(const std::vector<Rational>& x);
bool is_half_integral(const std::vector<Rational>& x);

}  // namespace cpmatch
