#include "cpmatch/lp.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace cpmatch {

namespace {

enum class VarStatus : std::uint8_t { BASIC, AT_LOWER, AT_UPPER };

/// Dense-tableau primal simplex for max c.x, Ax <= b (b >= 0), 0 <= x <= u.
/// Slacks occupy columns n..n+m-1 with infinite upper bound.
class Simplex {
public:
    explicit Simplex(const RationalLP& lp) : n_(lp.num_vars()) {
        m_ = static_cast<int>(lp.rows.size());
        N_ = n_ + m_;
        tab_.assign(m_, std::vector<Rational>(N_, 0));
        beta_.assign(m_, 0);
        d_.assign(N_, 0);
        upper_.resize(N_);
        has_upper_.assign(N_, false);
        status_.assign(N_, VarStatus::AT_LOWER);
        basis_.resize(m_);
        for (int j = 0; j < n_; ++j) {
            d_[j] = lp.objective[j];
            upper_[j] = lp.upper[j];
            has_upper_[j] = true;
        }
        for (int i = 0; i < m_; ++i) {
            const LinRow& row = lp.rows[i];
            Rational sgn = row.rel == Relation::LE ? 1 : -1;
            for (const auto& [j, coef] : row.terms) tab_[i][j] += sgn * coef;
            Rational rhs = sgn * row.rhs;
            if (rhs < 0) throw std::logic_error("rhs must be nonnegative by construction");
            tab_[i][n_ + i] = 1;
            beta_[i] = rhs;
            basis_[i] = n_ + i;
            status_[n_ + i] = VarStatus::BASIC;
        }
    }

    void optimize() {
        bool bland = false;
        int stall = 0;
        while (true) {
            int j = pick_entering(bland);
            if (j < 0) break;
            int dir = status_[j] == VarStatus::AT_LOWER ? 1 : -1;
            auto [step, row] = ratio_test(j, dir);
            if (row < 0 && !has_upper_[j] && step < 0)
                throw std::logic_error("LP is unbounded, impossible by construction");
            if (row < 0) {
                // Bound flip: the entering variable traverses its whole range.
                for (int i = 0; i < m_; ++i) beta_[i] -= dir * step * tab_[i][j];
                obj_ += d_[j] * dir * step;
                status_[j] = status_[j] == VarStatus::AT_LOWER ? VarStatus::AT_UPPER
                                                               : VarStatus::AT_LOWER;
                continue;
            }
            if (step == 0) {
                if (++stall > 100) bland = true;  // anti-cycling fallback
            } else {
                stall = 0;
            }
            pivot(row, j, dir, step);
        }
    }

    LPSolution extract() const {
        LPSolution sol;
        sol.x.assign(n_, 0);
        for (int j = 0; j < n_; ++j)
            if (status_[j] == VarStatus::AT_UPPER) sol.x[j] = upper_[j];
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) sol.x[basis_[i]] = beta_[i];
        sol.objective = obj_;
        sol.basis = basis_;
        sol.optimal = true;
        sol.is_integral = is_integral(sol.x);
        sol.is_half_integral = is_half_integral(sol.x);
        return sol;
    }

    /// Nonbasic columns that can enter at zero objective change.
    std::vector<int> zero_cost_columns() const {
        std::vector<int> cols;
        for (int j = 0; j < N_; ++j)
            if (status_[j] != VarStatus::BASIC && d_[j] == 0) cols.push_back(j);
        return cols;
    }

    /// Performs the entering move for column j (pivot or bound flip); returns
    /// false for a zero-cost ray in slack space, which never moves x.
    bool advance_column(int j) {
        int dir = status_[j] == VarStatus::AT_LOWER ? 1 : -1;
        auto [step, row] = ratio_test(j, dir);
        if (row < 0) {
            if (!has_upper_[j]) return false;
            for (int i = 0; i < m_; ++i) beta_[i] -= dir * step * tab_[i][j];
            status_[j] = status_[j] == VarStatus::AT_LOWER ? VarStatus::AT_UPPER
                                                           : VarStatus::AT_LOWER;
            return true;
        }
        pivot(row, j, dir, step);
        return true;
    }

    /// Identifies the basis (basic set plus nonbasic bound statuses).
    std::string basis_key() const {
        std::string key;
        for (int b : basis_) key += std::to_string(b) + ',';
        for (VarStatus s : status_) key += static_cast<char>('a' + static_cast<int>(s));
        return key;
    }

private:
    int pick_entering(bool bland) const {
        int best = -1;
        Rational best_mag = 0;
        for (int j = 0; j < N_; ++j) {
            if (status_[j] == VarStatus::BASIC) continue;
            Rational mag;
            if (status_[j] == VarStatus::AT_LOWER && d_[j] > 0) mag = d_[j];
            else if (status_[j] == VarStatus::AT_UPPER && d_[j] < 0) mag = -d_[j];
            else continue;
            if (bland) return j;
            if (mag > best_mag) {
                best_mag = mag;
                best = j;
            }
        }
        return best;
    }

    // Max step for the entering column; returns (step, leaving row) with
    // row = -1 for a bound flip (step then equals the entering range).
    std::pair<Rational, int> ratio_test(int j, int dir) const {
        Rational step = -1;  // -1 encodes "unlimited"
        int row = -1;
        if (has_upper_[j]) step = upper_[j];
        for (int i = 0; i < m_; ++i) {
            Rational coef = dir * tab_[i][j];
            Rational lim;
            if (coef > 0) {
                lim = beta_[i] / coef;
            } else if (coef < 0 && has_upper_[basis_[i]]) {
                lim = (upper_[basis_[i]] - beta_[i]) / -coef;
            } else {
                continue;
            }
            if (step < 0 || lim < step ||
                (lim == step && row >= 0 && basis_[i] < basis_[row])) {
                if (step < 0 || lim < step) row = i;
                else row = i;  // equal limit: smaller basic index wins
                step = lim;
            }
        }
        if (row < 0) return {step, -1};
        return {step, row};
    }

    void pivot(int rr, int j, int dir, const Rational& step) {
        Rational enter_val = (status_[j] == VarStatus::AT_LOWER ? Rational(0) : upper_[j]) +
                             dir * step;
        int leaving = basis_[rr];
        Rational coef = dir * tab_[rr][j];
        status_[leaving] = coef > 0 ? VarStatus::AT_LOWER : VarStatus::AT_UPPER;
        for (int i = 0; i < m_; ++i) {
            if (i == rr) continue;
            beta_[i] -= dir * step * tab_[i][j];
        }
        beta_[rr] = enter_val;
        obj_ += d_[j] * dir * step;

        Rational piv = tab_[rr][j];
        for (int col = 0; col < N_; ++col) tab_[rr][col] /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == rr || tab_[i][j] == 0) continue;
            Rational f = tab_[i][j];
            for (int col = 0; col < N_; ++col) tab_[i][col] -= f * tab_[rr][col];
        }
        if (d_[j] != 0) {
            Rational f = d_[j];
            for (int col = 0; col < N_; ++col) d_[col] -= f * tab_[rr][col];
        }
        basis_[rr] = j;
        status_[j] = VarStatus::BASIC;
    }

    int n_, m_, N_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> beta_;
    std::vector<Rational> d_;
    std::vector<Rational> upper_;
    std::vector<bool> has_upper_;
    std::vector<VarStatus> status_;
    std::vector<int> basis_;
    Rational obj_ = 0;
};

/// Distinct optimal vertices reachable from the optimal basis through
/// zero-reduced-cost pivots and bound flips (breadth-first over bases, so
/// degenerate bases of the same vertex are traversed rather than skipped).
/// Sets 'capped' when the basis budget ran out before the frontier emptied.
std::vector<std::vector<Rational>> enumerate_optimal_vertices(const Simplex& root,
                                                              bool& capped,
                                                              int max_bases = 64) {
    capped = false;
    std::vector<Simplex> queue{root};
    std::set<std::string> seen{root.basis_key()};
    std::set<std::vector<Rational>> xs{root.extract().x};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Simplex cur = queue[qi];  // copy: growing the deque invalidates references
        for (int j : cur.zero_cost_columns()) {
            Simplex next = cur;
            if (!next.advance_column(j)) continue;
            if (!seen.insert(next.basis_key()).second) continue;
            if (static_cast<int>(seen.size()) > max_bases) {
                capped = true;
                return {xs.begin(), xs.end()};
            }
            xs.insert(next.extract().x);
            queue.push_back(std::move(next));
        }
    }
    return {xs.begin(), xs.end()};
}

void verify_solution(const RationalLP& lp, const LPSolution& sol) {
    Rational obj = 0;
    for (int j = 0; j < lp.num_vars(); ++j) {
        if (sol.x[j] < 0 || sol.x[j] > lp.upper[j])
            throw std::logic_error("solution violates a variable bound");
        obj += lp.objective[j] * sol.x[j];
    }
    if (obj != sol.objective) throw std::logic_error("objective mismatch");
    for (const LinRow& row : lp.rows) {
        Rational lhs = 0;
        for (const auto& [j, coef] : row.terms) lhs += coef * sol.x[j];
        bool ok = row.rel == Relation::LE ? lhs <= row.rhs : lhs >= row.rhs;
        if (!ok) throw std::logic_error("solution violates a constraint row");
    }
}

}  // namespace

bool is_integral(const std::vector<Rational>& x) {
    for (const Rational& v : x)
        if (v != 0 && v != 1) return false;
    return true;
}

bool is_half_integral(const std::vector<Rational>& x) {
    for (const Rational& v : x)
        if (v != 0 && v != 1 && v != Rational(1, 2)) return false;
    return true;
}

RationalLP build_clp(const WeightedGraph& g, const OddCycleSet& cycles) {
    validate_cycle_set(g, cycles);
    RationalLP lp;
    lp.objective.reserve(g.edge_count());
    for (const Edge& e : g.edges()) lp.objective.push_back(e.w);
    lp.upper.assign(g.edge_count(), 1);
    for (int i = 0; i < g.vertex_count(); ++i) {
        LinRow row{{}, Relation::LE, 1, RowTag::VERTEX, i, -1};
        for (int id : g.incident(i)) row.terms.push_back({id, 1});
        lp.rows.push_back(std::move(row));
    }
    for (int c = 0; c < cycles.size(); ++c) {
        const OddCycle& cyc = cycles.cycles[c];
        LinRow row{{}, Relation::LE, Rational((cyc.size() - 1) / 2), RowTag::CYCLE, c, -1};
        for (int id : cyc.edge_ids) row.terms.push_back({id, 1});
        lp.rows.push_back(std::move(row));
    }
    return lp;
}

RationalLP build_clp_prime(const TransformedModel& model) {
    RationalLP lp;
    lp.objective.reserve(model.edge_count_prime());
    for (const EdgePrime& e : model.edges_prime()) lp.objective.push_back(e.w2);
    lp.upper.assign(model.edge_count_prime(), 1);
    for (int i = 0; i < model.base().vertex_count(); ++i) {
        LinRow row{{}, Relation::LE, 1, RowTag::VERTEX, i, -1};
        for (int id : model.incident_prime(i)) row.terms.push_back({id, 1});
        lp.rows.push_back(std::move(row));
    }
    for (int c = 0; c < model.cycles().size(); ++c) {
        const int k = model.cycles().cycles[c].size();
        LinRow deg{{}, Relation::LE, Rational(k - 1), RowTag::DEGREE, c, -1};
        for (int j = 0; j < k; ++j) deg.terms.push_back({model.spoke_id(c, j), 1});
        lp.rows.push_back(std::move(deg));
        for (int a = 0; a < k; ++a) {
            LinRow hi{{}, Relation::LE, 2, RowTag::ALT_SUM, c, a};
            LinRow lo{{}, Relation::GE, 0, RowTag::ALT_SUM, c, a};
            for (int j = 0; j < k; ++j) {
                Rational s = model.sign(c, j, a);
                hi.terms.push_back({model.spoke_id(c, j), s});
                lo.terms.push_back({model.spoke_id(c, j), s});
            }
            lp.rows.push_back(std::move(hi));
            lp.rows.push_back(std::move(lo));
        }
    }
    return lp;
}

LPSolution solve(const RationalLP& lp) {
    if (lp.num_vars() == 0) {
        LPSolution sol;
        sol.optimal = true;
        sol.is_integral = sol.is_half_integral = true;
        return sol;
    }
    Simplex s(lp);
    s.optimize();
    LPSolution sol = s.extract();
    verify_solution(lp, sol);
    return sol;
}

TightUnique check_tight_unique_lp(const RationalLP& lp) {
    TightUnique out;
    if (lp.num_vars() == 0) {
        out.solution = solve(lp);
        out.tight = out.unique = true;
        return out;
    }
    Simplex s(lp);
    s.optimize();
    out.solution = s.extract();
    verify_solution(lp, out.solution);
    bool capped = false;
    auto vertices = enumerate_optimal_vertices(s, capped);
    out.unique = vertices.size() == 1 && !capped;
    out.tight = true;
    for (const auto& v : vertices)
        if (!is_integral(v)) out.tight = false;
    return out;
}

TightUnique check_tight_unique(const WeightedGraph& g, const OddCycleSet& cycles) {
    return check_tight_unique_lp(build_clp(g, cycles));
}

std::string dump_lp(const RationalLP& lp) {
    std::ostringstream out;
    auto term = [&](std::ostream& os, const Rational& coef, int j, bool first) {
        if (coef >= 0 && !first) os << " + ";
        else if (coef < 0) os << " - ";
        os << boost::multiprecision::abs(coef) << " x" << j;
    };
    out << "Maximize\n obj:";
    for (int j = 0; j < lp.num_vars(); ++j) term(out, lp.objective[j], j, j == 0);
    out << "\nSubject To\n";
    int rid = 0;
    for (const LinRow& row : lp.rows) {
        out << " r" << rid++ << ":";
        bool first = true;
        for (const auto& [j, coef] : row.terms) {
            term(out, coef, j, first);
            first = false;
        }
        out << (row.rel == Relation::LE ? " <= " : " >= ") << row.rhs << '\n';
    }
    out << "Bounds\n";
    for (int j = 0; j < lp.num_vars(); ++j)
        out << " 0 <= x" << j << " <= " << lp.upper[j] << '\n';
    out << "End\n";
    return out.str();
}

}  // namespace cpmatch
