#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hstree {

enum class Sense { LE, GE, EQ };

struct LpRow {
    std::string name;
    std::vector<std::pair<int, double>> terms;  // (variable index, coefficient)
    Sense sense = Sense::LE;
    double rhs = 0.0;
    // true for rows whose satisfaction depends on the distortion of a
    // candidate distribution rather than on bookkeeping alone
    bool distortion = false;
};

// Minimization LP over nonnegative variables. Rows carry names so that
// infeasibility certificates and witness reports can point at them.
struct Lp {
    std::vector<std::string> var_names;
    std::vector<double> objective;
    std::vector<LpRow> rows;

    int num_vars() const { return static_cast<int>(var_names.size()); }
    int add_var(std::string name, double obj = 0.0);
    void add_row(LpRow row) { rows.push_back(std::move(row)); }
};

enum class SolveStatus { Optimal, Infeasible, IterationLimit };

struct LpSolution {
    SolveStatus status = SolveStatus::IterationLimit;
    std::vector<double> values;  // one per model variable
    double objective = 0.0;
    std::string certificate;  // violated row name when infeasible
    long iterations = 0;
};

struct SolveLimits {
    long max_iterations = 0;  // 0 -> scaled with model size
};

// Two-phase dense primal simplex. Pivot selection is deterministic: steepest
// reduced cost with index tie-breaks, falling back to Bland's rule when the
// objective stalls, so runs are reproducible bit for bit. Equality rows that
// pin single variables are substituted away before the tableau is built.
LpSolution solve(const Lp& lp, const SolveLimits& limits = {});
LpSolution solve(const Lp& lp, const std::vector<std::pair<int, double>>& fixed,
                 const SolveLimits& limits = {});

// Evaluates every row at the given point; returns names and violation
// amounts of rows broken by more than tol.
std::vector<std::pair<std::string, double>> violated_rows(
    const Lp& lp, const std::vector<double>& values, double tol = 1e-7);

}  // namespace hstree
