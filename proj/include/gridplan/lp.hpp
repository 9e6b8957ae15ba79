#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "gridplan/common.hpp"

namespace gridplan {

enum class RowSense { LE, EQ, GE };

inline const char* to_string(RowSense s) {
    switch (s) {
        case RowSense::LE: return "<=";
        case RowSense::EQ: return "=";
        case RowSense::GE: return ">=";
    }
    return "?";
}

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterationLimit };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::IterationLimit: return "iteration_limit";
    }
    return "?";
}

// Sparse minimization LP over bounded variables. Rows are sense-tagged;
// a constant objective offset carries sunk costs that must not shift the
// argmin but should appear in reported objectives.
class LinearProgram {
public:
    struct Variable {
        double lb = 0.0;
        double ub = kInf;
        double cost = 0.0;
        std::string tag;
    };
    struct Row {
        std::vector<std::pair<int32_t, double>> terms;  // combined, sorted by column
        RowSense sense = RowSense::EQ;
        double rhs = 0.0;
        std::string tag;
    };

    VarId add_variable(double lb, double ub, double cost, std::string tag) {
        if (!(lb <= ub))
            throw ValidationError("variable '" + tag + "': inverted bounds [" +
                                  std::to_string(lb) + ", " + std::to_string(ub) + "]");
        if (!std::isfinite(cost))
            throw ValidationError("variable '" + tag + "': non-finite objective coefficient");
        vars_.push_back(Variable{lb, ub, cost, std::move(tag)});
        return VarId{static_cast<int32_t>(vars_.size() - 1)};
    }

    // Accepts an affine expression; the constant moves to the right-hand
    // side and duplicate variables are combined. Empty expressions are
    // legal (a vacuous or trivially infeasible row).
    RowId add_constraint(const LinExpr& expr, RowSense sense, double rhs, std::string tag) {
        Row row;
        row.sense = sense;
        row.rhs = rhs - expr.constant;
        row.tag = std::move(tag);
        if (!std::isfinite(row.rhs))
            throw ValidationError("row '" + row.tag + "': non-finite right-hand side");
        std::unordered_map<int32_t, size_t> seen;
        for (const auto& [v, coef] : expr.terms) {
            if (!v.valid() || static_cast<size_t>(v.value) >= vars_.size())
                throw ValidationError("row '" + row.tag + "': references unknown variable");
            if (!std::isfinite(coef))
                throw ValidationError("row '" + row.tag + "': non-finite coefficient");
            auto it = seen.find(v.value);
            if (it == seen.end()) {
                seen.emplace(v.value, row.terms.size());
                row.terms.emplace_back(v.value, coef);
            } else {
                row.terms[it->second].second += coef;
            }
        }
        std::sort(row.terms.begin(), row.terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows_.push_back(std::move(row));
        return RowId{static_cast<int32_t>(rows_.size() - 1)};
    }

    void add_objective_offset(double v) { objective_offset_ += v; }
    double objective_offset() const { return objective_offset_; }

    size_t num_variables() const { return vars_.size(); }
    size_t num_rows() const { return rows_.size(); }
    const Variable& variable(size_t j) const { return vars_[j]; }
    const Row& row(size_t i) const { return rows_[i]; }
    const std::vector<Variable>& variables() const { return vars_; }
    const std::vector<Row>& rows() const { return rows_; }

    double evaluate(const LinExpr& e, const std::vector<double>& x) const {
        double v = e.constant;
        for (const auto& [var, coef] : e.terms) v += coef * x[var.value];
        return v;
    }

private:
    std::vector<Variable> vars_;
    std::vector<Row> rows_;
    double objective_offset_ = 0.0;
};

struct Solution {
    SolveStatus status = SolveStatus::Infeasible;
    double objective = 0.0;               // includes the LP's constant offset
    std::vector<double> primal;           // per variable
    std::vector<double> dual;             // per row, d(objective)/d(rhs)
    std::vector<double> reduced_cost;     // per variable
    int64_t iterations = 0;
    // Infeasible: Farkas-style row multipliers proving no feasible point.
    std::vector<double> infeasibility_ray;
    // Unbounded: a feasible direction with negative objective slope.
    std::vector<double> unbounded_ray;
};

// Plain-text sparse dump for external cross-checks; grammar in
// docs/lp_format.md. Values use %.17g so a round-trip is exact.
inline void write_lp_text(const LinearProgram& lp, std::ostream& out) {
    char buf[64];
    auto num = [&](double v) -> std::string {
        if (v == kInf) return "inf";
        if (v == -kInf) return "-inf";
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    };
    out << "gridplan-lp 1\n";
    out << "minimize\n";
    out << "offset " << num(lp.objective_offset()) << "\n";
    for (size_t j = 0; j < lp.num_variables(); ++j) {
        const auto& v = lp.variable(j);
        out << "var " << j << " " << num(v.lb) << " " << num(v.ub) << " " << num(v.cost) << " "
            << v.tag << "\n";
    }
    for (size_t i = 0; i < lp.num_rows(); ++i) {
        const auto& r = lp.row(i);
        out << "row " << i << " " << to_string(r.sense) << " " << num(r.rhs) << " "
            << r.terms.size();
        for (const auto& [col, coef] : r.terms) out << " " << col << ":" << num(coef);
        out << " " << r.tag << "\n";
    }
}

}  // namespace gridplan
