#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <vector>

#include "gridplan/lp.hpp"

namespace gridplan {

struct SolverOptions {
    double feas_tol = 1e-7;    // bound violation tolerance on scaled data
    double opt_tol = 1e-7;     // reduced-cost tolerance on scaled data
    double pivot_tol = 1e-9;   // smallest acceptable ratio-test pivot
    int refactor_interval = 100;
    int64_t max_iterations = 200000;
    int bland_streak = 100;    // degenerate pivots before Bland's rule kicks in
    int cleanup_rounds = 5;
    bool scale = true;
};

// Backend-independent solver surface so an external LP engine can stand in.
class SolverBackend {
public:
    virtual ~SolverBackend() = default;
    virtual Solution solve(const LinearProgram& lp) = 0;
};

// Bounded-variable revised simplex.
//
// Rows become equalities with one slack each (<= gives s in [0,inf),
// >= gives s in (-inf,0], = pins s at 0). The basis inverse is a sparse
// LU refreshed every refactor_interval pivots and patched in between with
// product-form eta vectors. Phase 1 runs the composite scheme: infeasible
// basics price at +/-1 and leave the basis when they reach the violated
// bound. Entering choice is Dantzig with lowest-index tie-breaks, so
// repeated solves of one LP are bit-identical.
class SimplexSolver : public SolverBackend {
public:
    explicit SimplexSolver(SolverOptions opt = {}) : opt_(opt) {}

    Solution solve(const LinearProgram& lp) override {
        setup(lp);
        Solution sol;
        sol.status = run(sol);
        extract(lp, sol);
        return sol;
    }

private:
    enum VStat : uint8_t { kBasic, kAtLower, kAtUpper, kFree };

    SolverOptions opt_;

    // problem in scaled slack form
    int m_ = 0;                 // rows
    int n_ = 0;                 // structural columns
    int ncol_ = 0;              // n_ + m_
    std::vector<int> col_ptr_;
    std::vector<int> col_row_;
    std::vector<double> col_val_;
    std::vector<double> lb_, ub_, cost_;
    std::vector<double> rhs_;
    std::vector<double> row_scale_, col_scale_;
    double cost_scale_ = 1.0;

    // basis state
    std::vector<int> basis_;        // position -> column
    std::vector<VStat> vstat_;      // column -> status
    std::vector<double> x_;         // column -> current value (scaled)
    std::vector<uint8_t> banned_;   // columns with numerically unusable pivot columns

    // factorization of the basis at the last refactor
    struct Factor {
        std::vector<std::vector<std::pair<int, double>>> lcol;  // by original row
        std::vector<std::vector<std::pair<int, double>>> ucol;  // by step index
        std::vector<double> diag;
        std::vector<int> pivot_row;   // step -> row
        std::vector<int> step_pos;    // step -> basis position
    } f_;
    struct Eta {
        int pos;
        double mu_pos;
        std::vector<std::pair<int, double>> mu;  // position -> multiplier, pos excluded
    };
    std::vector<Eta> etas_;
    int64_t iterations_ = 0;
    int degen_streak_ = 0;

    std::vector<double> work_, work2_;
    std::vector<double> final_y_;  // scaled duals at termination (phase-2 or Farkas)
    std::vector<double> ray_;      // scaled unbounded direction

    static double pow2_near(double v) {
        if (v <= 0.0 || !std::isfinite(v)) return 1.0;
        int e = 0;
        std::frexp(v, &e);
        return std::ldexp(1.0, e - 1);  // largest power of two <= v (within a factor of 2)
    }

    void setup(const LinearProgram& lp) {
        m_ = static_cast<int>(lp.num_rows());
        n_ = static_cast<int>(lp.num_variables());
        ncol_ = n_ + m_;

        row_scale_.assign(m_, 1.0);
        col_scale_.assign(n_, 1.0);
        if (opt_.scale) {
            for (int i = 0; i < m_; ++i) {
                double mx = 0.0;
                for (const auto& [j, v] : lp.row(i).terms) mx = std::max(mx, std::fabs(v));
                if (mx > 0.0) row_scale_[i] = 1.0 / pow2_near(mx);
            }
            std::vector<double> colmax(n_, 0.0);
            for (int i = 0; i < m_; ++i)
                for (const auto& [j, v] : lp.row(i).terms)
                    colmax[j] = std::max(colmax[j], std::fabs(v) * row_scale_[i]);
            for (int j = 0; j < n_; ++j)
                if (colmax[j] > 0.0) col_scale_[j] = 1.0 / pow2_near(colmax[j]);
        }

        // column-major scaled matrix, slacks appended as identity columns
        std::vector<int> count(ncol_, 0);
        for (int i = 0; i < m_; ++i)
            for (const auto& [j, v] : lp.row(i).terms) ++count[j];
        for (int i = 0; i < m_; ++i) count[n_ + i] = 1;
        col_ptr_.assign(ncol_ + 1, 0);
        for (int j = 0; j < ncol_; ++j) col_ptr_[j + 1] = col_ptr_[j] + count[j];
        col_row_.assign(col_ptr_[ncol_], 0);
        col_val_.assign(col_ptr_[ncol_], 0.0);
        std::vector<int> fill(col_ptr_.begin(), col_ptr_.end() - 1);
        for (int i = 0; i < m_; ++i) {
            for (const auto& [j, v] : lp.row(i).terms) {
                col_row_[fill[j]] = i;
                col_val_[fill[j]] = v * row_scale_[i] * col_scale_[j];
                ++fill[j];
            }
        }
        for (int i = 0; i < m_; ++i) {
            col_row_[fill[n_ + i]] = i;
            col_val_[fill[n_ + i]] = 1.0;
        }

        lb_.assign(ncol_, 0.0);
        ub_.assign(ncol_, kInf);
        cost_.assign(ncol_, 0.0);
        rhs_.assign(m_, 0.0);
        double cmax = 1.0;
        for (int j = 0; j < n_; ++j) {
            const auto& v = lp.variable(j);
            lb_[j] = v.lb / col_scale_[j];
            ub_[j] = v.ub / col_scale_[j];
            cost_[j] = v.cost * col_scale_[j];
            cmax = std::max(cmax, std::fabs(cost_[j]));
        }
        cost_scale_ = cmax;
        for (int j = 0; j < n_; ++j) cost_[j] /= cost_scale_;
        for (int i = 0; i < m_; ++i) {
            const auto& r = lp.row(i);
            rhs_[i] = r.rhs * row_scale_[i];
            int s = n_ + i;
            switch (r.sense) {
                case RowSense::LE: lb_[s] = 0.0;   ub_[s] = kInf; break;
                case RowSense::GE: lb_[s] = -kInf; ub_[s] = 0.0;  break;
                case RowSense::EQ: lb_[s] = 0.0;   ub_[s] = 0.0;  break;
            }
        }

        basis_.resize(m_);
        vstat_.assign(ncol_, kAtLower);
        x_.assign(ncol_, 0.0);
        banned_.assign(ncol_, 0);
        for (int j = 0; j < ncol_; ++j) {
            if (lb_[j] > -kInf) {
                vstat_[j] = kAtLower;
                x_[j] = lb_[j];
            } else if (ub_[j] < kInf) {
                vstat_[j] = kAtUpper;
                x_[j] = ub_[j];
            } else {
                vstat_[j] = kFree;
                x_[j] = 0.0;
            }
        }
        for (int i = 0; i < m_; ++i) {
            basis_[i] = n_ + i;
            vstat_[n_ + i] = kBasic;
        }
        etas_.clear();
        iterations_ = 0;
        degen_streak_ = 0;
        work_.assign(m_, 0.0);
        work2_.assign(m_, 0.0);
        final_y_.assign(m_, 0.0);
        ray_.clear();
        refactor();
        compute_basics();
    }

    // ---- factorization -------------------------------------------------

    void refactor() {
        f_.lcol.assign(m_, {});
        f_.ucol.assign(m_, {});
        f_.diag.assign(m_, 0.0);
        f_.pivot_row.assign(m_, -1);
        f_.step_pos.assign(m_, -1);
        etas_.clear();
        if (m_ == 0) return;

        std::vector<int> row_step(m_, -1);
        std::vector<int> order(m_);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            int na = col_ptr_[basis_[a] + 1] - col_ptr_[basis_[a]];
            int nb = col_ptr_[basis_[b] + 1] - col_ptr_[basis_[b]];
            return na < nb;
        });

        std::vector<double> wx(m_, 0.0);
        std::vector<int> pattern, topo, stack, stack_edge;
        std::vector<uint8_t> mark(m_, 0);
        std::vector<int> deferred;

        auto factor_column = [&](int col, int step) -> bool {
            pattern.clear();
            topo.clear();
            // symbolic: reach set through already-pivoted L columns
            for (int p = col_ptr_[col]; p < col_ptr_[col + 1]; ++p) {
                int r0 = col_row_[p];
                if (mark[r0]) continue;
                stack.clear();
                stack_edge.clear();
                stack.push_back(r0);
                stack_edge.push_back(0);
                mark[r0] = 1;
                while (!stack.empty()) {
                    int r = stack.back();
                    int st = row_step[r];
                    bool descended = false;
                    if (st >= 0) {
                        auto& lc = f_.lcol[st];
                        for (int& e = stack_edge.back(); e < static_cast<int>(lc.size());) {
                            int child = lc[e].first;
                            ++e;
                            if (!mark[child]) {
                                mark[child] = 1;
                                stack.push_back(child);
                                stack_edge.push_back(0);
                                descended = true;
                                break;
                            }
                        }
                    }
                    if (!descended) {
                        topo.push_back(r);
                        pattern.push_back(r);
                        stack.pop_back();
                        stack_edge.pop_back();
                    }
                }
            }
            for (int p = col_ptr_[col]; p < col_ptr_[col + 1]; ++p)
                wx[col_row_[p]] = col_val_[p];
            // numeric: topological replay (topo is post-order; reverse it)
            for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
                int st = row_step[*it];
                if (st < 0) continue;
                double fval = wx[*it];
                if (fval == 0.0) continue;
                for (const auto& [r, lv] : f_.lcol[st]) wx[r] -= lv * fval;
            }
            // pivot: largest magnitude among unpivoted rows
            int prow = -1;
            double pmag = 0.0;
            for (int r : pattern) {
                if (row_step[r] >= 0) continue;
                double a = std::fabs(wx[r]);
                if (a > pmag) {
                    pmag = a;
                    prow = r;
                }
            }
            if (prow < 0 || pmag < 1e-11) {
                for (int r : pattern) {
                    wx[r] = 0.0;
                    mark[r] = 0;
                }
                return false;
            }
            double piv = wx[prow];
            f_.diag[step] = piv;
            f_.pivot_row[step] = prow;
            for (int r : pattern) {
                double v = wx[r];
                wx[r] = 0.0;
                mark[r] = 0;
                if (v == 0.0) continue;
                if (r == prow) continue;
                if (row_step[r] >= 0)
                    f_.ucol[step].emplace_back(row_step[r], v);
                else
                    f_.lcol[step].emplace_back(r, v / piv);
            }
            row_step[prow] = step;
            return true;
        };

        int step = 0;
        for (int k = 0; k < m_; ++k) {
            int pos = order[k];
            f_.step_pos[step] = pos;
            if (factor_column(basis_[pos], step))
                ++step;
            else
                deferred.push_back(pos);
        }
        // dependent columns: swap in slacks of the leftover rows
        if (!deferred.empty()) {
            std::vector<int> leftover;
            for (int r = 0; r < m_; ++r)
                if (row_step[r] < 0) leftover.push_back(r);
            size_t di = 0;
            for (int r : leftover) {
                int pos = deferred[di++];
                int old = basis_[pos];
                vstat_[old] = nonbasic_status_for(old);
                x_[old] = nonbasic_value(old);
                int scol = n_ + r;
                if (vstat_[scol] == kBasic) continue;  // cannot happen: its row is unpivoted
                basis_[pos] = scol;
                vstat_[scol] = kBasic;
                f_.step_pos[step] = pos;
                bool ok = factor_column(scol, step);
                (void)ok;
                ++step;
            }
        }
    }

    VStat nonbasic_status_for(int j) const {
        if (lb_[j] > -kInf) return kAtLower;
        if (ub_[j] < kInf) return kAtUpper;
        return kFree;
    }
    double nonbasic_value(int j) const {
        switch (nonbasic_status_for(j)) {
            case kAtLower: return lb_[j];
            case kAtUpper: return ub_[j];
            default: return 0.0;
        }
    }

    // z = B^-1 v; v indexed by row, result by basis position. In-place on work_.
    void ftran(std::vector<double>& v) {
        for (size_t k = 0; k < f_.pivot_row.size(); ++k) {
            int pr = f_.pivot_row[k];
            if (pr < 0) continue;
            double fval = v[pr];
            if (fval == 0.0) continue;
            for (const auto& [r, lv] : f_.lcol[k]) v[r] -= lv * fval;
        }
        std::vector<double>& y = work2_;
        for (int k = 0; k < m_; ++k) y[k] = v[f_.pivot_row[k]];
        for (int k = m_ - 1; k >= 0; --k) {
            double val = y[k] / f_.diag[k];
            y[k] = val;
            if (val == 0.0) continue;
            for (const auto& [t, uv] : f_.ucol[k]) y[t] -= uv * val;
        }
        for (int k = 0; k < m_; ++k) v[f_.step_pos[k]] = y[k];
        for (const auto& e : etas_) {
            double fval = v[e.pos];
            if (fval == 0.0) continue;
            v[e.pos] = e.mu_pos * fval;
            for (const auto& [i, mu] : e.mu) v[i] += mu * fval;
        }
    }

    // y^T = c^T B^-1; c indexed by basis position, result by row. In-place.
    void btran(std::vector<double>& c) {
        for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
            double s = it->mu_pos * c[it->pos];
            for (const auto& [i, mu] : it->mu) s += mu * c[i];
            c[it->pos] = s;
        }
        std::vector<double>& g = work2_;
        for (int k = 0; k < m_; ++k) g[k] = c[f_.step_pos[k]];
        for (int k = 0; k < m_; ++k) {
            double acc = g[k];
            for (const auto& [t, uv] : f_.ucol[k]) acc -= uv * g[t];
            g[k] = acc / f_.diag[k];
        }
        std::fill(c.begin(), c.end(), 0.0);
        for (int k = m_ - 1; k >= 0; --k) {
            double acc = g[k];
            for (const auto& [r, lv] : f_.lcol[k]) acc -= lv * c[r];
            c[f_.pivot_row[k]] = acc;
        }
    }

    void compute_basics() {
        std::vector<double>& v = work_;
        std::fill(v.begin(), v.end(), 0.0);
        for (int i = 0; i < m_; ++i) v[i] = rhs_[i];
        for (int j = 0; j < ncol_; ++j) {
            if (vstat_[j] == kBasic || x_[j] == 0.0) continue;
            double xv = x_[j];
            for (int p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) v[col_row_[p]] -= col_val_[p] * xv;
        }
        ftran(v);
        for (int i = 0; i < m_; ++i) x_[basis_[i]] = v[i];
    }

    double max_infeasibility() const {
        double worst = 0.0;
        for (int i = 0; i < m_; ++i) {
            int j = basis_[i];
            if (x_[j] < lb_[j]) worst = std::max(worst, lb_[j] - x_[j]);
            if (x_[j] > ub_[j]) worst = std::max(worst, x_[j] - ub_[j]);
        }
        return worst;
    }

    // ---- iteration machinery -------------------------------------------

    struct Pricing {
        int col = -1;
        int dir = 0;       // +1 grows from lower, -1 shrinks from upper
        double dj = 0.0;
    };

    Pricing price(const std::vector<double>& y, bool phase1, bool bland) {
        Pricing best;
        double best_score = opt_.opt_tol;
        for (int j = 0; j < ncol_; ++j) {
            VStat st = vstat_[j];
            if (st == kBasic || banned_[j]) continue;
            if (lb_[j] == ub_[j]) continue;  // fixed column can never improve
            double d = phase1 ? 0.0 : cost_[j];
            for (int p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p)
                d -= y[col_row_[p]] * col_val_[p];
            int dir = 0;
            if (st == kAtLower && d < -opt_.opt_tol) dir = 1;
            else if (st == kAtUpper && d > opt_.opt_tol) dir = -1;
            else if (st == kFree && std::fabs(d) > opt_.opt_tol) dir = d < 0 ? 1 : -1;
            if (dir == 0) continue;
            if (bland) return Pricing{j, dir, d};
            double score = std::fabs(d);
            if (score > best_score) {
                best_score = score;
                best = Pricing{j, dir, d};
            }
        }
        return best;
    }

    struct Ratio {
        double theta = kInf;
        int leave_pos = -1;      // -1 with finite theta means a bound flip
        bool leave_at_upper = false;
    };

    Ratio ratio_test(const std::vector<double>& w, int q, int dir, bool phase1, bool bland) {
        Ratio r;
        if (lb_[q] > -kInf && ub_[q] < kInf) r.theta = ub_[q] - lb_[q];
        double best_piv = 0.0;
        const double tol = opt_.feas_tol;
        for (int i = 0; i < m_; ++i) {
            double wi = w[i];
            if (std::fabs(wi) < opt_.pivot_tol) continue;
            int j = basis_[i];
            double rate = -dir * wi;  // dx_j / dtheta
            double xi = x_[j];
            double theta = kInf;
            bool at_upper = false;
            if (phase1 && xi < lb_[j] - tol) {
                if (rate > 0) { theta = (lb_[j] - xi) / rate; at_upper = false; }
            } else if (phase1 && xi > ub_[j] + tol) {
                if (rate < 0) { theta = (ub_[j] - xi) / rate; at_upper = true; }
            } else {
                if (rate > 0 && ub_[j] < kInf) { theta = (ub_[j] - xi) / rate; at_upper = true; }
                else if (rate < 0 && lb_[j] > -kInf) { theta = (lb_[j] - xi) / rate; at_upper = false; }
            }
            if (theta == kInf) continue;
            if (theta < 0) theta = 0;  // tiny negative from drift
            double window = 1e-9 * std::max(1.0, r.theta);
            bool better;
            if (theta < r.theta - window) {
                better = true;
            } else if (theta <= r.theta + window && r.leave_pos >= 0) {
                if (bland)
                    better = basis_[i] < basis_[r.leave_pos];
                else
                    better = std::fabs(wi) > best_piv;
            } else {
                better = theta < r.theta;
            }
            if (better) {
                r.theta = theta;
                r.leave_pos = i;
                r.leave_at_upper = at_upper;
                best_piv = std::fabs(wi);
            }
        }
        return r;
    }

    void apply_pivot(int q, int dir, const std::vector<double>& w, const Ratio& r) {
        double theta = r.theta;
        x_[q] += dir * theta;
        if (theta != 0.0)
            for (int i = 0; i < m_; ++i)
                if (w[i] != 0.0) x_[basis_[i]] -= dir * theta * w[i];
        if (r.leave_pos < 0) {
            // bound flip: q stays nonbasic at the opposite bound
            vstat_[q] = vstat_[q] == kAtLower ? kAtUpper : kAtLower;
            x_[q] = vstat_[q] == kAtLower ? lb_[q] : ub_[q];
            return;
        }
        int leave = basis_[r.leave_pos];
        vstat_[leave] = r.leave_at_upper ? kAtUpper : kAtLower;
        x_[leave] = r.leave_at_upper ? ub_[leave] : lb_[leave];
        basis_[r.leave_pos] = q;
        vstat_[q] = kBasic;

        Eta e;
        e.pos = r.leave_pos;
        double wp = w[r.leave_pos];
        e.mu_pos = 1.0 / wp;
        for (int i = 0; i < m_; ++i) {
            if (i == r.leave_pos || w[i] == 0.0) continue;
            e.mu.emplace_back(i, -w[i] / wp);
        }
        etas_.push_back(std::move(e));
        if (static_cast<int>(etas_.size()) >= opt_.refactor_interval) {
            refactor();
            compute_basics();
        }
    }

    void load_column(int j, std::vector<double>& v) {
        std::fill(v.begin(), v.end(), 0.0);
        for (int p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) v[col_row_[p]] = col_val_[p];
    }

    SolveStatus run(Solution& sol) {
        if (m_ == 0 && ncol_ == 0) return SolveStatus::Optimal;
        bool phase1 = max_infeasibility() > opt_.feas_tol;
        int cleanups = 0;
        std::vector<double> y(m_, 0.0);
        std::fill(banned_.begin(), banned_.end(), 0);

        while (true) {
            if (iterations_ >= opt_.max_iterations) return SolveStatus::IterationLimit;

            if (phase1 && max_infeasibility() <= opt_.feas_tol) {
                phase1 = false;
                std::fill(banned_.begin(), banned_.end(), 0);
                refactor();
                compute_basics();
                if (max_infeasibility() > opt_.feas_tol) phase1 = true;  // drift; retry
            }

            // duals for the current phase objective
            for (int i = 0; i < m_; ++i) {
                int j = basis_[i];
                if (phase1)
                    y[i] = x_[j] > ub_[j] + opt_.feas_tol ? 1.0
                         : x_[j] < lb_[j] - opt_.feas_tol ? -1.0
                                                          : 0.0;
                else
                    y[i] = cost_[j];
            }
            btran(y);

            bool bland = degen_streak_ >= opt_.bland_streak;
            Pricing pr = price(y, phase1, bland);
            if (pr.col < 0) {
                if (phase1) {
                    if (max_infeasibility() <= opt_.feas_tol) { phase1 = false; continue; }
                    final_y_ = y;  // Farkas multipliers
                    return SolveStatus::Infeasible;
                }
                // clean pass before accepting optimality
                if (cleanups < opt_.cleanup_rounds) {
                    ++cleanups;
                    refactor();
                    compute_basics();
                    std::fill(banned_.begin(), banned_.end(), 0);
                    if (max_infeasibility() > opt_.feas_tol) { phase1 = true; continue; }
                    for (int i = 0; i < m_; ++i) y[i] = cost_[basis_[i]];
                    btran(y);
                    Pricing re = price(y, false, false);
                    if (re.col >= 0) continue;
                }
                final_y_ = y;
                return SolveStatus::Optimal;
            }

            std::vector<double>& w = work_;
            load_column(pr.col, w);
            ftran(w);

            Ratio rt = ratio_test(w, pr.col, pr.dir, phase1, bland);
            if (rt.theta == kInf) {
                if (!phase1) {
                    ray_.assign(ncol_, 0.0);
                    ray_[pr.col] = pr.dir;
                    for (int i = 0; i < m_; ++i)
                        if (w[i] != 0.0) ray_[basis_[i]] = -pr.dir * w[i];
                    return SolveStatus::Unbounded;
                }
                banned_[pr.col] = 1;  // numerically unusable in phase 1
                continue;
            }
            ++iterations_;
            degen_streak_ = rt.theta <= 1e-10 ? degen_streak_ + 1 : 0;
            apply_pivot(pr.col, pr.dir, w, rt);
        }
    }

    void extract(const LinearProgram& lp, Solution& sol) {
        sol.iterations = iterations_;
        sol.primal.assign(n_, 0.0);
        for (int j = 0; j < n_; ++j) sol.primal[j] = x_[j] * col_scale_[j];
        double obj = lp.objective_offset();
        for (int j = 0; j < n_; ++j) obj += lp.variable(j).cost * sol.primal[j];
        sol.objective = obj;

        if (sol.status == SolveStatus::Optimal) {
            sol.dual.assign(m_, 0.0);
            for (int i = 0; i < m_; ++i) sol.dual[i] = final_y_[i] * row_scale_[i] * cost_scale_;
            sol.reduced_cost.assign(n_, 0.0);
            for (int j = 0; j < n_; ++j) {
                double d = cost_[j];
                for (int p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p)
                    d -= final_y_[col_row_[p]] * col_val_[p];
                if (vstat_[j] == kBasic) d = 0.0;
                sol.reduced_cost[j] = d * cost_scale_ / col_scale_[j];
            }
        } else if (sol.status == SolveStatus::Infeasible) {
            sol.infeasibility_ray.assign(m_, 0.0);
            for (int i = 0; i < m_; ++i)
                sol.infeasibility_ray[i] = final_y_[i] * row_scale_[i];
        } else if (sol.status == SolveStatus::Unbounded) {
            sol.unbounded_ray.assign(n_, 0.0);
            for (int j = 0; j < n_; ++j) sol.unbounded_ray[j] = ray_[j] * col_scale_[j];
        }
    }
};

inline Solution solve(const LinearProgram& lp, const SolverOptions& opt = {}) {
    SimplexSolver solver(opt);
    return solver.solve(lp);
}

}  // namespace gridplan
