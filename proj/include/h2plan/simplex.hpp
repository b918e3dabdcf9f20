#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "h2plan/common.hpp"
#include "h2plan/lp.hpp"

namespace h2plan::lp {

enum class PivotRule { devex, dantzig, bland };

struct SolveOptions {
  int64_t max_iters = 200000;
  double tol_feas = 1e-7;   // absolute, pre-scaling
  double tol_opt = 1e-8;    // on reduced costs
  PivotRule pivot = PivotRule::devex;
  int refactor_interval = 64;
  int scaling_passes = 3;
};

namespace detail {

// Two-phase bounded-variable revised simplex. Variables are the structural
// columns, one slack per row, and one artificial per row. The basis is kept
// as an Eigen SparseLU factorization plus a product-form eta file.
class Simplex {
 public:
  Simplex(const LinearProgram& p, const SolveOptions& opt) : p_(p), opt_(opt) {
    n_ = p.num_cols();
    m_ = p.num_rows();
    build_matrix();
    scale();
  }

  SolveResult run() {
    init_point();
    refactor();

    phase1_ = true;
    bland_ = opt_.pivot == PivotRule::bland;
    devex_ = opt_.pivot == PivotRule::devex;
    SolveStatus st = iterate();
    if (st != SolveStatus::optimal) throw NumericalBreakdown("phase 1 terminated abnormally");
    double infeas = phase_objective();
    if (infeas > opt_.tol_feas * (1.0 + bnorm_)) {
      SolveResult r;
      r.status = SolveStatus::infeasible;
      r.iterations = iters_;
      // Farkas certificate from the phase-1 duals, mapped to original rows.
      std::vector<double> y = duals();
      r.certificate.resize(m_);
      for (int i = 0; i < m_; ++i) r.certificate[i] = y[i] * rowscale_[i];
      return r;
    }
    // Pin artificials at zero for phase 2.
    for (int i = 0; i < m_; ++i) ub_[n_ + m_ + i] = 0.0;
    phase1_ = false;
    stall_ = 0;
    last_obj_ = std::numeric_limits<double>::infinity();
    bland_ = opt_.pivot == PivotRule::bland;
    gamma_.assign(gamma_.size(), 1.0);  // fresh devex reference framework
    st = iterate();

    SolveResult r;
    r.status = st;
    r.iterations = iters_;
    if (st == SolveStatus::unbounded) {
      r.certificate.resize(n_, 0.0);
      for (int j = 0; j < n_; ++j)
        if (j < static_cast<int>(ray_.size())) r.certificate[j] = ray_[j] * colscale_[j];
      return r;
    }

    refactor();  // clean basic values before reporting
    r.primal.resize(n_);
    for (int j = 0; j < n_; ++j) r.primal[j] = x_[j] * colscale_[j];
    std::vector<double> y = duals();
    r.dual.resize(m_);
    for (int i = 0; i < m_; ++i) r.dual[i] = y[i] * rowscale_[i];
    r.reduced_cost.resize(n_);
    for (int j = 0; j < n_; ++j) {
      double d = cost_of(j) - dot_col(j, y);
      r.reduced_cost[j] = d / colscale_[j];
    }
    r.basis.assign(basis_.begin(), basis_.end());
    r.objective = 0;
    for (int j = 0; j < n_; ++j) r.objective += p_.cost[j] * r.primal[j];
    if (p_.maximize) {
      r.objective = -r.objective;
      for (auto& v : r.dual) v = -v;
      for (auto& v : r.reduced_cost) v = -v;
    }
    return r;
  }

 private:
  enum class VStat : char { Basic, AtLower, AtUpper, Free };

  const LinearProgram& p_;
  SolveOptions opt_;
  int n_ = 0, m_ = 0;

  // structural columns, CSC, scaled
  std::vector<int> colptr_, rowidx_;
  std::vector<double> val_;
  std::vector<double> scaled_cost_, b_;
  std::vector<double> rowscale_, colscale_;
  double bnorm_ = 1.0;

  // full variable space: [0,n) structural, [n,n+m) slack, [n+m,n+2m) artificial
  std::vector<double> lb_, ub_, x_;
  std::vector<VStat> stat_;
  std::vector<int> basis_;       // variable in each basis row
  std::vector<double> art_sign_;

  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
  struct Eta {
    int row;
    Eigen::VectorXd w;
  };
  std::vector<Eta> etas_;

  bool phase1_ = true;
  bool bland_ = false;
  bool devex_ = false;
  std::vector<double> gamma_;  // devex reference weights, full variable space
  int64_t iters_ = 0;
  int64_t stall_ = 0;
  double last_obj_ = std::numeric_limits<double>::infinity();
  std::vector<double> ray_;

  static bool finite_lb(double v) { return v > -kInf; }
  static bool finite_ub(double v) { return v < kInf; }

  void build_matrix() {
    std::vector<int> count(n_, 0);
    for (const auto& t : p_.entries) ++count[t.col];
    colptr_.assign(n_ + 1, 0);
    for (int j = 0; j < n_; ++j) colptr_[j + 1] = colptr_[j] + count[j];
    rowidx_.resize(p_.entries.size());
    val_.resize(p_.entries.size());
    std::vector<int> pos(colptr_.begin(), colptr_.end() - 1);
    for (const auto& t : p_.entries) {
      rowidx_[pos[t.col]] = t.row;
      val_[pos[t.col]] = t.value;
      ++pos[t.col];
    }
    // merge duplicate entries within a column
    for (int j = 0; j < n_; ++j) {
      int b = colptr_[j], e = colptr_[j + 1];
      std::vector<std::pair<int, double>> tmp;
      for (int k = b; k < e; ++k) tmp.push_back({rowidx_[k], val_[k]});
      std::sort(tmp.begin(), tmp.end());
      int out = b;
      for (size_t k = 0; k < tmp.size(); ++k) {
        if (out > b && rowidx_[out - 1] == tmp[k].first)
          val_[out - 1] += tmp[k].second;
        else {
          rowidx_[out] = tmp[k].first;
          val_[out] = tmp[k].second;
          ++out;
        }
      }
      // zero-fill any gap (duplicates merged)
      for (int k = out; k < e; ++k) {
        rowidx_[k] = tmp.empty() ? 0 : tmp.back().first;
        val_[k] = 0.0;
      }
    }
  }

  void scale() {
    rowscale_.assign(m_, 1.0);
    colscale_.assign(n_, 1.0);
    for (int pass = 0; pass < opt_.scaling_passes; ++pass) {
      std::vector<double> rmin(m_, kInf), rmax(m_, 0.0);
      for (int j = 0; j < n_; ++j)
        for (int k = colptr_[j]; k < colptr_[j + 1]; ++k) {
          double a = std::abs(val_[k] * rowscale_[rowidx_[k]] * colscale_[j]);
          if (a > 0) {
            rmin[rowidx_[k]] = std::min(rmin[rowidx_[k]], a);
            rmax[rowidx_[k]] = std::max(rmax[rowidx_[k]], a);
          }
        }
      for (int i = 0; i < m_; ++i)
        if (rmax[i] > 0) rowscale_[i] /= std::sqrt(rmin[i] * rmax[i]);
      std::vector<double> cmin(n_, kInf), cmax(n_, 0.0);
      for (int j = 0; j < n_; ++j)
        for (int k = colptr_[j]; k < colptr_[j + 1]; ++k) {
          double a = std::abs(val_[k] * rowscale_[rowidx_[k]] * colscale_[j]);
          if (a > 0) {
            cmin[j] = std::min(cmin[j], a);
            cmax[j] = std::max(cmax[j], a);
          }
        }
      for (int j = 0; j < n_; ++j)
        if (cmax[j] > 0) colscale_[j] /= std::sqrt(cmin[j] * cmax[j]);
    }
    for (int j = 0; j < n_; ++j)
      for (int k = colptr_[j]; k < colptr_[j + 1]; ++k)
        val_[k] *= rowscale_[rowidx_[k]] * colscale_[j];
    scaled_cost_.resize(n_);
    for (int j = 0; j < n_; ++j) {
      double c = p_.maximize ? -p_.cost[j] : p_.cost[j];
      scaled_cost_[j] = c * colscale_[j];
    }
    b_.resize(m_);
    bnorm_ = 0;
    for (int i = 0; i < m_; ++i) {
      b_[i] = p_.rhs[i] * rowscale_[i];
      bnorm_ = std::max(bnorm_, std::abs(b_[i]));
    }
  }

  double cost_of(int v) const {
    if (phase1_) return v >= n_ + m_ ? 1.0 : 0.0;
    return v < n_ ? scaled_cost_[v] : 0.0;
  }

  double dot_col(int v, const std::vector<double>& y) const {
    if (v < n_) {
      double s = 0;
      for (int k = colptr_[v]; k < colptr_[v + 1]; ++k) s += val_[k] * y[rowidx_[k]];
      return s;
    }
    if (v < n_ + m_) return y[v - n_];
    return art_sign_[v - n_ - m_] * y[v - n_ - m_];
  }

  void col_into(int v, Eigen::VectorXd& out) const {
    out.setZero(m_);
    if (v < n_) {
      for (int k = colptr_[v]; k < colptr_[v + 1]; ++k) out[rowidx_[k]] += val_[k];
    } else if (v < n_ + m_) {
      out[v - n_] = 1.0;
    } else {
      out[v - n_ - m_] = art_sign_[v - n_ - m_];
    }
  }

  void init_point() {
    int N = n_ + 2 * m_;
    lb_.resize(N);
    ub_.resize(N);
    x_.assign(N, 0.0);
    stat_.assign(N, VStat::AtLower);
    for (int j = 0; j < n_; ++j) {
      double lo = p_.lower[j] / colscale_[j];
      double hi = p_.upper[j] / colscale_[j];
      lb_[j] = p_.lower[j] <= -kInf ? -kInf : lo;
      ub_[j] = p_.upper[j] >= kInf ? kInf : hi;
    }
    for (int i = 0; i < m_; ++i) {
      int s = n_ + i;
      switch (p_.sense[i]) {
        case RowSense::LE: lb_[s] = 0; ub_[s] = kInf; break;
        case RowSense::GE: lb_[s] = -kInf; ub_[s] = 0; break;
        case RowSense::EQ: lb_[s] = 0; ub_[s] = 0; break;
      }
      lb_[n_ + m_ + i] = 0;
      ub_[n_ + m_ + i] = kInf;
    }
    for (int v = 0; v < n_ + m_; ++v) {
      if (finite_lb(lb_[v])) {
        stat_[v] = VStat::AtLower;
        x_[v] = lb_[v];
      } else if (finite_ub(ub_[v])) {
        stat_[v] = VStat::AtUpper;
        x_[v] = ub_[v];
      } else {
        stat_[v] = VStat::Free;
        x_[v] = 0;
      }
    }
    std::vector<double> r(b_);
    for (int j = 0; j < n_; ++j)
      if (x_[j] != 0)
        for (int k = colptr_[j]; k < colptr_[j + 1]; ++k)
          r[rowidx_[k]] -= val_[k] * x_[j];
    for (int i = 0; i < m_; ++i)
      if (x_[n_ + i] != 0) r[i] -= x_[n_ + i];
    art_sign_.resize(m_);
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      art_sign_[i] = r[i] >= 0 ? 1.0 : -1.0;
      int a = n_ + m_ + i;
      x_[a] = std::abs(r[i]);
      stat_[a] = VStat::Basic;
      basis_[i] = a;
    }
    gamma_.assign(n_ + 2 * m_, 1.0);
  }

  void refactor() {
    Eigen::SparseMatrix<double> B(m_, m_);
    std::vector<Eigen::Triplet<double>> trip;
    for (int i = 0; i < m_; ++i) {
      int v = basis_[i];
      if (v < n_) {
        for (int k = colptr_[v]; k < colptr_[v + 1]; ++k)
          trip.push_back({rowidx_[k], i, val_[k]});
      } else if (v < n_ + m_) {
        trip.push_back({v - n_, i, 1.0});
      } else {
        trip.push_back({v - n_ - m_, i, art_sign_[v - n_ - m_]});
      }
    }
    B.setFromTriplets(trip.begin(), trip.end());
    lu_.compute(B);
    if (lu_.info() != Eigen::Success)
      throw NumericalBreakdown("singular basis during refactorization");
    etas_.clear();
    // Recompute basic values from scratch to limit drift.
    Eigen::VectorXd rhs(m_);
    for (int i = 0; i < m_; ++i) rhs[i] = b_[i];
    for (int v = 0; v < n_ + 2 * m_; ++v) {
      if (stat_[v] == VStat::Basic || x_[v] == 0) continue;
      if (v < n_) {
        for (int k = colptr_[v]; k < colptr_[v + 1]; ++k)
          rhs[rowidx_[k]] -= val_[k] * x_[v];
      } else if (v < n_ + m_) {
        rhs[v - n_] -= x_[v];
      } else {
        rhs[v - n_ - m_] -= art_sign_[v - n_ - m_] * x_[v];
      }
    }
    Eigen::VectorXd xb = lu_.solve(rhs);
    for (int i = 0; i < m_; ++i) x_[basis_[i]] = xb[i];
  }

  Eigen::VectorXd ftran(const Eigen::VectorXd& v) const {
    Eigen::VectorXd z = lu_.solve(v);
    for (const auto& e : etas_) {
      double zr = z[e.row] / e.w[e.row];
      z -= zr * e.w;
      z[e.row] = zr;
    }
    return z;
  }

  // y^T B = c^T  =>  y = B^{-T} (E_k^{-T} ... applied first in reverse order)
  Eigen::VectorXd btran(Eigen::VectorXd c) {
    // Apply eta inverses transposed, newest first.
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double acc = 0;
      for (int i = 0; i < m_; ++i)
        if (i != it->row) acc += c[i] * it->w[i];
      c[it->row] = (c[it->row] - acc) / it->w[it->row];
    }
    return lu_.adjoint().solve(c).eval();
  }

  std::vector<double> duals() {
    Eigen::VectorXd c(m_);
    for (int i = 0; i < m_; ++i) c[i] = cost_of(basis_[i]);
    Eigen::VectorXd y = btran(std::move(c));
    return std::vector<double>(y.data(), y.data() + m_);
  }

  // Devex reference-weight update (Forrest-Goldfarb): after q enters on row
  // r with pivot alpha = w[r], every nonbasic weight is raised to the
  // projected steepest-edge estimate through the reference framework.
  void devex_update(int q, int r, const Eigen::VectorXd& w) {
    double alpha = w[r];
    if (alpha == 0) return;
    double ratio2 = std::max(gamma_[q], 1.0) / (alpha * alpha);
    Eigen::VectorXd er = Eigen::VectorXd::Zero(m_);
    er[r] = 1.0;
    Eigen::VectorXd ev = btran(std::move(er));
    std::vector<double> v(ev.data(), ev.data() + m_);
    double gmax = 1.0;
    for (int u = 0; u < n_ + 2 * m_; ++u) {
      if (stat_[u] == VStat::Basic || u == q) continue;
      if (ub_[u] - lb_[u] <= 0) continue;
      double au = dot_col(u, v);
      double cand = au * au * ratio2;
      if (cand > gamma_[u]) gamma_[u] = cand;
      if (gamma_[u] > gmax) gmax = gamma_[u];
    }
    gamma_[basis_[r]] = std::max(ratio2, 1.0);  // the leaving variable
    if (gmax > 1e10) gamma_.assign(gamma_.size(), 1.0);  // reset framework
  }

  double phase_objective() const {
    double o = 0;
    for (int v = 0; v < n_ + 2 * m_; ++v) {
      double c = cost_of(v);
      if (c != 0) o += c * x_[v];
    }
    return o;
  }

  SolveStatus iterate() {
    const double tol = opt_.tol_opt;
    while (true) {
#ifdef H2PLAN_SIMPLEX_TRACE
      if (iters_ % 2000 == 0)
        std::fprintf(stderr, "iter=%lld phase=%d bland=%d obj=%.8g stall=%lld\n",
                     (long long)iters_, phase1_ ? 1 : 2, bland_ ? 1 : 0,
                     phase_objective(), (long long)stall_);
#endif
      if (++iters_ > opt_.max_iters)
        throw NumericalBreakdown("iteration limit exceeded (" +
                                 std::to_string(opt_.max_iters) + ")");
      std::vector<double> y = duals();

      // pricing: Bland takes the first eligible column, Dantzig the most
      // negative reduced cost, devex the largest d^2 / reference weight
      int q = -1;
      int dir = 0;
      double best = 0;
      for (int v = 0; v < n_ + 2 * m_; ++v) {
        if (stat_[v] == VStat::Basic) continue;
        if (ub_[v] - lb_[v] <= 0) continue;  // fixed, cannot move
        double d = cost_of(v) - dot_col(v, y);
        int s = 0;
        if (stat_[v] == VStat::AtLower && d < -tol) s = +1;
        else if (stat_[v] == VStat::AtUpper && d > tol) s = -1;
        else if (stat_[v] == VStat::Free && std::abs(d) > tol) s = d < 0 ? +1 : -1;
        if (s == 0) continue;
        if (bland_) { q = v; dir = s; break; }
        double score = devex_ ? d * d / gamma_[v] : std::abs(d);
        if (q < 0 || score > best) {
          best = score;
          q = v;
          dir = s;
        }
      }
      if (q < 0) return SolveStatus::optimal;

      Eigen::VectorXd aq(m_);
      col_into(q, aq);
      Eigen::VectorXd w = ftran(aq);

      // ratio test
      double tmax = (finite_lb(lb_[q]) && finite_ub(ub_[q])) ? ub_[q] - lb_[q] : kInf;
      double t = tmax;
      int leave_row = -1;
      int leave_to_upper = 0;
      // pivot acceptability is relative to the FTRAN vector's magnitude:
      // an absolute cutoff admits pivots that are pure cancellation noise
      // on columns with large entries, producing a singular basis
      const double piv_tol = 1e-7 * std::max(1.0, w.cwiseAbs().maxCoeff());
      for (int i = 0; i < m_; ++i) {
        double wi = dir * w[i];
        if (std::abs(wi) <= piv_tol) continue;
        int bv = basis_[i];
        double ti;
        int to_upper;
        if (wi > 0) {
          if (!finite_lb(lb_[bv])) continue;
          ti = (x_[bv] - lb_[bv]) / wi;
          to_upper = 0;
        } else {
          if (!finite_ub(ub_[bv])) continue;
          ti = (ub_[bv] - x_[bv]) / (-wi);
          to_upper = 1;
        }
        double cand = std::max(ti, 0.0);
        if (cand < t - 1e-12 || (leave_row < 0 && cand <= t)) {
          t = std::min(t, cand);
          leave_row = i;
          leave_to_upper = to_upper;
        } else if (leave_row >= 0 && cand <= t + 1e-12) {
          // tie: prefer the larger pivot for stability, lowest index under Bland
          bool swap = bland_ ? basis_[i] < basis_[leave_row]
                             : std::abs(w[i]) > std::abs(w[leave_row]);
          if (swap) {
            leave_row = i;
            leave_to_upper = to_upper;
          }
        }
      }

      if (t >= kInf) {
        if (phase1_) throw NumericalBreakdown("phase-1 unbounded (internal error)");
        // primal ray certificate
        ray_.assign(n_, 0.0);
        if (q < n_) ray_[q] = dir;
        for (int i = 0; i < m_; ++i) {
          int bv = basis_[i];
          if (bv < n_) ray_[bv] = -dir * w[i];
        }
        return SolveStatus::unbounded;
      }

      if (leave_row < 0 || (t >= tmax && tmax < kInf)) {
        // bound flip: entering moves to its opposite bound, basis unchanged
        t = tmax;
        for (int i = 0; i < m_; ++i) x_[basis_[i]] -= t * dir * w[i];
        x_[q] = dir > 0 ? ub_[q] : lb_[q];
        stat_[q] = dir > 0 ? VStat::AtUpper : VStat::AtLower;
      } else {
        if (devex_) devex_update(q, leave_row, w);
        for (int i = 0; i < m_; ++i) x_[basis_[i]] -= t * dir * w[i];
        int leaving = basis_[leave_row];
        x_[leaving] = leave_to_upper ? ub_[leaving] : lb_[leaving];
        stat_[leaving] = leave_to_upper ? VStat::AtUpper : VStat::AtLower;
        x_[q] += dir * t;
        stat_[q] = VStat::Basic;
        basis_[leave_row] = q;
        if (std::abs(w[leave_row]) < 1e-10) {
          refactor();
        } else {
          etas_.push_back({leave_row, w});
          if (static_cast<int>(etas_.size()) >= opt_.refactor_interval) refactor();
        }
      }

      // cycling guard: fall back to Bland's rule when the objective stalls
      double obj = phase_objective();
      if (!std::isfinite(last_obj_) ||
          obj < last_obj_ - 1e-12 * (1.0 + std::abs(last_obj_))) {
        last_obj_ = obj;
        stall_ = 0;
        if (opt_.pivot != PivotRule::bland) bland_ = false;
      } else if (++stall_ > 1000) {
        bland_ = true;
      }
    }
  }
};

}  // namespace detail

// Presolve: removes empty rows and empty columns, solves the reduced LP and
// maps the solution (including duals) back onto the original indices.
inline SolveResult solve(const LinearProgram& p, const SolveOptions& opt = {}) {
  p.validate();

  int n = p.num_cols(), m = p.num_rows();
  std::vector<int> row_nnz(m, 0), col_nnz(n, 0);
  for (const auto& t : p.entries)
    if (t.value != 0) {
      ++row_nnz[t.row];
      ++col_nnz[t.col];
    }

  SolveResult out;
  out.primal.assign(n, 0.0);
  out.dual.assign(m, 0.0);
  out.reduced_cost.assign(n, 0.0);

  // Empty rows: either trivially satisfiable (drop, dual 0) or infeasible.
  std::vector<int> row_map(m, -1);
  LinearProgram q;
  q.maximize = p.maximize;
  q.name = p.name;
  for (int i = 0; i < m; ++i) {
    if (row_nnz[i] == 0) {
      bool ok = (p.sense[i] == RowSense::LE && p.rhs[i] >= -opt.tol_feas) ||
                (p.sense[i] == RowSense::GE && p.rhs[i] <= opt.tol_feas) ||
                (p.sense[i] == RowSense::EQ && std::abs(p.rhs[i]) <= opt.tol_feas);
      if (!ok) {
        out.status = SolveStatus::infeasible;
        out.certificate.assign(m, 0.0);
        out.certificate[i] = 1.0;
        return out;
      }
      continue;
    }
    row_map[i] = q.add_row(p.row_names[i], p.sense[i], p.rhs[i]);
  }

  // Empty columns: fixed at the bound favored by their cost.
  std::vector<int> col_map(n, -1);
  double fixed_cost = 0;
  for (int j = 0; j < n; ++j) {
    if (col_nnz[j] == 0) {
      double c = p.maximize ? -p.cost[j] : p.cost[j];
      double v;
      if (c > 0) {
        if (p.lower[j] <= -kInf) {
          out.status = SolveStatus::unbounded;
          out.certificate.assign(n, 0.0);
          out.certificate[j] = -1.0;
          return out;
        }
        v = p.lower[j];
      } else if (c < 0) {
        if (p.upper[j] >= kInf) {
          out.status = SolveStatus::unbounded;
          out.certificate.assign(n, 0.0);
          out.certificate[j] = 1.0;
          return out;
        }
        v = p.upper[j];
      } else {
        v = p.lower[j] > -kInf ? p.lower[j] : (p.upper[j] < kInf ? p.upper[j] : 0.0);
      }
      out.primal[j] = v;
      out.reduced_cost[j] = p.cost[j];
      fixed_cost += p.cost[j] * v;
      continue;
    }
    col_map[j] = q.add_col(p.col_names[j], p.lower[j], p.upper[j], p.cost[j]);
  }
  for (const auto& t : p.entries)
    if (t.value != 0) q.add_entry(row_map[t.row], col_map[t.col], t.value);

  SolveResult r;
  if (q.num_rows() == 0 && q.num_cols() == 0) {
    r.status = SolveStatus::optimal;
    r.objective = 0;
  } else if (q.num_rows() == 0) {
    // bounds-only problem; reuse the empty-column logic per remaining column
    r.status = SolveStatus::optimal;
    r.objective = 0;
    r.primal.resize(q.num_cols());
    r.reduced_cost.resize(q.num_cols());
    for (int j = 0; j < q.num_cols(); ++j) {
      double c = q.maximize ? -q.cost[j] : q.cost[j];
      double v;
      if (c > 0) {
        if (q.lower[j] <= -kInf) { r.status = SolveStatus::unbounded; break; }
        v = q.lower[j];
      } else if (c < 0) {
        if (q.upper[j] >= kInf) { r.status = SolveStatus::unbounded; break; }
        v = q.upper[j];
      } else {
        v = q.lower[j] > -kInf ? q.lower[j] : (q.upper[j] < kInf ? q.upper[j] : 0.0);
      }
      r.primal[j] = v;
      r.reduced_cost[j] = q.cost[j];
      r.objective += q.cost[j] * v;
    }
    if (r.status == SolveStatus::unbounded) {
      out.status = SolveStatus::unbounded;
      return out;
    }
  } else {
    detail::Simplex s(q, opt);
    r = s.run();
  }

  out.status = r.status;
  out.iterations = r.iterations;
  if (r.status == SolveStatus::infeasible) {
    out.certificate.assign(m, 0.0);
    for (int i = 0; i < m; ++i)
      if (row_map[i] >= 0 && row_map[i] < static_cast<int>(r.certificate.size()))
        out.certificate[i] = r.certificate[row_map[i]];
    return out;
  }
  if (r.status == SolveStatus::unbounded) {
    out.certificate.assign(n, 0.0);
    for (int j = 0; j < n; ++j)
      if (col_map[j] >= 0 && col_map[j] < static_cast<int>(r.certificate.size()))
        out.certificate[j] = r.certificate[col_map[j]];
    return out;
  }
  out.objective = r.objective + fixed_cost;
  for (int j = 0; j < n; ++j)
    if (col_map[j] >= 0) {
      out.primal[j] = r.primal[col_map[j]];
      out.reduced_cost[j] = r.reduced_cost[col_map[j]];
    }
  for (int i = 0; i < m; ++i)
    if (row_map[i] >= 0) out.dual[i] = r.dual[row_map[i]];
  out.basis = r.basis;
  return out;
}

}  // namespace h2plan::lp
