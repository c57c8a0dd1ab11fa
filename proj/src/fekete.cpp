#include "histo/fekete.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace histo {

namespace {

// P_n(x) and P'_n(x) by the joint recurrence.
std::pair<double, double> legendre_and_deriv(std::size_t n, double x) {
  double p_prev = 1.0, p_cur = x;
  double d_prev = 0.0, d_cur = 1.0;
  if (n == 0) return {1.0, 0.0};
  for (std::size_t k = 1; k < n; ++k) {
    const auto kd = static_cast<double>(k);
    const double p_next = ((2.0 * kd + 1.0) * x * p_cur - kd * p_prev) / (kd + 1.0);
    const double d_next = d_prev + (2.0 * kd + 1.0) * p_cur;
    p_prev = p_cur;
    p_cur = p_next;
    d_prev = d_cur;
    d_cur = d_next;
  }
  return {p_cur, d_cur};
}

}  // namespace

std::vector<double> lgl_nodes(std::size_t r) {
  if (r < 2) throw std::invalid_argument("LGL nodes need r >= 2");
  const std::size_t n = r - 1;
  const auto nd = static_cast<double>(n);
  std::vector<double> x(r);
  x.front() = -1.0;
  x.back() = 1.0;
  for (std::size_t i = 1; i + 1 < r; ++i) {
    double xi = std::cos(std::numbers::pi * static_cast<double>(r - 1 - i) / nd);
    bool done = false;
    for (int it = 0; it < 200 && !done; ++it) {
      const auto [p, dp] = legendre_and_deriv(n, xi);
      // Legendre ODE: (1 - x^2) P'' = 2 x P' - n (n + 1) P.
      const double ddp = (2.0 * xi * dp - nd * (nd + 1.0) * p) / (1.0 - xi * xi);
      const double step = dp / ddp;
      xi -= step;
      done = std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(xi));
    }
    if (!done) throw FeketeError("Newton iteration for LGL node " + std::to_string(i) + " did not converge");
    x[i] = xi;
  }
  for (std::size_t i = 0; i < r / 2; ++i) {
    const double s = 0.5 * (x[r - 1 - i] - x[i]);
    x[i] = -s;
    x[r - 1 - i] = s;
  }
  if (r % 2 == 1) x[r / 2] = 0.0;
  for (std::size_t i = 1; i < r; ++i) {
    if (!(x[i] > x[i - 1])) throw FeketeError("LGL nodes are not separated");
  }
  return x;
}

bool is_symmetric(const SupportSet& set, double tol) {
  const std::size_t r = set.size();
  for (std::size_t i = 0; i < r; ++i) {
    const Support& a = set[i];
    const Support& b = set[r - 1 - i];
    if (std::abs(a.alpha + b.beta) > tol || std::abs(a.beta + b.alpha) > tol) return false;
  }
  return true;
}

FeketeResult fekete_nodes(std::size_t r) {
  FeketeResult res;
  res.points = lgl_nodes(r);
  res.set = node_set(res.points);
  res.log_abs_det = product_formula_det(res.points, ProductKind::NodalProduct).log_abs_det;
  res.det_basis = BasisKind::Monomial;
  res.mode = Mode::Nodal;
  res.method = FeketeMethod::ClosedForm;
  res.symmetric = is_symmetric(res.set);
  if (r <= kMaxMonomialOrder) {
    const SignLogDet d = sign_log_det(build_vandermonde(BasisKind::Monomial, res.set, Mode::Nodal));
    res.verified = d.sign != 0 && std::abs(std::expm1(d.log_abs_det - res.log_abs_det)) <= 1e-9;
  }
  return res;
}

FeketeResult fekete_concat_nonnormalized(std::size_t r) {
  if (r < 1) throw std::invalid_argument("need r >= 1 segments");
  FeketeResult res;
  res.points = lgl_nodes(r + 1);
  res.set = concat_from_nodes(res.points);
  res.log_abs_det = product_formula_det(res.points, ProductKind::ConcatHat).log_abs_det;
  res.det_basis = BasisKind::Monomial;
  res.mode = Mode::Segmental;
  res.method = FeketeMethod::ClosedForm;
  res.symmetric = is_symmetric(res.set);
  if (r <= kMaxMonomialOrder) {
    const SignLogDet d = sign_log_det(build_vandermonde(BasisKind::Monomial, res.set, Mode::Segmental));
    res.verified = d.sign != 0 && std::abs(std::expm1(d.log_abs_det - res.log_abs_det)) <= 1e-9;
  }
  return res;
}

double concat_normalized_objective(std::span<const double> xs, std::span<double> gradient) {
  const std::size_t n = xs.size();
  const bool with_grad = !gradient.empty();
  if (with_grad) std::fill(gradient.begin(), gradient.end(), 0.0);
  double value = -std::lgamma(static_cast<double>(n));  // -ln r!, r = n - 1
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      const double d = xs[j] - xs[i];
      if (!(d > 0.0)) return -std::numeric_limits<double>::infinity();
      value += std::log(d);
      if (with_grad) {
        gradient[j] += 1.0 / d;
        gradient[i] -= 1.0 / d;
      }
    }
  }
  return value;
}

namespace {

// Free breakpoints first..last sit between the fixed values -1 (before) and
// +1 (after); the m + 1 gaps around them are 2 * softmax(u, 0).
struct GapModel {
  std::size_t n_points = 0;
  std::size_t first = 0;
  std::size_t free = 0;

  [[nodiscard]] std::size_t dim() const { return free; }

  [[nodiscard]] std::vector<double> points(const Eigen::VectorXd& u) const {
    std::vector<double> xs(n_points, -1.0);
    const std::vector<double> g = gaps(u);
    double acc = -1.0;
    for (std::size_t i = 0; i < free; ++i) {
      acc += g[i];
      xs[first + i] = std::min(acc, 1.0);
    }
    for (std::size_t k = first + free; k < n_points; ++k) xs[k] = 1.0;
    return xs;
  }

  [[nodiscard]] std::vector<double> gaps(const Eigen::VectorXd& u) const {
    std::vector<double> g(free + 1);
    double top = 0.0;
    for (Eigen::Index k = 0; k < u.size(); ++k) top = std::max(top, u(k));
    double sum = std::exp(-top);
    for (std::size_t k = 0; k < free; ++k) {
      g[k] = std::exp(u(static_cast<Eigen::Index>(k)) - top);
      sum += g[k];
    }
    g[free] = std::exp(-top);
    for (double& v : g) v = 2.0 * v / sum;
    return g;
  }

  // Value and gradient with respect to u.
  double evaluate(const Eigen::VectorXd& u, Eigen::VectorXd& grad) const {
    const std::vector<double> xs = points(u);
    std::vector<double> gx(n_points);
    const double value = concat_normalized_objective(xs, gx);
    grad.setZero(static_cast<Eigen::Index>(free));
    if (!std::isfinite(value)) return value;
    // dL/dg_l = sum of dL/dx over the free points to the right of gap l.
    std::vector<double> h(free + 1, 0.0);
    for (std::size_t l = free; l-- > 0;) h[l] = h[l + 1] + gx[first + l];
    const std::vector<double> g = gaps(u);
    double mean = 0.0;
    for (std::size_t l = 0; l <= free; ++l) mean += 0.5 * g[l] * h[l];
    for (std::size_t k = 0; k < free; ++k) grad(static_cast<Eigen::Index>(k)) = g[k] * (h[k] - mean);
    return value;
  }
};

struct StartResult {
  std::vector<double> xs;
  double value = -std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
  bool converged = false;
};

// BFGS ascent on the log-gap parametrization with Armijo backtracking.
StartResult bfgs_ascent(const GapModel& model, Eigen::VectorXd u, double tol, std::size_t max_iter) {
  const Eigen::Index d = static_cast<Eigen::Index>(model.dim());
  StartResult out;
  Eigen::VectorXd grad(d);
  double value = model.evaluate(u, grad);
  Eigen::MatrixXd inv_hess = Eigen::MatrixXd::Identity(d, d);
  std::size_t it = 0;
  for (; it < max_iter; ++it) {
    if (grad.lpNorm<Eigen::Infinity>() <= tol) {
      out.converged = true;
      break;
    }
    Eigen::VectorXd dir = inv_hess * grad;
    if (dir.dot(grad) <= 0.0) {
      inv_hess.setIdentity();
      dir = grad;
    }
    const double max_step = dir.lpNorm<Eigen::Infinity>();
    double step = max_step > 4.0 ? 4.0 / max_step : 1.0;
    Eigen::VectorXd u_new(d), grad_new(d);
    double value_new = value;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      u_new = u + step * dir;
      value_new = model.evaluate(u_new, grad_new);
      if (std::isfinite(value_new) && value_new >= value + 1e-4 * step * dir.dot(grad)) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      out.converged = grad.lpNorm<Eigen::Infinity>() <= std::sqrt(tol);
      break;
    }
    const Eigen::VectorXd s = u_new - u;
    // Ascent on L is descent on -L: y = grad(-L)_new - grad(-L)_old.
    const Eigen::VectorXd y = grad - grad_new;
    const double sy = s.dot(y);
    if (sy > 1e-300) {
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);
      inv_hess = (eye - rho * s * y.transpose()) * inv_hess * (eye - rho * y * s.transpose()) +
                 rho * s * s.transpose();
    }
    u = u_new;
    grad = grad_new;
    value = value_new;
  }
  out.xs = model.points(u);
  out.value = value;
  out.iterations = it;
  return out;
}

// Newton polish on free breakpoints [first, first + free) keeping the ordering.
std::size_t newton_polish(std::vector<double>& xs, std::size_t first, std::size_t free, int max_iter) {
  const std::size_t n = xs.size();
  const Eigen::Index m = static_cast<Eigen::Index>(free);
  std::size_t steps = 0;
  for (int it = 0; it < max_iter && free > 0; ++it) {
    std::vector<double> gx(n);
    const double value = concat_normalized_objective(xs, gx);
    Eigen::VectorXd g(m);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index a = 0; a < m; ++a) {
      const std::size_t k = first + static_cast<std::size_t>(a);
      g(a) = gx[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (j + 1 == k || j == k || j == k + 1) continue;
        const double inv2 = 1.0 / ((xs[k] - xs[j]) * (xs[k] - xs[j]));
        h(a, a) -= inv2;
        if (j >= first && j < first + free) h(a, static_cast<Eigen::Index>(j - first)) += inv2;
      }
    }
    if (g.lpNorm<Eigen::Infinity>() < 1e-13) break;
    const Eigen::VectorXd delta = h.ldlt().solve(-g);
    if (!delta.allFinite()) break;
    double step = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      std::vector<double> trial = xs;
      for (Eigen::Index a = 0; a < m; ++a) trial[first + static_cast<std::size_t>(a)] += step * delta(a);
      const bool ordered = std::is_sorted(trial.begin(), trial.end()) && trial.front() >= -1.0 && trial.back() <= 1.0;
      if (ordered && concat_normalized_objective(trial, {}) >= value - 1e-14 * std::abs(value)) {
        xs = std::move(trial);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    ++steps;
    if (!accepted) break;
  }
  return steps;
}

double stationarity(const std::vector<double>& xs, std::size_t first, std::size_t free) {
  std::vector<double> gx(xs.size());
  (void)concat_normalized_objective(xs, gx);
  double worst = 0.0;
  for (std::size_t k = first; k < first + free; ++k) {
    // Collapsed points sit on the boundary of the feasible set; only interior
    // breakpoints must be stationary.
    const bool at_bound = xs[k] <= -1.0 + 1e-9 || xs[k] >= 1.0 - 1e-9;
    if (!at_bound) worst = std::max(worst, std::abs(gx[k]));
  }
  return worst;
}

std::vector<double> mirrored(const std::vector<double>& xs) {
  std::vector<double> m(xs.rbegin(), xs.rend());
  for (double& v : m) v = -v;
  return m;
}

FeketeResult finish_normalized(std::vector<double> xs, FeketeMethod method) {
  FeketeResult res;
  res.set = concat_from_nodes(xs);
  res.points = std::move(xs);
  res.log_abs_det = concat_normalized_objective(res.points, {});
  res.det_basis = BasisKind::Monomial;
  res.mode = Mode::Normalized;
  res.method = method;
  res.symmetric = is_symmetric(res.set);
  if (res.points.size() - 1 <= kMaxMonomialOrder) {
    const SignLogDet d = sign_log_det(build_vandermonde(BasisKind::Monomial, res.set, Mode::Normalized));
    res.verified = d.sign != 0 && std::abs(std::expm1(d.log_abs_det - res.log_abs_det)) <= 1e-9;
  }
  return res;
}

}  // namespace

FeketeResult fekete_concat_normalized(std::size_t r, const NormalizedOptions& opts) {
  if (r < 1) throw std::invalid_argument("need r >= 1 segments");
  if (r <= 2) {
    // The objective is constant in the interior breakpoint; return the
    // endpoints of the interval and the midpoint.
    std::vector<double> xs = r == 1 ? std::vector<double>{-1.0, 1.0} : std::vector<double>{-1.0, 0.0, 1.0};
    FeketeResult res = finish_normalized(std::move(xs), FeketeMethod::ClosedForm);
    res.diagnostics.non_unique = true;
    return res;
  }

  GapModel model;
  model.n_points = r + 1;
  if (opts.pin_endpoints) {
    model.first = 2;
    model.free = r - 3;
  } else {
    model.first = 0;
    model.free = r + 1;
  }
  if (model.free == 0) return finish_normalized({-1.0, -1.0, 1.0, 1.0}, FeketeMethod::ClosedForm);

  const Eigen::Index d = static_cast<Eigen::Index>(model.dim());
  std::size_t starts = std::max<std::size_t>(1, opts.starts);
  for (int escalation = 0; escalation < 3; ++escalation, starts *= 2) {
    // escalation 0, 1, 2 -> starts, 2x, 4x
    StartResult best;
    OptimizerDiagnostics diag;
    diag.starts = starts;
    double worst_converged = std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t s = 0; s < starts; ++s) {
      Eigen::VectorXd u = Eigen::VectorXd::Zero(d);
      if (s > 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(opts.seed & 0xffffffffu),
                          static_cast<std::uint32_t>(opts.seed >> 32), static_cast<std::uint32_t>(s)};
        std::mt19937_64 rng(seq);
        for (Eigen::Index k = 0; k < d; ++k) {
          const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
          u(k) = (2.0 * unit - 1.0) * 0.5;
        }
      }
      StartResult run = bfgs_ascent(model, u, opts.tol, 200);
      run.iterations += newton_polish(run.xs, model.first, model.free, 100);
      run.value = concat_normalized_objective(run.xs, {});
      const double stat = stationarity(run.xs, model.first, model.free);
      run.converged = run.converged || stat <= opts.stationarity_tol;
      diag.iterations += run.iterations;
      if (!run.converged) continue;
      any = true;
      worst_converged = std::min(worst_converged, run.value);
      const bool better = run.value > best.value + 1e-12;
      const bool tie = std::abs(run.value - best.value) <= 1e-12 && run.xs < best.xs;
      if (!best.converged || better || tie) best = std::move(run);
    }
    if (!any) continue;

    // Symmetric solutions: average with the mirror image when that does not hurt.
    std::vector<double> sym = best.xs;
    const std::vector<double> mir = mirrored(best.xs);
    for (std::size_t k = 0; k < sym.size(); ++k) sym[k] = 0.5 * (sym[k] + mir[k]);
    if (std::is_sorted(sym.begin(), sym.end()) &&
        concat_normalized_objective(sym, {}) >= best.value - 1e-13 * std::abs(best.value)) {
      best.xs = std::move(sym);
    }
    if (opts.pin_endpoints) {
      diag.iterations += newton_polish(best.xs, model.first, model.free, 20);
    }

    diag.best_gap = concat_normalized_objective(best.xs, {}) - worst_converged;
    diag.stationarity = stationarity(best.xs, model.first, model.free);
    diag.converged = diag.stationarity <= opts.stationarity_tol;
    if (!diag.converged) continue;
    FeketeResult res = finish_normalized(std::move(best.xs), FeketeMethod::Optimized);
    res.diagnostics = diag;
    return res;
  }
  throw FeketeError("normalized concatenated Fekete optimization did not converge for r = " + std::to_string(r));
}

double log_arc_diagonal(std::size_t r, double rho) {
  double sum = 0.0;
  const double sr = std::sin(rho);
  for (std::size_t j = 1; j <= r; ++j) {
    const auto jd = static_cast<double>(j);
    sum += std::log(std::sin(jd * rho) / (jd * sr));
  }
  return sum;
}

FeketeResult fekete_arc(std::size_t r, double rho) {
  if (r < 2) throw std::invalid_argument("arc Fekete segments need r >= 2");
  if (!(rho > 0.0 && rho < std::numbers::pi / static_cast<double>(r))) {
    throw std::invalid_argument("arc radius must lie in (0, pi/r)");
  }
  const std::vector<double> lgl = lgl_nodes(r);
  ArcFamily fam;
  fam.rho = rho;
  fam.taus.resize(r);
  const double c = std::cos(rho);
  for (std::size_t i = 0; i < r; ++i) fam.taus[i] = std::acos(lgl[r - 1 - i] * c);
  // acos loses accuracy next to +-1; the extreme arcs touch the ends of the interval exactly.
  fam.taus.front() = rho;
  fam.taus.back() = std::numbers::pi - rho;

  FeketeResult res;
  res.set = arc_to_supports(fam);
  res.points.resize(r);
  for (std::size_t i = 0; i < r; ++i) res.points[i] = lgl[i] * c;
  res.det_basis = BasisKind::ChebyshevU;
  res.mode = Mode::Normalized;
  res.method = FeketeMethod::ClosedForm;
  res.log_abs_det = sign_log_det(build_vandermonde(BasisKind::ChebyshevU, res.set, Mode::Normalized)).log_abs_det;
  res.symmetric = is_symmetric(res.set);

  // |det V(S)| = |det V(T)| * prod mu_j, with the segment matrix from antiderivatives.
  const SignLogDet direct = sign_log_det(functional_matrix(BasisKind::ChebyshevU, res.set, Mode::Normalized));
  const SignLogDet nodal = sign_log_det(build_vandermonde(BasisKind::ChebyshevU, node_set(res.points), Mode::Nodal));
  const double factored = nodal.log_abs_det + log_arc_diagonal(r, rho);
  res.verified = direct.sign != 0 && nodal.sign != 0 && std::abs(std::expm1(direct.log_abs_det - factored)) <= 1e-9;
  return res;
}

std::vector<RhoSweepRow> det_rho_sweep(std::size_t r, std::span<const double> rho_grid) {
  std::vector<RhoSweepRow> rows;
  rows.reserve(rho_grid.size());
  for (double rho : rho_grid) rows.push_back({rho, fekete_arc(r, rho).log_abs_det});
  return rows;
}

namespace {

double log_vandermonde(std::span<const double> xs) {
  return product_formula_det(xs, ProductKind::NodalProduct).log_abs_det;
}

// Symmetric node set from positive parameters t (ascending).
std::vector<double> symmetric_nodes(std::size_t r, std::span<const double> t) {
  std::vector<double> xs;
  xs.push_back(-1.0);
  for (auto it = t.rbegin(); it != t.rend(); ++it) xs.push_back(-*it);
  if (r % 2 == 1) xs.push_back(0.0);
  for (double v : t) xs.push_back(v);
  xs.push_back(1.0);
  return xs;
}

double symmetric_objective(std::size_t r, std::span<const double> t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0 && t[i] < 1.0)) return -std::numeric_limits<double>::infinity();
    if (i > 0 && !(t[i] > t[i - 1])) return -std::numeric_limits<double>::infinity();
  }
  return log_vandermonde(symmetric_nodes(r, t));
}

}  // namespace

std::vector<double> fekete_nodes_bruteforce(std::size_t r, double grid_step) {
  if (r < 2 || r > 6) throw std::invalid_argument("brute-force Fekete search supports 2 <= r <= 6");
  const std::size_t params = (r - 2) / 2;
  std::vector<double> best_t(params);
  if (params == 0) return symmetric_nodes(r, best_t);

  const auto steps = static_cast<std::size_t>(std::floor(1.0 / grid_step));
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> t(params);
  if (params == 1) {
    for (std::size_t a = 1; a < steps; ++a) {
      t[0] = static_cast<double>(a) * grid_step;
      const double v = symmetric_objective(r, t);
      if (v > best) {
        best = v;
        best_t = t;
      }
    }
  } else {
    for (std::size_t a = 1; a < steps; ++a) {
      for (std::size_t b = a + 1; b < steps; ++b) {
        t[0] = static_cast<double>(a) * grid_step;
        t[1] = static_cast<double>(b) * grid_step;
        const double v = symmetric_objective(r, t);
        if (v > best) {
          best = v;
          best_t = t;
        }
      }
    }
  }

  // Coordinate-wise golden-section polish inside one grid cell of the optimum.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double width = grid_step;
  for (int sweep = 0; sweep < 60; ++sweep) {
    const std::vector<double> before = best_t;
    for (std::size_t p = 0; p < params; ++p) {
      double lo = best_t[p] - width, hi = best_t[p] + width;
      auto g = [&](double v) {
        std::vector<double> trial = best_t;
        trial[p] = v;
        return symmetric_objective(r, trial);
      };
      double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
      double gc = g(c), gd = g(d);
      while (hi - lo > 1e-14) {
        if (gc > gd) {
          hi = d; d = c; gd = gc; c = hi - inv_phi * (hi - lo); gc = g(c);
        } else {
          lo = c; c = d; gc = gd; d = lo + inv_phi * (hi - lo); gd = g(d);
        }
      }
      const double cand = 0.5 * (lo + hi);
      if (g(cand) >= g(best_t[p])) best_t[p] = cand;
    }
    double moved = 0.0;
    for (std::size_t p = 0; p < params; ++p) moved = std::max(moved, std::abs(best_t[p] - before[p]));
    if (moved < 1e-13) break;
    width = std::max(4.0 * moved, 1e-6);
  }
  return symmetric_nodes(r, best_t);
}

}  // namespace histo
