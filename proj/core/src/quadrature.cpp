#include "wavetraj/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace wavetraj {

namespace {

// QUADPACK 15-point Kronrod rule with embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double fsum = f(c - dx) + f(c + dx);
    kron += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = kron * h;
  p.error = std::abs((kron - gauss) * h);
  return p;
}

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

double integrate_core(const std::function<double(double)>& f, std::vector<Panel> panels,
                      const QuadratureOptions& opts) {
  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  double total = 0.0, err = 0.0;
  for (const Panel& p : panels) {
    total += p.value;
    err += p.error;
    queue.push(p);
  }
  int used = static_cast<int>(panels.size());
  while (err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (used >= opts.max_intervals || queue.empty())
      fail(ErrorCode::QuadratureFailure, "adaptive quadrature did not converge");
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b))
      fail(ErrorCode::QuadratureFailure, "interval too small to subdivide");
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++used;
  }
  return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, opts);
  return integrate_core(f, {evaluate_panel(f, a, b)}, opts);
}

double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::span<const double> points, const QuadratureOptions& opts) {
  if (a == b) return 0.0;
  if (a > b) return -integrate_split(f, b, a, points, opts);
  std::vector<double> edges;
  edges.push_back(a);
  for (double p : points)
    if (p > edges.back() && p < b) edges.push_back(p);
  edges.push_back(b);
  std::vector<Panel> panels;
  panels.reserve(edges.size() - 1);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    panels.push_back(evaluate_panel(f, edges[i], edges[i + 1]));
  return integrate_core(f, std::move(panels), opts);
}

}  // namespace wavetraj
