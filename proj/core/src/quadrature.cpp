// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#include "fracwave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fracwave {

namespace {

// 15-point Kronrod nodes on [-1,1] (positive half) and weights, with the
// embedded 7-point Gauss weights (QUADPACK dqk15 values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  cplx value;
  double err;
  double resabs;
};

PanelEstimate gk15(const std::function<cplx(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  cplx fv[15];
  // index layout: 0..6 -> +xgk[0..6] side, 7 -> centre, 8..14 -> -xgk side
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c + h * kXgk[i]);
    fv[8 + i] = f(c - h * kXgk[i]);
  }
  fv[7] = f(c);

  cplx resk = kWgk[7] * fv[7];
  cplx resg = kWg[3] * fv[7];
  double resabs = kWgk[7] * std::abs(fv[7]);
  for (int i = 0; i < 7; ++i) {
    cplx s = fv[i] + fv[8 + i];
    resk += kWgk[i] * s;
    resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[8 + i]));
    if (i % 2 == 1) resg += kWg[i / 2] * s;  // i = 1,3,5 are the Gauss nodes
  }
  cplx reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fv[7] - reskh);
  for (int i = 0; i < 7; ++i) {
    resasc += kWgk[i] * (std::abs(fv[i] - reskh) + std::abs(fv[8 + i] - reskh));
  }
  resasc *= std::fabs(h);
  resabs *= std::fabs(h);

  double err = std::abs(resk - resg) * std::fabs(h);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(err, 50.0 * eps * resabs);
  }
  return {resk * h, err, resabs};
}

struct Interval {
  double a, b;
  cplx value;
  double err;
};

}  // namespace

QuadResult integrate(const std::function<cplx(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_intervals) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::vector<Interval> segs;
  PanelEstimate first = gk15(f, a, b);
  segs.push_back({a, b, first.value, first.err});
  out.evaluations = 15;

  auto totals = [&segs]() {
    cplx v{};
    double e = 0.0;
    for (const auto& s : segs) {
      v += s.value;
      e += s.err;
    }
    return std::pair<cplx, double>(v, e);
  };

  for (;;) {
    auto [val, err] = totals();
    double goal = std::max(abs_tol, rel_tol * std::abs(val));
    if (err <= goal) {
      out.value = val;
      out.abs_err = err;
      out.converged = true;
      return out;
    }
    if (static_cast<int>(segs.size()) >= max_intervals) {
      out.value = val;
      out.abs_err = err;
      out.converged = false;
      return out;
    }
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i) {
      if (segs[i].err > segs[worst].err) worst = i;
    }
    Interval seg = segs[worst];
    double mid = 0.5 * (seg.a + seg.b);
    if (mid <= seg.a || mid >= seg.b) {
      // interval cannot be split further in double precision
      auto [v2, e2] = totals();
      out.value = v2;
      out.abs_err = e2;
      out.converged = e2 <= std::max(abs_tol, rel_tol * std::abs(v2)) * 4;
      return out;
    }
    PanelEstimate left = gk15(f, seg.a, mid);
    PanelEstimate right = gk15(f, mid, seg.b);
    out.evaluations += 30;
    segs[worst] = {seg.a, mid, left.value, left.err};
    segs.push_back({mid, seg.b, right.value, right.err});
  }
}

QuadResult integrate_to_inf(const std::function<cplx(double)>& f, double a,
                            double first_len, double abs_tol, int max_panels) {
  QuadResult out;
  if (first_len <= 0.0) throw std::invalid_argument("first_len must be > 0");
  double lo = a;
  double len = first_len;
  int small_in_a_row = 0;
  for (int k = 0; k < max_panels; ++k) {
    QuadResult panel = integrate(f, lo, lo + len, abs_tol / 8.0, 1e-13, 800);
    out.value += panel.value;
    out.abs_err += panel.abs_err;
    out.evaluations += panel.evaluations;
    double mag = std::abs(panel.value);
    if (mag < abs_tol / 4.0) {
      if (++small_in_a_row >= 2) {
        out.abs_err += mag;  // crude bound on the remaining tail
        out.converged = true;
        return out;
      }
    } else {
      small_in_a_row = 0;
    }
    lo += len;
    len *= 2.0;
  }
  out.converged = false;
  return out;
}

EulerSumResult euler_sum(const std::function<cplx(int)>& term, double abs_tol,
                         int min_terms, int max_terms) {
  EulerSumResult out;
  std::vector<cplx> wksp;
  wksp.reserve(64);
  cplx sum{};
  int nterm = 0;
  double prev_inc = std::numeric_limits<double>::infinity();
  int small_in_a_row = 0;
  for (int j = 0; j < max_terms; ++j) {
    cplx t = term(j);
    double inc;
    if (j == 0) {
      nterm = 1;
      wksp.assign(1, t);
      sum = 0.5 * t;
      inc = std::abs(sum);
    } else {
      cplx tmp = wksp[0];
      wksp[0] = t;
      for (int k = 0; k < nterm - 1; ++k) {
        cplx dum = wksp[k + 1];
        wksp[k + 1] = 0.5 * (wksp[k] + tmp);
        tmp = dum;
      }
      cplx next = 0.5 * (wksp[nterm - 1] + tmp);
      if (static_cast<int>(wksp.size()) < nterm + 1) wksp.push_back(next);
      else wksp[nterm] = next;
      if (std::abs(next) <= std::abs(wksp[nterm - 1])) {
        ++nterm;
        sum += 0.5 * next;
        inc = 0.5 * std::abs(next);
      } else {
        sum += next;
        inc = std::abs(next);
      }
    }
    out.terms_used = j + 1;
    if (j + 1 >= min_terms && inc <= abs_tol / 2 && prev_inc <= abs_tol / 2) {
      out.value = sum;
      out.abs_err = 2.0 * (inc + prev_inc) + abs_tol / 4;
      out.converged = true;
      return out;
    }
    prev_inc = inc;
    (void)small_in_a_row;
  }
  out.value = sum;
  out.abs_err = 4.0 * prev_inc;
  out.converged = false;
  return out;
}

QuadResult integrate_oscillatory(const std::function<cplx(double)>& f, double a,
                                 double half_period, double abs_tol,
                                 int max_half_periods) {
  if (half_period <= 0.0) throw std::invalid_argument("half_period must be > 0");
  QuadResult out;
  double quad_err = 0.0;
  auto panel = [&](int k) -> cplx {
    double lo = a + k * half_period;
    QuadResult p = integrate(f, lo, lo + half_period, abs_tol / 16.0, 1e-13, 400);
    quad_err += p.abs_err;
    out.evaluations += p.evaluations;
    return p.value;
  };
  EulerSumResult s = euler_sum(panel, abs_tol / 2.0, 8, max_half_periods);
  out.value = s.value;
  out.abs_err = s.abs_err + quad_err;
  out.converged = s.converged;
  return out;
}

std::vector<double> graded_breakpoints(double a, double b, int levels,
                                       double ratio) {
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("need 0<ratio<1");
  std::vector<double> pts;
  pts.reserve(levels + 1);
  pts.push_back(a);
  double gap = b - a;
  // offsets from b: gap*ratio^k
  for (int k = 1; k < levels; ++k) {
    pts.push_back(b - gap * std::pow(ratio, k));
  }
  pts.push_back(b);
  return pts;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line needs >= 2 points");
  }
  double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("degenerate abscissae");
  LineFit out;
  out.slope = (n * sxy - sx * sy) / denom;
  out.intercept = (sy - out.slope * sx) / n;
  return out;
}

int worker_count(int n) {
  if (n <= 1) return 1;
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("FRACWAVE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) hw = static_cast<int>(std::min<long>(v, 256));
  }
  return std::max(1, std::min(hw, n));
}

void parallel_for(int n, const std::function<void(int)>& body) {
  int w = worker_count(n);
  if (w <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(w);
  std::exception_ptr first_error;
  std::mutex err_mutex;
  for (int t = 0; t < w; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (int i = t; i < n; i += w) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fracwave
