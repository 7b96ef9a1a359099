// Copyright (c) 2026 The fracwave authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace fracwave {

// sin(pi*y), cos(pi*y) with the argument reduction done on y itself, so the
// results stay accurate for large |y| and are exactly 0 at integers.
double sin_pi(double y);
double cos_pi(double y);

// 1/Gamma(y) for real y; exactly 0 at the poles y = 0, -1, -2, ...
// May overflow to +-inf for very negative non-integer y; use log_rgamma there.
double rgamma(double y);

// log|1/Gamma(y)| together with the sign of 1/Gamma(y) (sign 0 at poles).
struct SignedLog {
  double log_abs;
  int sign;
};
SignedLog log_rgamma(double y);

// Gamma(y); caller must avoid the poles.
double gamma_fn(double y);

// Compensated (Kahan) accumulator; T is double or std::complex<double>.
template <typename T>
struct KahanSum {
  T sum{};
  T comp{};
  void add(T term) {
    T t = term - comp;
    T next = sum + t;
    comp = (next - sum) - t;
    sum = next;
  }
  T value() const { return sum; }
};

}  // namespace fracwave
