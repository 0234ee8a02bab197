#pragma once

// Dense two-phase simplex over exact rationals with Bland's rule.

#include "conehelly/ratlin.hpp"

namespace conehelly::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  /// Primal point when optimal.
  Vector x;
  Rational objective;
  /// When infeasible: y with A^T y <= 0 and b . y > 0.
  Vector farkas;
};

/// minimize c.x subject to A x = b, x >= 0. An empty c means the zero
/// objective (pure feasibility).
Result solve_standard_form(const Matrix& a, const Vector& b, const Vector& c = {});

}  // namespace conehelly::lp
