#include "conehelly/simplex.hpp"

#include <limits>

#include "conehelly/errors.hpp"

namespace conehelly::lp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Tableau B^{-1} [A | I | b] with one artificial column per row.
class Tableau {
 public:
  Tableau(const Matrix& a, const Vector& b) : m_(a.rows()), n_(a.cols()) {
    rows_.assign(m_, Vector(n_ + m_ + 1));
    sign_.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i) {
      sign_[i] = sgn(b[i]) < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = sign_[i] * a.at(i, j);
      rows_[i][n_ + i] = 1;
      rows_[i][rhs()] = sign_[i] * b[i];
    }
    basic_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basic_[i] = n_ + i;
  }

  std::size_t rhs() const { return n_ + m_; }

  // Runs Bland's rule on cost vector `cost` (length n + m) restricted to
  // columns [0, eligible). Returns false on unboundedness.
  bool optimize(const Vector& cost, std::size_t eligible) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < eligible; ++j) {
        if (is_basic(j)) continue;
        if (sgn(reduced_cost(cost, j)) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;

      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rows_[i][rhs()] / rows_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basic_[i] < basic_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  Rational reduced_cost(const Vector& cost, std::size_t j) const {
    Rational r = cost[j];
    for (std::size_t i = 0; i < m_; ++i)
      if (sgn(cost[basic_[i]]) != 0 && sgn(rows_[i][j]) != 0) r -= cost[basic_[i]] * rows_[i][j];
    return r;
  }

  Rational objective(const Vector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < m_; ++i) v += cost[basic_[i]] * rows_[i][rhs()];
    return v;
  }

  // y = c_B^T B^{-1}, mapped back through the row sign flips.
  Vector dual(const Vector& cost) const {
    Vector y(m_);
    for (std::size_t k = 0; k < m_; ++k) {
      Rational s = 0;
      for (std::size_t i = 0; i < m_; ++i) s += cost[basic_[i]] * rows_[i][n_ + k];
      y[k] = sign_[k] * s;
    }
    return y;
  }

  // Pivots artificial variables out of the basis where a structural column
  // can replace them; rows where none can are redundant and stay at zero.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!is_basic(j) && sgn(rows_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Vector primal() const {
    Vector x = zero_vector(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basic_[i] < n_) x[basic_[i]] = rows_[i][rhs()];
    return x;
  }

 private:
  bool is_basic(std::size_t j) const {
    for (std::size_t b : basic_)
      if (b == j) return true;
    return false;
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) x *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        if (sgn(rows_[r][j]) != 0) rows_[i][j] -= f * rows_[r][j];
    }
    basic_[r] = c;
  }

  std::size_t m_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<int> sign_;
  std::vector<std::size_t> basic_;
};

}  // namespace

Result solve_standard_form(const Matrix& a, const Vector& b, const Vector& c) {
  if (b.size() != a.rows()) throw InvalidInput("LP: right-hand side length mismatch");
  if (!c.empty() && c.size() != a.cols()) throw InvalidInput("LP: cost length mismatch");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  Tableau t(a, b);
  Vector phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  if (!t.optimize(phase1, n + m)) throw InternalError("LP: phase one reported unbounded");

  Result res;
  if (sgn(t.objective(phase1)) > 0) {
    res.status = Status::infeasible;
    res.farkas = t.dual(phase1);
    return res;
  }

  t.drive_out_artificials();
  Vector phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < c.size(); ++j) phase2[j] = c[j];
  if (!t.optimize(phase2, n)) {
    res.status = Status::unbounded;
    return res;
  }
  res.status = Status::optimal;
  res.x = t.primal();
  res.objective = t.objective(phase2);
  return res;
}

}  // namespace conehelly::lp
