#include "fixcomb/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace fixcomb::lp {
namespace {

// Dense simplex tableau. Columns: structural vars, then one slack/surplus per
// LE row, then artificials. The objective is kept as value + sum d_j x_j with
// d zero on basic columns.
struct Tableau {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  std::vector<int> basis;        // basis[i] = column basic in row i
  std::vector<Rat> d;            // reduced objective coefficients
  Rat value = 0;
  std::vector<bool> allowed;     // columns eligible to enter

  void pivot(int r, int c) {
    const Rat piv = a[r][c];
    assert(piv != 0);
    for (int j = 0; j < cols; ++j) a[r][j] /= piv;
    b[r] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    if (d[c] != 0) {
      const Rat f = d[c];
      for (int j = 0; j < cols; ++j) d[j] -= f * a[r][j];
      value += f * b[r];
    }
    basis[r] = c;
  }

  // Recompute the reduced objective from raw coefficients c (zero-extended).
  void price(const std::vector<Rat>& c) {
    d.assign(cols, Rat(0));
    for (size_t j = 0; j < c.size(); ++j) d[j] = c[j];
    value = 0;
    for (int i = 0; i < rows; ++i) {
      const int j0 = basis[i];
      if (d[j0] == 0) continue;
      const Rat f = d[j0];
      for (int j = 0; j < cols; ++j) d[j] -= f * a[i][j];
      value += f * b[i];
    }
  }

  // Bland's rule; returns false on unbounded.
  bool run() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols; ++j) {
        if (allowed[j] && d[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < rows; ++i) {
        if (a[i][enter] <= 0) continue;
        const Rat ratio = b[i] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Result maximize(int nvars, const std::vector<Row>& rows, const std::vector<Rat>& c) {
  for (const Row& r : rows) {
    if (static_cast<int>(r.a.size()) != nvars) {
      throw std::invalid_argument("lp row width mismatch");
    }
  }
  const int m = static_cast<int>(rows.size());

  // Normalize to b >= 0; a flipped LE becomes a GE, which takes a surplus
  // column and an artificial. EQ rows take an artificial directly.
  enum class Kind { SLACK, SURPLUS_ART, ART };
  std::vector<Kind> kind(m);
  std::vector<std::vector<Rat>> A(m, std::vector<Rat>(nvars));
  std::vector<Rat> B(m);
  int n_slack = 0, n_art = 0;
  for (int i = 0; i < m; ++i) {
    const bool flip = rows[i].b < 0;
    for (int j = 0; j < nvars; ++j) A[i][j] = flip ? -rows[i].a[j] : rows[i].a[j];
    B[i] = flip ? -rows[i].b : rows[i].b;
    if (rows[i].sense == Sense::EQ) {
      kind[i] = Kind::ART;
      ++n_art;
    } else if (!flip) {
      kind[i] = Kind::SLACK;
      ++n_slack;
    } else {
      kind[i] = Kind::SURPLUS_ART;
      ++n_slack;
      ++n_art;
    }
  }

  Tableau t;
  t.rows = m;
  t.cols = nvars + n_slack + n_art;
  t.a.assign(m, std::vector<Rat>(t.cols, Rat(0)));
  t.b = B;
  t.basis.assign(m, -1);
  t.allowed.assign(t.cols, true);
  const int art0 = nvars + n_slack;
  int slack = nvars, art = art0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nvars; ++j) t.a[i][j] = A[i][j];
    switch (kind[i]) {
      case Kind::SLACK:
        t.a[i][slack] = 1;
        t.basis[i] = slack++;
        break;
      case Kind::SURPLUS_ART:
        t.a[i][slack] = -1;
        ++slack;
        t.a[i][art] = 1;
        t.basis[i] = art++;
        break;
      case Kind::ART:
        t.a[i][art] = 1;
        t.basis[i] = art++;
        break;
    }
  }

  // Phase 1: maximize -sum(artificials).
  if (n_art > 0) {
    std::vector<Rat> c1(t.cols, Rat(0));
    for (int j = art0; j < t.cols; ++j) c1[j] = -1;
    t.price(c1);
    if (!t.run()) throw std::logic_error("phase 1 cannot be unbounded");
    if (t.value != 0) return {Status::INFEASIBLE, Rat(0), {}};
    // Drive leftover artificials out of the basis; rows that cannot pivot are
    // redundant and harmless since their rhs is zero.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < art0) continue;
      int col = -1;
      for (int j = 0; j < art0; ++j) {
        if (t.a[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) t.pivot(i, col);
    }
    for (int j = art0; j < t.cols; ++j) t.allowed[j] = false;
  }

  // Phase 2.
  std::vector<Rat> c2(t.cols, Rat(0));
  for (int j = 0; j < nvars; ++j) c2[j] = c[j];
  t.price(c2);
  if (!t.run()) return {Status::UNBOUNDED, Rat(0), {}};

  std::vector<Rat> x(nvars, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < nvars) x[t.basis[i]] = t.b[i];
  }
  return {Status::OPTIMAL, t.value, x};
}

bool feasible(int nvars, const std::vector<Row>& rows) {
  const std::vector<Rat> zero(nvars, Rat(0));
  return maximize(nvars, rows, zero).status == Status::OPTIMAL;
}

}  // namespace fixcomb::lp
