#include "simplex.hpp"

#include <stdexcept>

namespace horncone {

namespace {

/* Dense tableau in equality form: rows hold [coefficients | rhs] with rhs kept
   nonnegative, plus one objective row maximized by pivoting.  Bland's rule
   (lowest eligible index for both the entering and the leaving choice)
   guarantees termination with exact arithmetic. */
class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols), cells_(rows + 1, std::vector<Rat>(cols + 1)), basis_(rows, -1) {}

  Rat& at(int r, int c) { return cells_[r][c]; }
  Rat& rhs(int r) { return cells_[r][cols_]; }
  Rat& obj(int c) { return cells_[rows_][c]; }
  Rat& obj_rhs() { return cells_[rows_][cols_]; }
  int basis(int r) const { return basis_[r]; }
  void set_basis(int r, int c) { basis_[r] = c; }

  void pivot(int pr, int pc) {
    Rat diag = cells_[pr][pc];
    for (int c = 0; c <= cols_; ++c) cells_[pr][c] /= diag;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      Rat factor = cells_[r][pc];
      if (factor == 0) continue;
      for (int c = 0; c <= cols_; ++c) cells_[r][c] -= factor * cells_[pr][c];
    }
    basis_[pr] = pc;
  }

  // Runs the simplex loop on the current objective row; true when optimal,
  // false when unbounded.  Only columns below col_limit may enter (used to
  // fence off artificial columns in phase 2).
  bool optimize(int col_limit) {
    for (;;) {
      int entering = -1;
      for (int c = 0; c < col_limit; ++c)
        if (cells_[rows_][c] > 0) {
          entering = c;
          break;
        }
      if (entering < 0) return true;
      int leaving = -1;
      Rat best;
      for (int r = 0; r < rows_; ++r) {
        if (cells_[r][entering] <= 0) continue;
        Rat ratio = cells_[r][cols_] / cells_[r][entering];
        if (leaving < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leaving])) {
          leaving = r;
          best = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  int rows_, cols_;
  std::vector<std::vector<Rat>> cells_;
  std::vector<int> basis_;
};

}  // namespace

LpResult simplex_solve(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                       const std::vector<Rat>& c) {
  int m = static_cast<int>(a.size());
  int n = static_cast<int>(c.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("simplex: ragged constraint matrix");
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("simplex: rhs size mismatch");

  // Columns: n structurals, m slacks, then one artificial per negative row.
  std::vector<int> artificial_rows;
  for (int r = 0; r < m; ++r)
    if (b[r] < 0) artificial_rows.push_back(r);
  int art = static_cast<int>(artificial_rows.size());
  Tableau t(m, n + m + art);

  for (int r = 0; r < m; ++r) {
    bool flip = b[r] < 0;
    for (int j = 0; j < n; ++j) t.at(r, j) = flip ? -a[r][j] : a[r][j];
    t.at(r, n + r) = flip ? Rat(-1) : Rat(1);
    t.rhs(r) = flip ? -b[r] : b[r];
    t.set_basis(r, n + r);
  }
  for (int k = 0; k < art; ++k) {
    int r = artificial_rows[k];
    t.at(r, n + m + k) = 1;
    t.set_basis(r, n + m + k);
  }

  if (art > 0) {
    // Phase 1: maximize -(sum of artificials); price out the basic artificials.
    for (int k = 0; k < art; ++k) t.obj(n + m + k) = -1;
    for (int k = 0; k < art; ++k) {
      int r = artificial_rows[k];
      for (int cidx = 0; cidx <= t.cols_; ++cidx) t.cells_[m][cidx] += t.cells_[r][cidx];
    }
    t.optimize(t.cols_);  // bounded below by 0, never unbounded
    if (t.obj_rhs() != 0) return {LpStatus::infeasible, Rat(0), {}};
    // Pivot any artificial still basic (at value zero) out of the basis.
    for (int r = 0; r < m; ++r) {
      if (t.basis(r) < n + m) continue;
      int replacement = -1;
      for (int cidx = 0; cidx < n + m; ++cidx)
        if (t.at(r, cidx) != 0) {
          replacement = cidx;
          break;
        }
      if (replacement >= 0) t.pivot(r, replacement);
      // An all-zero row is a vacuous constraint; its artificial stays at zero.
    }
  }

  // Phase 2 objective: c over structurals, priced out against the basis.
  for (int cidx = 0; cidx <= t.cols_; ++cidx) t.cells_[m][cidx] = 0;
  for (int j = 0; j < n; ++j) t.obj(j) = c[j];
  for (int r = 0; r < m; ++r) {
    int bc = t.basis(r);
    Rat cost = bc < n ? c[bc] : Rat(0);  // basic slacks/artificials cost nothing
    if (cost == 0) continue;
    for (int cidx = 0; cidx <= t.cols_; ++cidx) t.cells_[m][cidx] -= cost * t.cells_[r][cidx];
  }
  // The objective row now stores reduced costs; the stored "rhs" is -value.
  if (!t.optimize(n + m)) return {LpStatus::unbounded, Rat(0), {}};

  LpResult res;
  res.status = LpStatus::optimal;
  res.solution.assign(n, Rat(0));
  for (int r = 0; r < m; ++r)
    if (t.basis(r) < n) res.solution[t.basis(r)] = t.rhs(r);
  res.objective = 0;
  for (int j = 0; j < n; ++j) res.objective += c[j] * res.solution[j];
  return res;
}

std::optional<std::vector<Rat>> solve_free_inequalities(const std::vector<std::vector<Rat>>& a,
                                                        const std::vector<Rat>& b) {
  if (a.empty()) return std::vector<Rat>{};
  int n = static_cast<int>(a[0].size());
  std::vector<std::vector<Rat>> doubled;
  doubled.reserve(a.size());
  for (const auto& row : a) {
    std::vector<Rat> d;
    d.reserve(2 * n);
    for (const Rat& v : row) d.push_back(v);
    for (const Rat& v : row) d.push_back(-v);
    doubled.push_back(std::move(d));
  }
  auto lp = simplex_solve(doubled, b, std::vector<Rat>(2 * n, Rat(0)));
  if (lp.status != LpStatus::optimal) return std::nullopt;
  std::vector<Rat> x(n);
  for (int j = 0; j < n; ++j) x[j] = lp.solution[j] - lp.solution[n + j];
  return x;
}

}  // namespace horncone
