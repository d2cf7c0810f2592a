#include "sphersing/linalg.hpp"

#include "sphersing/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace sphersing {

std::vector<std::size_t> rref(std::vector<QVec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat piv = rows[r][col];
    for (Rat& x : rows[r]) x /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r, QVec{});
  return pivots;
}

std::size_t rank_of(const std::vector<QVec>& rows) {
  std::vector<QVec> work = rows;
  return rref(work).size();
}

std::size_t rank_of(const std::vector<IVec>& rows) {
  std::vector<QVec> work;
  work.reserve(rows.size());
  for (const IVec& r : rows) work.push_back(to_qvec(r));
  return rank_of(work);
}

std::optional<QVec> solve_linear(const std::vector<QVec>& rows, const std::vector<Rat>& rhs,
                                 std::size_t nvars) {
  std::vector<QVec> aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    QVec r = rows[i];
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  std::vector<std::size_t> pivots = rref(aug);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == nvars) return std::nullopt;  // 0 = 1 row
  }
  QVec x(nvars, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][nvars];
  return x;
}

std::optional<QVec> solve_linear(const std::vector<IVec>& rows, const std::vector<Rat>& rhs,
                                 std::size_t nvars) {
  std::vector<QVec> qrows;
  qrows.reserve(rows.size());
  for (const IVec& r : rows) qrows.push_back(to_qvec(r));
  return solve_linear(qrows, rhs, nvars);
}

std::optional<IVec> solve_linear_integral(const std::vector<IVec>& rows,
                                          const std::vector<Rat>& rhs, std::size_t nvars) {
  // A x = b with x integral requires b integral.
  std::vector<Int> b(rows.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (!is_integral(rhs[i])) return std::nullopt;
    b[i] = rat_num(rhs[i]);
  }
  if (rows.empty()) return IVec(nvars, Int(0));
  SmithResult snf = smith_normal_form(IntMatrix::from_rows(rows));
  // S y = U b with x = V y.
  IVec ub(rows.size(), Int(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) ub[i] += snf.u.at(i, j) * b[j];
  }
  IVec y(nvars, Int(0));
  std::size_t n = std::min(rows.size(), nvars);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Int d = (i < n) ? snf.s.at(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  IVec x(nvars, Int(0));
  for (std::size_t i = 0; i < nvars; ++i) {
    for (std::size_t j = 0; j < nvars; ++j) x[i] += snf.v.at(i, j) * y[j];
  }
  return x;
}

std::vector<QVec> kernel_basis(const std::vector<QVec>& rows, std::size_t nvars) {
  std::vector<QVec> work = rows;
  std::vector<std::size_t> pivots = rref(work);
  std::vector<bool> is_pivot(nvars, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t col = 0; col < nvars; ++col) {
    if (is_pivot[col]) continue;
    QVec v(nvars, Rat(0));
    v[col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work[i][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVec> kernel_basis(const std::vector<IVec>& rows, std::size_t nvars) {
  std::vector<QVec> qrows;
  qrows.reserve(rows.size());
  for (const IVec& r : rows) qrows.push_back(to_qvec(r));
  return kernel_basis(qrows, nvars);
}

IVec scale_to_primitive(const QVec& v) {
  Int lcm = 1;
  for (const Rat& c : v) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = rat_num(v[i] * lcm);
  if (is_zero(out)) return out;
  return primitive_of(out);
}

QVec reduce_mod_span(const QVec& v, const std::vector<QVec>& subspace_rref,
                     const std::vector<std::size_t>& pivots) {
  QVec out = v;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Rat f = out[pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= f * subspace_rref[i][j];
  }
  return out;
}

}  // namespace sphersing
