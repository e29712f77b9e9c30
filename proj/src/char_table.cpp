#include "fusionkit/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit {

namespace {

constexpr double kOrderTol = 1e-7;

// Descending lexicographic comparison of rows by (re, im) per column.
bool row_before(const Eigen::MatrixXcd& v, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    const Complex x = v(a, i), y = v(b, i);
    if (std::abs(x.real() - y.real()) > kOrderTol) return x.real() > y.real();
    if (std::abs(x.imag() - y.imag()) > kOrderTol) return x.imag() > y.imag();
  }
  return false;
}

double homomorphism_residual(const BasedRing& ring, const Eigen::MatrixXcd& v) {
  const std::size_t r = ring.rank();
  double worst = 0;
  for (Eigen::Index j = 0; j < v.rows(); ++j)
    for (Index a = 0; a < r; ++a)
      for (Index b = 0; b < r; ++b) {
        Complex s = 0;
        for (Index c = 0; c < r; ++c) s += static_cast<double>(ring(a, b, c)) * v(j, c);
        const Complex lhs = v(j, a) * v(j, b);
        worst = std::max(worst, std::abs(lhs - s) / std::max(1.0, std::abs(lhs)));
      }
  return worst;
}

}  // namespace

double codegree(const BasedRing& ring, const CharacterTable& table, std::size_t j) {
  Complex s = 0;
  for (Index i = 0; i < ring.rank(); ++i)
    s += table(j, i) * table(j, ring.dual(i)) / static_cast<double>(ring.norm(i));
  return s.real();
}

CharacterTable compute_table(const BasedRing& ring, const DimensionData& dims,
                             const TableOptions& options) {
  if (!ring.is_commutative())
    throw PreconditionError("character table requires a commutative ring");
  const std::size_t r = ring.rank();
  const auto n = static_cast<Eigen::Index>(r);

  std::vector<Eigen::MatrixXd> fm;
  fm.reserve(r);
  for (Index i = 0; i < r; ++i) {
    Eigen::MatrixXd m(n, n);
    for (Index k = 0; k < r; ++k)
      for (Index j = 0; j < r; ++j)
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) =
            static_cast<double>(ring(i, j, k));
    fm.push_back(std::move(m));
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> coeff(1, std::int64_t{1} << 20);
  double last_gap = 0;
  for (int attempt = 1; attempt <= options.max_retries; ++attempt) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
    for (Index i = 0; i < r; ++i) t += std::ldexp(static_cast<double>(coeff(rng)), -20) * fm[i];

    Eigen::EigenSolver<Eigen::MatrixXd> solver(t);
    if (solver.info() != Eigen::Success) continue;
    const Eigen::VectorXcd lambda = solver.eigenvalues();
    const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = a + 1; b < n; ++b) gap = std::min(gap, std::abs(lambda(a) - lambda(b)));
    last_gap = gap / scale;
    if (last_gap < 1e-6) continue;

    const Eigen::MatrixXcd vecs = solver.eigenvectors();
    Eigen::MatrixXcd values(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::VectorXcd v = vecs.col(j);
      const Complex norm = v.squaredNorm();
      for (Index i = 0; i < r; ++i)
        values(j, static_cast<Eigen::Index>(i)) =
            v.dot(fm[i].cast<Complex>() * v) / norm;  // conjugates v
    }
    // mu_j(b_unit) = 1 holds up to rounding; pin it.
    values.col(static_cast<Eigen::Index>(ring.unit())).setOnes();

    std::vector<Eigen::Index> fp_rows;
    for (Eigen::Index j = 0; j < n; ++j) {
      bool positive = true;
      for (Eigen::Index i = 0; i < n && positive; ++i)
        positive = std::abs(values(j, i).imag()) < kOrderTol && values(j, i).real() > kOrderTol;
      if (positive) fp_rows.push_back(j);
    }
    if (fp_rows.size() != 1)
      throw NumericError("expected exactly one positive homomorphism, found " +
                             std::to_string(fp_rows.size()),
                         0.0);

    std::vector<Eigen::Index> order(r);
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::erase(order, fp_rows.front());
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return row_before(values, a, b); });
    order.insert(order.begin(), fp_rows.front());

    CharacterTable table;
    table.values.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) table.values.row(j) = values.row(order[j]);
    // Real rows carry exact zeros in their imaginary parts.
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (std::abs(table.values(j, i).imag()) < 1e-13)
          table.values(j, i) = table.values(j, i).real();

    const double res = homomorphism_residual(ring, table.values);
    if (res > options.tol) {
      std::ostringstream os;
      os << "character rows are not homomorphisms (residual " << res << ")";
      throw NumericError(os.str(), res);
    }
    table.fp_index = 0;
    table.total = dims.total;
    table.seed = options.seed;
    table.attempts = attempt;
    for (std::size_t j = 0; j < r; ++j) {
      table.codegrees.push_back(codegree(ring, table, j));
      table.class_dims.push_back(dims.total / table.codegrees.back());
    }
    return table;
  }
  throw NumericError("eigenvalues of the random combination collide after " +
                         std::to_string(options.max_retries) + " attempts",
                     last_gap);
}

TableResiduals certify(const BasedRing& ring, const DimensionData& dims,
                       const CharacterTable& table) {
  TableResiduals out;
  const std::size_t r = ring.rank();
  out.homomorphism = homomorphism_residual(ring, table.values);
  for (std::size_t j = 0; j < table.size(); ++j)
    for (std::size_t k = 0; k < table.size(); ++k) {
      Complex s = 0;
      for (Index i = 0; i < r; ++i)
        s += table(j, i) * table(k, ring.dual(i)) / static_cast<double>(ring.norm(i));
      const double want = j == k ? table.codegrees[j] : 0.0;
      out.orthogonality =
          std::max(out.orthogonality, std::abs(s - want) / std::max(1.0, dims.total));
    }
  const double sum = std::accumulate(table.class_dims.begin(), table.class_dims.end(), 0.0);
  out.class_dim_sum = std::abs(sum - dims.total) / std::max(1.0, dims.total);
  for (Index i = 0; i < r; ++i)
    out.fp_row = std::max(out.fp_row, std::abs(table(table.fp_index, i) - dims[i]) /
                                          std::max(1.0, dims[i]));
  return out;
}

bool rows_equal_up_to_permutation(const CharacterTable& a, const CharacterTable& b, double tol) {
  if (a.values.rows() != b.values.rows() || a.values.cols() != b.values.cols()) return false;
  const Eigen::Index n = a.values.rows();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (Eigen::Index j = 0; j < n; ++j) {
    bool found = false;
    for (Eigen::Index k = 0; k < n && !found; ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      if ((a.values.row(j) - b.values.row(k)).cwiseAbs().maxCoeff() < tol) {
        used[static_cast<std::size_t>(k)] = 1;
        found = true;
      }
    }
    if (!found) return false;
  }
  return (a.values.row(static_cast<Eigen::Index>(a.fp_index)) -
          b.values.row(static_cast<Eigen::Index>(b.fp_index)))
             .cwiseAbs()
             .maxCoeff() < tol;
}

DualHypergroup dual_hypergroup(const BasedRing& ring, const DimensionData& dims,
                               const CharacterTable& table, double tol) {
  const auto n = static_cast<Eigen::Index>(table.size());
  const auto r = static_cast<Eigen::Index>(ring.rank());
  // f(c, i) = mu_c(b_i) / d_i
  Eigen::MatrixXcd f(n, r);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index i = 0; i < r; ++i) f(c, i) = table.values(c, i) / dims[static_cast<Index>(i)];

  const Eigen::FullPivLU<Eigen::MatrixXcd> lu(f.transpose());
  DualHypergroup out;
  out.size = static_cast<std::size_t>(n);
  out.p.assign(out.size * out.size * out.size, 0.0);
  out.nonnegative = true;
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      const Eigen::VectorXcd prod = f.row(a).transpose().cwiseProduct(f.row(b).transpose());
      const Eigen::VectorXcd p = lu.solve(prod);
      out.expansion_residual =
          std::max(out.expansion_residual, (f.transpose() * p - prod).cwiseAbs().maxCoeff());
      for (Eigen::Index c = 0; c < n; ++c) {
        out.imaginary_residual = std::max(out.imaginary_residual, std::abs(p(c).imag()));
        double v = p(c).real();
        if (std::abs(v) < 1e-13) v = 0.0;
        out.p[(static_cast<std::size_t>(a) * out.size + static_cast<std::size_t>(b)) * out.size +
              static_cast<std::size_t>(c)] = v;
        if (v < -tol) out.nonnegative = false;
      }
    }
  if (out.expansion_residual > std::sqrt(tol))
    throw NumericError("dual hypergroup expansion is singular", out.expansion_residual);
  return out;
}

BurnsideReport burnside_check(const BasedRing& ring, const CharacterTable& table,
                              double zero_tol) {
  BurnsideReport out;
  const IndexSet inv = invertibles(ring);
  for (Index i = 0; i < ring.rank(); ++i) {
    BurnsideEntry e;
    e.simple = i;
    e.invertible = std::binary_search(inv.begin(), inv.end(), i);
    for (std::size_t j = 0; j < table.size(); ++j)
      if (std::abs(table(j, i)) < zero_tol) {
        e.has_zero = true;
        e.zero_at = j;
        break;
      }
    if (e.invertible == e.has_zero) out.holds = false;
    out.entries.push_back(e);
  }
  return out;
}

}  // namespace fusionkit
