#include "fxpca/bounds.hpp"

#include <cmath>

#include "fxpca/errors.hpp"

namespace fxpca {

namespace {

void check_domain(std::size_t k, double delta) {
  if (k < 1) throw DomainError("bound: k must be at least 1");
  if (!(delta > 0.0) || !(delta < 1.0)) throw DomainError("bound: delta must lie in (0,1)");
}

}  // namespace

double bound_prop41(std::size_t k, double delta) {
  check_domain(k, delta);
  const double kk = static_cast<double>(k);
  const double l = std::log(2.0 / delta);
  return (1.0 + 4.0 * std::sqrt(l)) / std::sqrt(kk) + 8.0 * l / (3.0 * kk);
}

double bound_prop42(std::size_t k, double delta) {
  check_domain(k, delta);
  const double kk = static_cast<double>(k);
  const double l = std::log(4.0 / delta);
  return std::sqrt(8.0 * l / kk) + 4.0 * l / (3.0 * kk);
}

BoundReport bound_total(std::size_t n, std::size_t k, double delta) {
  check_domain(k, delta);
  if (k > n) throw DomainError("bound: k must not exceed n");
  BoundReport report;
  report.n = n;
  report.k = k;
  report.delta = delta;
  report.b_prop41 = bound_prop41(k, delta);
  report.b_prop42 = bound_prop42(k, delta);
  report.b_total = report.b_prop41 + report.b_prop42;
  return report;
}

double eigenspace_bound(BoundReport& report, double eigen_gap) {
  if (!(eigen_gap > 0.0))
    throw DegeneracyError("eigenspace bound: eigen gap is not positive (degenerate spectrum)");
  report.eigen_gap = eigen_gap;
  report.rho_bound = report.b_total / eigen_gap;
  return *report.rho_bound;
}

}  // namespace fxpca
