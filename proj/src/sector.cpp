#include "pbc/sector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace pbc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> logspace(double lo, double hi, int count) {
  std::vector<double> out(count);
  const double llo = std::log10(lo);
  const double lhi = std::log10(hi);
  for (int i = 0; i < count; ++i) {
    out[i] = std::pow(10.0, llo + (lhi - llo) * i / double(count - 1));
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * i / double(count - 1);
  }
  return out;
}

// Negative-definiteness margin of M - lambda*N as a function of lambda.
// Both pieces are concave in lambda, so the min is concave.
double certificate_score(const Eigen::Matrix2d& m, const Eigen::Matrix2d& n, double lambda) {
  const Eigen::Matrix2d a = m - lambda * n;
  return std::min(-a(0, 0), a.determinant());
}

std::string describe_bounds(const SectorBounds& b) {
  std::ostringstream os;
  os << "(k1, k2) = (" << b.k1 << ", " << b.k2 << ")";
  return os.str();
}

}  // namespace

double sector_residual(const SectorBounds& bounds, double v, double u_minus) {
  return (u_minus - bounds.k1 * v) * (u_minus - bounds.k2 * v);
}

BoundaryMode classify_mode(const SectorBounds& bounds, double v, double u_minus, double tol) {
  const double scale = std::max({1.0, std::abs(v), std::abs(u_minus)});
  if (std::abs(v) <= tol && std::abs(u_minus) <= tol) {
    return BoundaryMode::Apex;
  }
  const double residual = sector_residual(bounds, v, u_minus);
  if (std::abs(u_minus - bounds.k1 * v) <= tol * scale && residual <= tol) {
    return BoundaryMode::LowerActive;
  }
  if (std::abs(u_minus - bounds.k2 * v) <= tol * scale && residual <= tol) {
    return BoundaryMode::UpperActive;
  }
  if (residual > tol * scale * scale) {
    return BoundaryMode::Outside;
  }
  return BoundaryMode::Interior;
}

bool is_negative_definite(const Eigen::Matrix2d& a) {
  return a(0, 0) < 0.0 && a.determinant() > 0.0;
}

Eigen::Matrix2d sector_constraint_matrix(const SectorBounds& bounds) {
  const double c = bounds.k1 + bounds.k2;
  Eigen::Matrix2d n;
  n << 1.0, 0.5 * c, 0.5 * c, bounds.k1 * bounds.k2;
  return n;
}

bool verify_certificate(const SectorCertificate& cert) {
  if (cert.lambda < 0.0) {
    return false;
  }
  const Eigen::Matrix2d a =
      cert.triple.supply_matrix() - cert.lambda * sector_constraint_matrix(cert.bounds);
  return is_negative_definite(a);
}

SupplyCase classify_supply(const DissipativityTriple& t) {
  if (is_negative_definite(t.supply_matrix())) {
    return SupplyCase::NegativeDefinite;
  }
  if (t.q == 0.0 && t.r == 0.0 && t.s > 0.0) {
    return SupplyCase::Passive;
  }
  if (t.q == 0.0 && t.r < 0.0 && t.s > 0.0) {
    return SupplyCase::OutputStrictlyPassive;
  }
  if (t.q > 0.0 && t.q * t.r - t.s * t.s < 0.0) {
    return SupplyCase::GeneralDissipative;
  }
  std::ostringstream os;
  os << "triple (q, s, r) = (" << t.q << ", " << t.s << ", " << t.r
     << ") matches no sector-design case";
  throw NotSectorDesignable(os.str());
}

AdmissibleInterval admissible_interval(const DissipativityTriple& t) {
  switch (classify_supply(t)) {
    case SupplyCase::NegativeDefinite:
      return {-kInf, kInf};
    case SupplyCase::Passive:
      return {0.0, kInf};
    case SupplyCase::OutputStrictlyPassive:
      return {t.r / (2.0 * t.s), kInf};
    case SupplyCase::GeneralDissipative: {
      const double root = std::sqrt(t.s * t.s - t.q * t.r);
      return {(t.s - root) / t.q, (t.s + root) / t.q};
    }
  }
  throw NotSectorDesignable("unreachable");
}

double find_certificate_lambda(const DissipativityTriple& triple, const SectorBounds& bounds) {
  const Eigen::Matrix2d m = triple.supply_matrix();
  const Eigen::Matrix2d n = sector_constraint_matrix(bounds);

  if (certificate_score(m, n, 0.0) > 0.0) {
    return 0.0;
  }

  // Ternary search for the maximizer of the concave score over [0, hi].
  double lo = 0.0;
  double hi = std::max({10.0 * std::abs(triple.q), 10.0 * std::abs(triple.s),
                        10.0 * std::abs(triple.r), 1.0}) *
              1e6;
  for (int iter = 0; iter < 400; ++iter) {
    const double a = lo + (hi - lo) / 3.0;
    const double b = hi - (hi - lo) / 3.0;
    if (certificate_score(m, n, a) < certificate_score(m, n, b)) {
      lo = a;
    } else {
      hi = b;
    }
  }
  const double lambda = 0.5 * (lo + hi);
  if (certificate_score(m, n, lambda) <= 0.0) {
    throw CertificateSearchFailed("no multiplier certifies " + describe_bounds(bounds));
  }
  return lambda;
}

SectorCertificate design_sector(const DissipativityTriple& triple, double margin) {
  if (!(margin > 0.0 && margin < 0.5)) {
    throw ConfigurationError("design_sector: margin must lie in (0, 0.5), got " +
                             std::to_string(margin));
  }
  const AdmissibleInterval interval = admissible_interval(triple);

  SectorBounds bounds{};
  if (interval.bounded()) {
    const double width = interval.upper - interval.lower;
    bounds.k1 = interval.lower + margin * width;
    bounds.k2 = interval.lower + (1.0 - margin) * width;
  } else {
    double k1 = std::isfinite(interval.lower)
                    ? interval.lower + margin * std::max(1.0, std::abs(interval.lower))
                    : margin;
    if (k1 <= 0.0) {
      k1 = margin;  // the unbounded cases always allow a positive lower slope
    }
    bounds.k1 = k1;
    bounds.k2 = k1 * (1.0 + 1.0 / margin);
  }

  SectorCertificate cert{bounds, find_certificate_lambda(triple, bounds), triple};
  return cert;
}

SectorCertificate synthesize_certificate_search(const DissipativityTriple& triple) {
  const Eigen::Matrix2d m = triple.supply_matrix();

  struct Candidate {
    double lambda_bar = 0.0, c = 0.0, d = 0.0;
    double score = -kInf;
  };

  // Feasibility margin of lambda_bar*M - N(c, d) with distinct real slopes.
  auto score_of = [&m](double lambda_bar, double c, double d) {
    Eigen::Matrix2d a = lambda_bar * m;
    a(0, 0) -= 1.0;
    a(0, 1) -= 0.5 * c;
    a(1, 0) -= 0.5 * c;
    a(1, 1) -= d;
    return std::min({-a(0, 0), a.determinant(), c * c - 4.0 * d});
  };

  auto scan = [&score_of](const std::vector<double>& lambdas, const std::vector<double>& cs,
                          const std::vector<double>& ds) {
    Candidate best;
    for (double lb : lambdas) {
      for (double c : cs) {
        for (double d : ds) {
          const double s = score_of(lb, c, d);
          if (s > best.score) {
            best = {lb, c, d, s};
          }
        }
      }
    }
    return best;
  };

  const Candidate coarse = scan(logspace(1e-3, 1e3, 61), linspace(-20.0, 20.0, 201),
                                linspace(-100.0, 100.0, 201));
  if (coarse.score <= 0.0) {
    throw CertificateSearchFailed("certificate grid exhausted for (q, s, r) = (" +
                                  std::to_string(triple.q) + ", " + std::to_string(triple.s) +
                                  ", " + std::to_string(triple.r) + ")");
  }

  // One refinement pass over the surrounding coarse cells.
  const double lratio = std::pow(10.0, 0.1);
  Candidate best = scan(logspace(coarse.lambda_bar / lratio, coarse.lambda_bar * lratio, 21),
                        linspace(coarse.c - 0.2, coarse.c + 0.2, 21),
                        linspace(coarse.d - 1.0, coarse.d + 1.0, 21));
  if (best.score <= 0.0) {
    best = coarse;
  }

  const double disc = std::sqrt(best.c * best.c - 4.0 * best.d);
  SectorCertificate cert{{0.5 * (best.c - disc), 0.5 * (best.c + disc)}, 1.0 / best.lambda_bar,
                         triple};
  if (!verify_certificate(cert)) {
    throw CertificateSearchFailed("grid candidate failed verification at " +
                                  describe_bounds(cert.bounds));
  }
  return cert;
}

}  // namespace pbc
