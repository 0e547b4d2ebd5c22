#pragma once

#include "pbc/types.hpp"

namespace pbc {

/// (u_minus - k1*v)(u_minus - k2*v); <= 0 iff (v, u_minus) lies in the sector.
double sector_residual(const SectorBounds& bounds, double v, double u_minus);

/// Discretized active-constraint set at (v, u_minus). Checked in order
/// Apex, LowerActive, UpperActive, Outside, Interior with relative scaling
/// scale = max(1, |v|, |u_minus|).
BoundaryMode classify_mode(const SectorBounds& bounds, double v, double u_minus, double tol);

/// Leading-principal-minor test: a(0,0) < 0 and det(a) > 0.
bool is_negative_definite(const Eigen::Matrix2d& a);

/// Sector constraint matrix N = [[1, (k1+k2)/2], [(k1+k2)/2, k1*k2]].
Eigen::Matrix2d sector_constraint_matrix(const SectorBounds& bounds);

/// True iff M - lambda*N is negative definite (and lambda >= 0).
bool verify_certificate(const SectorCertificate& cert);

/// Admissible range for the sector slopes in the analytic design cases.
/// `upper` is +inf for the unbounded cases; for a negative-definite supply
/// matrix every slope pair is admissible and `lower` is -inf as well.
struct AdmissibleInterval {
  double lower;
  double upper;
  bool bounded() const { return std::isfinite(upper); }
};

enum class SupplyCase {
  NegativeDefinite,       // M < 0: any sector, lambda = 0 works
  Passive,                // q = 0, r = 0, s > 0
  OutputStrictlyPassive,  // q = 0, r < 0, s > 0
  GeneralDissipative,     // q > 0, q*r - s^2 < 0
};

/// Classify the triple into a design case; throws NotSectorDesignable.
SupplyCase classify_supply(const DissipativityTriple& triple);

AdmissibleInterval admissible_interval(const DissipativityTriple& triple);

/// Largest-margin multiplier for fixed bounds, found by maximizing the
/// concave score min(lambda - q, det(M - lambda*N)) over lambda >= 0.
/// Throws CertificateSearchFailed when no multiplier certifies the bounds.
double find_certificate_lambda(const DissipativityTriple& triple, const SectorBounds& bounds);

/// Deterministic sector design: place (k1, k2) at relative positions margin
/// and 1-margin of the admissible interval (see admissible_interval), then
/// search the multiplier. margin must lie in (0, 0.5).
SectorCertificate design_sector(const DissipativityTriple& triple, double margin);

/// Grid search over (lambda_bar, c, d) = (1/lambda, k1+k2, k1*k2) testing
/// lambda_bar*M - [[1, c/2], [c/2, d]] < 0 and c^2 - 4d > 0, refined once
/// around the best candidate. Works for any triple; throws
/// CertificateSearchFailed when the grid is exhausted.
SectorCertificate synthesize_certificate_search(const DissipativityTriple& triple);

}  // namespace pbc
