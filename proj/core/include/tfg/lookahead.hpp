#pragma once

#include <optional>

#include "tfg/element.hpp"

namespace tfg {

/// A cylinder [w]_{-n} on which the cocycle is the constant m != 0; the
/// deficiency n - |m| is what the look-ahead function alpha has to absorb.
struct LookAheadCertificate {
  Word window;  // length 2n+1
  int64_t n = 1;
  int64_t value = 0;
  int64_t deficiency = 0;
};

/// A periodic point of period q <= 2n+1 with cocycle m != 0.
struct PlookAheadCertificate {
  Config point = Config::constant(0);
  int64_t period = 1;
  int64_t n = 1;
  int64_t value = 0;
  int64_t deficiency = 0;
};

struct AlphaProfileRow {
  int64_t n = 0;
  int64_t best_move = 0;  // max |m| over constant cylinders of radius n; 0 = none
  int64_t deficiency = 0;
  bool has_certificate = false;
};

struct LookAheadProfile {
  std::vector<AlphaProfileRow> rows;                 // n = 1..N
  std::vector<LookAheadCertificate> certificates;    // best per n with a certificate
};

/// Scans all radius-n cylinders for n <= N and reports the best constant
/// move per n. Needs the rule within tabulation reach; otherwise raises
/// SearchBudgetExceeded.
LookAheadProfile measure_lookahead(const TfgElement& g, int64_t N,
                                   int64_t budget = 4'000'000);

/// Scans periodic points of period <= 2N+1 and returns the certificate with
/// the smallest deficiency (ties: smaller period, then lexicographic).
/// Raises NoMovingPeriodicPoint when the cocycle vanishes on every scanned
/// point.
PlookAheadCertificate measure_plookahead(const TfgElement& g, int64_t N,
                                         int64_t point_cap = 1 << 18);

/// Constructive route from a window certificate to a periodic-point one:
/// sigma^n(w^Z) lies in [w]_{-n}, has period 2n+1, and
/// inherits the certificate value (re-evaluated; a mismatch means the input
/// certificate was unsound and raises AssertionFailure).
PlookAheadCertificate lookaplooka_transform(const TfgElement& g,
                                            const LookAheadCertificate& cert);

/// Certificate from a caller-supplied periodic point (the certificate-oracle
/// route for elements far beyond scan reach).
PlookAheadCertificate plookahead_from_point(const TfgElement& g, const Config& point,
                                            int64_t period);

}  // namespace tfg
