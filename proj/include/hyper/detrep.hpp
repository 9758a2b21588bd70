#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyper/hypercone.hpp"
#include "hyper/polycore/matrix.hpp"
#include "hyper/polycore/polynomial.hpp"
#include "hyper/sdp_settings.hpp"
#include "hyper/verdict.hpp"

namespace hyper {

/// det(sum_i x_i M_i) = gamma * f with sum_i e_i M_i positive definite.
struct DeterminantalRep {
  std::vector<RationalMatrix> matrices;
  RationalVector e;
  Rational gamma = 1;

  std::size_t size() const { return matrices.empty() ? 0 : matrices.front().rows(); }
  std::size_t nvars() const { return matrices.size(); }
  PolynomialMatrix pencil() const;
  RationalMatrix at(std::span<const Rational> point) const;
};

/// Symmetric matrix of forms of degree d - 1 with a_ii = df/dx_i, rank one
/// modulo (f).
struct InterlacerMatrix {
  PolynomialMatrix a;
  Polynomial f;
  std::vector<std::size_t> vars;
};

struct DetrepBuild {
  std::optional<DeterminantalRep> rep;
  InterlacerMatrix interlacer;
  /// Set when some Delta_ij f is not a square.
  std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
  Polynomial offending_delta;
  std::string detail;

  bool ok() const { return rep.has_value(); }
};

/// Raised when a step of the construction that should be exact is not, e.g.
/// a 2x2 minor that f does not divide.
class DetrepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Multiaffine stability test through the polynomials Delta_ij f.
Verdict check_multiaffine_stable(const Polynomial& f, const SampleConfig& cfg, unsigned sos_budget,
                                 const SdpSettings& settings = {});

/// Builds a definite determinantal representation from square roots of the
/// Delta_ij f. `dvars` (0-based) lists candidate variables; the first
/// d-subset in lexicographic order in which f is affine and whose product
/// monomial has a nonzero coefficient is used.
DetrepBuild build_detrep_multiaffine(const Polynomial& f, std::span<const std::size_t> dvars,
                                     std::span<const Rational> e);

bool verify_detrep(const DeterminantalRep& rep, const Polynomial& f, std::string* reason = nullptr);

/// trace(E * adj(M(x))) for a positive semidefinite E.
Polynomial interlacer_from_detrep(const DeterminantalRep& rep, const RationalMatrix& E);

/// On a generic size x size matrix of variables X, checks
///   |X b; a^T 0| |X d; c^T 0| - |X d; a^T 0| |X b; c^T 0| = |X| |X b d; a^T 0 0; c^T 0 0|,
///   D_{b a^T} |X| = a^T adj(X) b = -|X b; a^T 0|,
///   D_{d c^T} D_{b a^T} |X| = |X b d; a^T 0 0; c^T 0 0|.
/// Sizes above 4 are rejected.
bool hesse_identity_oracle(std::size_t size, std::span<const Rational> alpha,
                           std::span<const Rational> beta, std::span<const Rational> gamma,
                           std::span<const Rational> delta, std::string* failure = nullptr);

}  // namespace hyper
