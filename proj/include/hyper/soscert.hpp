#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyper/hypercone.hpp"
#include "hyper/polycore/matrix.hpp"
#include "hyper/polycore/polynomial.hpp"
#include "hyper/sdp_settings.hpp"
#include "hyper/verdict.hpp"

namespace hyper {

/// Affine family of Gram matrices G0 + sum_k lambda_k B_k with
/// v^T G v + p * modulus = target for every lambda. The multiplier p and the
/// modulus are present only for the mod-f variant.
struct GramSystem {
  Polynomial target;
  std::vector<Polynomial> basis;
  /// Set when every basis element is a monomial.
  std::vector<Monomial> monomial_basis;

  std::optional<Polynomial> modulus;
  std::vector<Monomial> multiplier_monomials;

  bool consistent = true;
  RationalMatrix particular;
  Polynomial particular_multiplier;
  std::vector<RationalMatrix> nullspace;
  std::vector<Polynomial> nullspace_multiplier;

  std::size_t size() const noexcept { return basis.size(); }
  std::size_t dimension() const noexcept { return nullspace.size(); }
  bool unique() const noexcept { return consistent && nullspace.empty(); }

  RationalMatrix gram_at(std::span<const Rational> lambda) const;
  Polynomial multiplier_at(std::span<const Rational> lambda) const;
  /// v^T G v + p * modulus.
  Polynomial represented(const RationalMatrix& g, const Polynomial& multiplier) const;
  /// Whether g lies in the family (exact).
  bool contains(const RationalMatrix& g) const;
};

/// Full homogeneous monomial basis of degree deg(F)/2.
GramSystem assemble_gram_system(const Polynomial& F);
GramSystem assemble_gram_system(const Polynomial& F, std::span<const Monomial> basis);
/// Arbitrary basis polynomials, homogeneous of degree deg(F)/2.
GramSystem assemble_gram_system(const Polynomial& F, std::span<const Polynomial> basis);
/// F - p * f over the full basis with p of degree deg(F) - deg(f) free.
GramSystem assemble_gram_system_mod(const Polynomial& F, const Polynomial& f);

/// Monomials of degree deg(F)/2 that can occur in a sum-of-squares
/// decomposition of F: inside the bounding region of half the Newton
/// polytope for the functionals x_i, x_i + x_j, x_i - x_j, and not forced to
/// a zero row by a missing square term.
std::vector<Monomial> reduced_monomial_basis(const Polynomial& F);

struct SdpResult {
  bool feasible = false;
  std::vector<std::vector<double>> gram;
  std::vector<double> lambda;
  double min_eigenvalue = 0;
  unsigned iterations = 0;
  std::string diagnostics;
};

/// Alternating projections between the shifted PSD cone and the affine
/// family. Deterministic.
SdpResult solve_sdp(const GramSystem& sys, const SdpSettings& settings = {});

struct SosCertificate {
  std::size_t nvars = 0;
  Polynomial target;
  std::vector<Polynomial> basis;
  RationalMatrix gram;
  LdlDecomposition ldl;
  unsigned denominator_power = 0;
  /// Variables of the factor (sum x_i^2)^N.
  std::vector<std::size_t> sphere_variables;
  std::optional<Polynomial> multiplier;
  std::optional<Polynomial> modulus;
};

/// (sum over sphere_variables of x_i^2)^N.
Polynomial sphere_power(std::size_t nvars, std::span<const std::size_t> vars, unsigned n);

/// Rebuilds sum_k D_k (sum_j L_jk v_perm(j))^2 from the LDL data and compares
/// it with (sum x_i^2)^N * target - multiplier * modulus term by term.
bool verify_certificate(const SosCertificate& cert, std::string* reason = nullptr);

/// The certificate of (sum x_i^2)^(N+1) * target obtained by multiplying by
/// sum x_i^2.
SosCertificate lift_certificate(const SosCertificate& cert);

/// Whether (sum x_i^2)^N * F is a sum of squares for some N <= max_power.
Verdict certify_sos(const Polynomial& F, unsigned max_power, const SdpSettings& settings = {});

/// Decides the family exactly when it is a single point, otherwise searches
/// numerically and rounds.
Verdict certify_gram_system(const GramSystem& sys, const SdpSettings& settings = {});

/// Whether F - p * f is a sum of squares for some form p.
Verdict certify_sos_mod_f(const Polynomial& F, const Polynomial& f,
                          const SdpSettings& settings = {});

/// Inner approximation of the closed cone: yes when Delta_{e,a} f is
/// certified; a refuted relaxation is reported as unknown with detail
/// SOS_REFUTED.
Verdict sos_cone_membership(const HyperbolicityInstance& inst, std::span<const Rational> a,
                            unsigned max_power, const SdpSettings& settings = {});

}  // namespace hyper
