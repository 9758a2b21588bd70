#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hyper/polycore/polynomial.hpp"
#include "hyper/realroots.hpp"
#include "hyper/sdp_settings.hpp"
#include "hyper/verdict.hpp"

namespace hyper {

/// A homogeneous polynomial with a point where it does not vanish. The sign
/// of f is flipped on construction so that f(e) > 0.
class HyperbolicityInstance {
 public:
  HyperbolicityInstance(Polynomial f, RationalVector e);

  const Polynomial& f() const noexcept { return f_; }
  const RationalVector& e() const noexcept { return e_; }
  int degree() const noexcept { return degree_; }
  std::size_t nvars() const noexcept { return f_.nvars(); }
  bool sign_flipped() const noexcept { return flipped_; }

 private:
  Polynomial f_;
  RationalVector e_;
  int degree_;
  bool flipped_ = false;
};

struct SampleConfig {
  unsigned trials = 64;
  std::uint64_t seed = 42;
  unsigned coordinate_bound = 10;
  unsigned threads = 1;
};

/// Deterministic stream of nonzero integer vectors with coordinates in
/// [-bound, bound].
class PointSampler {
 public:
  PointSampler(std::uint64_t seed, unsigned bound) : rng_(seed), bound_(bound) {}
  RationalVector next(std::size_t n);

 private:
  std::mt19937_64 rng_;
  unsigned bound_;
};

/// Refutes on the first sampled line t*e + a whose restriction is not
/// real-rooted. A yes is Monte Carlo evidence and is flagged `sampled`.
Verdict check_hyperbolic(const HyperbolicityInstance& inst, const SampleConfig& cfg);

/// Exact per-line test: no root of f(t*e - a) in (-inf, 0] (open cone) or in
/// (-inf, 0) (closure).
Verdict cone_membership(const HyperbolicityInstance& inst, std::span<const Rational> a,
                        bool closure);

/// D_e f * D_a f - f * D_e D_a f.
Polynomial wronskian_delta(const Polynomial& f, std::span<const Rational> e,
                           std::span<const Rational> a);
/// Symbolic directions (entries are polynomials in the ring of f).
Polynomial wronskian_delta(const Polynomial& f, std::span<const Polynomial> e,
                           std::span<const Polynomial> a);

/// Delta_{e_i, e_j} f = f_i f_j - f f_ij.
Polynomial delta_ij(const Polynomial& f, std::size_t i, std::size_t j);

/// A line on which f(t*e + a) has a repeated root when this happens on every
/// sampled line, or nullopt once some sampled restriction is square-free
/// (which proves f square-free).
std::optional<RationalVector> find_repeated_factor_line(const HyperbolicityInstance& inst,
                                                        const SampleConfig& cfg);

/// Non-strict interlacing of g with respect to e, in three stages: line
/// refutation, point refutation of D_e f * g - f * D_e g, then an SOS
/// certificate for (sum x_i^2)^N (D_e f * g - f * D_e g), N <= sos_budget.
/// With check_strict, a yes verdict also reports whether interlacing was
/// strict on every sampled line. Throws std::invalid_argument on a degree
/// mismatch or when f has a repeated factor on a sampled line.
Verdict interlaces(const HyperbolicityInstance& inst, const Polynomial& g, const SampleConfig& cfg,
                   unsigned sos_budget, const SdpSettings& settings = {}, bool check_strict = false);

/// Whether D_a f interlaces f, i.e. a lies in the closed hyperbolicity cone.
Verdict int_cone_membership_by_derivative(const HyperbolicityInstance& inst,
                                          std::span<const Rational> a, const SampleConfig& cfg,
                                          unsigned sos_budget, const SdpSettings& settings = {});

}  // namespace hyper
