#include "hyper/hypercone.hpp"

#include <stdexcept>
#include <thread>

#include "hyper/soscert.hpp"

namespace hyper {

HyperbolicityInstance::HyperbolicityInstance(Polynomial f, RationalVector e)
    : f_(std::move(f)), e_(std::move(e)), degree_(f_.total_degree()) {
  if (e_.size() != f_.nvars()) throw std::invalid_argument("point e has wrong dimension");
  if (f_.is_zero()) throw std::invalid_argument("the zero polynomial is not hyperbolic");
  if (!f_.is_homogeneous()) throw std::invalid_argument("f must be homogeneous");
  Rational fe = evaluate(f_, e_);
  if (fe == 0) throw std::invalid_argument("f(e) = 0; e cannot be a hyperbolicity direction");
  if (fe < 0) {
    f_ = -f_;
    flipped_ = true;
  }
}

RationalVector PointSampler::next(std::size_t n) {
  RationalVector v(n);
  std::uint64_t span = 2ull * bound_ + 1;
  while (true) {
    bool nonzero = false;
    for (auto& x : v) {
      long c = static_cast<long>(rng_() % span) - static_cast<long>(bound_);
      x = c;
      nonzero = nonzero || c != 0;
    }
    if (nonzero) return v;
  }
}

namespace {

Witness line_witness(const RationalVector& e, const RationalVector& a, std::string note) {
  Witness w{Witness::Kind::line};
  w.base = e;
  w.direction = a;
  w.note = std::move(note);
  return w;
}

std::vector<RationalVector> draw(const SampleConfig& cfg, std::size_t n, std::uint64_t salt) {
  PointSampler sampler(cfg.seed ^ salt, cfg.coordinate_bound);
  std::vector<RationalVector> out;
  out.reserve(cfg.trials);
  for (unsigned k = 0; k < cfg.trials; ++k) out.push_back(sampler.next(n));
  return out;
}

// Index of the first sample for which `bad` holds, evaluated on cfg.threads
// workers; the answer does not depend on the thread count.
template <class Pred>
std::optional<std::size_t> first_failure(const std::vector<RationalVector>& samples,
                                         unsigned threads, Pred bad) {
  std::vector<char> failed(samples.size(), 0);
  unsigned workers = std::max(1u, std::min<unsigned>(threads, samples.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < samples.size(); ++k)
      if (bad(samples[k])) return k;
    return std::nullopt;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < samples.size(); k += workers) failed[k] = bad(samples[k]);
    });
  for (auto& t : pool) t.join();
  for (std::size_t k = 0; k < samples.size(); ++k)
    if (failed[k]) return k;
  return std::nullopt;
}

constexpr std::uint64_t kLineSalt = 0x9e3779b97f4a7c15ull;
constexpr std::uint64_t kPointSalt = 0xc2b2ae3d27d4eb4full;
constexpr std::uint64_t kSquareFreeSalt = 0x165667b19e3779f9ull;

}  // namespace

Verdict check_hyperbolic(const HyperbolicityInstance& inst, const SampleConfig& cfg) {
  auto samples = draw(cfg, inst.nvars(), kLineSalt);
  auto bad = first_failure(samples, cfg.threads, [&](const RationalVector& a) {
    return !is_real_rooted(restrict_to_line(inst.f(), inst.e(), a));
  });
  if (bad) {
    return Verdict::certified_no(
        line_witness(inst.e(), samples[*bad], "f(t*e + a) has non-real roots"),
        "not hyperbolic: restriction to a sampled line is not real-rooted");
  }
  Verdict v = Verdict::certified_yes("sampled: all " + std::to_string(cfg.trials) +
                                     " sampled lines are real-rooted");
  v.sampled = true;
  return v;
}

Verdict cone_membership(const HyperbolicityInstance& inst, std::span<const Rational> a,
                        bool closure) {
  if (a.size() != inst.nvars()) throw std::invalid_argument("point a has wrong dimension");
  RationalVector minus_a(a.begin(), a.end());
  for (auto& v : minus_a) v = -v;
  UnivariatePolynomial line = restrict_to_line(inst.f(), inst.e(), minus_a);
  int nonpositive = sturm_root_count(line, std::nullopt, Rational(0));
  int at_zero = line(Rational(0)) == 0 ? 1 : 0;
  int bad = closure ? nonpositive - at_zero : nonpositive;
  if (bad == 0)
    return Verdict::certified_yes(closure ? "in the closed hyperbolicity cone"
                                          : "in the open hyperbolicity cone");
  return Verdict::certified_no(
      line_witness(inst.e(), minus_a,
                   std::to_string(bad) + (closure ? " root(s) t < 0" : " root(s) t <= 0") +
                       " of f(t*e - a)"),
      "outside the hyperbolicity cone");
}

Polynomial wronskian_delta(const Polynomial& f, std::span<const Rational> e,
                           std::span<const Rational> a) {
  if (e.size() != f.nvars() || a.size() != f.nvars())
    throw std::invalid_argument("direction has wrong dimension");
  Polynomial de = directional_derivative(f, e);
  Polynomial da = directional_derivative(f, a);
  return de * da - f * directional_derivative(da, e);
}

Polynomial wronskian_delta(const Polynomial& f, std::span<const Polynomial> e,
                           std::span<const Polynomial> a) {
  Polynomial de = directional_derivative(f, e);
  Polynomial da = directional_derivative(f, a);
  return de * da - f * directional_derivative(da, e);
}

Polynomial delta_ij(const Polynomial& f, std::size_t i, std::size_t j) {
  if (i >= f.nvars() || j >= f.nvars()) throw std::out_of_range("variable index out of range");
  Polynomial fi = partial_derivative(f, i);
  Polynomial fj = partial_derivative(f, j);
  return fi * fj - f * partial_derivative(fi, j);
}

std::optional<RationalVector> find_repeated_factor_line(const HyperbolicityInstance& inst,
                                                        const SampleConfig& cfg) {
  auto samples = draw(cfg, inst.nvars(), kSquareFreeSalt);
  // One square-free restriction proves f square-free; a repeated factor
  // shows up on every line.
  auto good = first_failure(samples, cfg.threads, [&](const RationalVector& a) {
    UnivariatePolynomial p = restrict_to_line(inst.f(), inst.e(), a);
    return gcd(p, p.derivative()).degree() == 0;
  });
  if (good || samples.empty()) return std::nullopt;
  return samples.front();
}

Verdict interlaces(const HyperbolicityInstance& inst, const Polynomial& g, const SampleConfig& cfg,
                   unsigned sos_budget, const SdpSettings& settings, bool check_strict) {
  const Polynomial& f = inst.f();
  if (g.nvars() != f.nvars()) throw std::invalid_argument("g lives in a different ring");
  if (g.is_zero() || !g.is_homogeneous() || g.total_degree() != inst.degree() - 1)
    throw std::invalid_argument("g must be homogeneous of degree deg(f) - 1");
  if (auto line = find_repeated_factor_line(inst, cfg)) {
    std::string where;
    for (std::size_t i = 0; i < line->size(); ++i)
      where += (i ? "," : "") + to_string((*line)[i]);
    throw std::invalid_argument(
        "f has a repeated factor (f(t*e + a) is not square-free for a = " + where +
        "); write f = f1 * f2 with f2 square-free and V(f) = V(f2), then use "
        "Int(f, e) = f1 * Int(f2, e)");
  }

  Rational ge = evaluate(g, inst.e());
  if (ge <= 0) {
    Witness w{Witness::Kind::scalar};
    w.base = inst.e();
    w.value = ge;
    w.note = "g(e) <= 0";
    return Verdict::certified_no(std::move(w), "g(e) must be positive");
  }

  // Stage 1: lines.
  auto lines = draw(cfg, inst.nvars(), kLineSalt);
  bool strict_everywhere = true;
  for (const auto& a : lines) {
    UnivariatePolynomial fl = restrict_to_line(f, inst.e(), a);
    UnivariatePolynomial gl = restrict_to_line(g, inst.e(), a);
    Verdict v = roots_interlace(fl, gl, false);
    if (v.no())
      return Verdict::certified_no(line_witness(inst.e(), a, v.detail),
                                   "roots do not interlace on a sampled line");
    if (check_strict && strict_everywhere) strict_everywhere = roots_interlace(fl, gl, true).yes();
  }

  // Stage 2: points of W = D_e f * g - f * D_e g.
  Polynomial w = directional_derivative(f, inst.e()) * g - f * directional_derivative(g, inst.e());
  PointSampler sampler(cfg.seed ^ kPointSalt, cfg.coordinate_bound);
  for (unsigned k = 0; k < cfg.trials; ++k) {
    RationalVector p = sampler.next(inst.nvars());
    Rational value = evaluate(w, p);
    if (value < 0) {
      Witness wit{Witness::Kind::point};
      wit.direction = p;
      wit.value = value;
      wit.note = "D_e f * g - f * D_e g is negative here";
      return Verdict::certified_no(std::move(wit), "interlacing Wronskian takes a negative value");
    }
  }

  // Stage 3: certificate.
  Verdict sos = certify_sos(w, sos_budget, settings);
  std::string strict_note =
      check_strict ? std::string(strict_everywhere ? "; strict on all sampled lines (sampled)"
                                                   : "; not strict on some sampled line")
                   : std::string();
  if (sos.yes()) {
    Verdict v = Verdict::certified_yes("interlacing Wronskian is a sum of squares (" + sos.detail +
                                       ")" + strict_note);
    v.certificate = sos.certificate;
    return v;
  }
  return Verdict::undecided("sampling found no obstruction; no SOS certificate within budget (" +
                            sos.detail + ")" + strict_note);
}

Verdict int_cone_membership_by_derivative(const HyperbolicityInstance& inst,
                                          std::span<const Rational> a, const SampleConfig& cfg,
                                          unsigned sos_budget, const SdpSettings& settings) {
  if (a.size() != inst.nvars()) throw std::invalid_argument("point a has wrong dimension");
  bool all_zero = std::all_of(a.begin(), a.end(), [](const Rational& v) { return v == 0; });
  if (all_zero) return Verdict::certified_yes("the origin lies in the closed cone");
  Polynomial g = directional_derivative(inst.f(), a);
  if (g.is_zero())
    return Verdict::undecided("D_a f = 0 (a lies in the lineality space)");
  return interlaces(inst, g, cfg, sos_budget, settings);
}

}  // namespace hyper
