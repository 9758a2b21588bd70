#include "hyper/soscert.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hyper {

namespace {

void require_even_form(const Polynomial& F) {
  if (!F.is_homogeneous()) throw std::invalid_argument("target must be homogeneous");
  if (F.total_degree() % 2 != 0) throw std::invalid_argument("target must have even degree");
}

unsigned half_degree(const Polynomial& F) {
  return F.is_zero() ? 0u : static_cast<unsigned>(F.total_degree() / 2);
}

std::vector<Polynomial> as_polynomials(std::span<const Monomial> basis, std::size_t nvars) {
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& m : basis) {
    if (m.nvars() != nvars) throw std::invalid_argument("basis monomial has wrong ring");
    out.push_back(Polynomial::term(m, 1));
  }
  return out;
}

struct Pair {
  std::size_t i, j;
};

std::vector<Pair> upper_pairs(std::size_t n) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.push_back({i, j});
  return out;
}

// Symmetric matrix with the given upper-triangle values.
RationalMatrix symmetric_from(std::size_t n, const std::vector<Pair>& pairs,
                              std::span<const Rational> values) {
  RationalMatrix g(n, n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    g(pairs[k].i, pairs[k].j) = values[k];
    g(pairs[k].j, pairs[k].i) = values[k];
  }
  return g;
}

// Monomial systems without a modulus decouple by the product monomial.
GramSystem assemble_classes(const Polynomial& F, std::span<const Monomial> basis) {
  GramSystem sys;
  sys.target = F;
  sys.monomial_basis.assign(basis.begin(), basis.end());
  sys.basis = as_polynomials(basis, F.nvars());
  std::size_t n = basis.size();
  sys.particular = RationalMatrix(n, n);
  sys.particular_multiplier = Polynomial(F.nvars());

  std::map<Monomial, std::vector<Pair>, std::greater<>> classes;
  for (const auto& p : upper_pairs(n)) classes[basis[p.i] * basis[p.j]].push_back(p);
  for (const auto& [m, c] : F.terms()) {
    if (!classes.count(m)) {
      sys.consistent = false;
      return sys;
    }
  }
  for (const auto& [m, pairs] : classes) {
    Rational c = F.coefficient(m);
    std::size_t ordered = 0;
    for (const auto& p : pairs) ordered += p.i == p.j ? 1 : 2;
    // Minimum-norm point: spread c evenly over the ordered entries.
    Rational share = c / Rational(static_cast<long>(ordered));
    for (const auto& p : pairs) {
      sys.particular(p.i, p.j) = share;
      sys.particular(p.j, p.i) = share;
    }
    const Pair& first = pairs.front();
    Rational w1 = first.i == first.j ? 1 : 2;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& p = pairs[k];
      Rational wk = p.i == p.j ? 1 : 2;
      RationalMatrix b(n, n);
      b(first.i, first.j) = wk;
      b(first.j, first.i) = wk;
      b(p.i, p.j) = -w1;
      b(p.j, p.i) = -w1;
      sys.nullspace.push_back(std::move(b));
      sys.nullspace_multiplier.emplace_back(F.nvars());
    }
  }
  return sys;
}

// Coefficient matching solved by exact elimination.
GramSystem assemble_generic(const Polynomial& F, std::vector<Polynomial> basis,
                            const std::optional<Polynomial>& modulus) {
  std::size_t nv = F.nvars();
  GramSystem sys;
  sys.target = F;
  sys.basis = std::move(basis);
  sys.modulus = modulus;
  std::size_t n = sys.basis.size();
  auto pairs = upper_pairs(n);

  std::vector<Polynomial> columns;
  for (const auto& p : pairs) {
    Polynomial prod = sys.basis[p.i] * sys.basis[p.j];
    if (p.i != p.j) prod *= Rational(2);
    columns.push_back(std::move(prod));
  }
  if (modulus) {
    int pdeg = F.total_degree() - modulus->total_degree();
    if (pdeg >= 0)
      sys.multiplier_monomials = homogeneous_monomials(nv, static_cast<unsigned>(pdeg));
    for (const auto& m : sys.multiplier_monomials)
      columns.push_back(Polynomial::term(m, 1) * *modulus);
  }

  std::map<Monomial, std::size_t, std::greater<>> row_of;
  for (const auto& [m, c] : F.terms()) row_of.emplace(m, 0);
  for (const auto& col : columns)
    for (const auto& [m, c] : col.terms()) row_of.emplace(m, 0);
  std::size_t r = 0;
  for (auto& [m, idx] : row_of) idx = r++;

  RationalMatrix a(row_of.size(), columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (const auto& [m, c] : columns[k].terms()) a(row_of[m], k) = c;
  RationalVector rhs(row_of.size(), Rational(0));
  for (const auto& [m, c] : F.terms()) rhs[row_of[m]] = c;

  auto split = [&](std::span<const Rational> x, RationalMatrix& g, Polynomial& p) {
    g = symmetric_from(n, pairs, x.subspan(0, pairs.size()));
    p = Polynomial(nv);
    for (std::size_t k = 0; k < sys.multiplier_monomials.size(); ++k)
      p.add_term(sys.multiplier_monomials[k], x[pairs.size() + k]);
  };

  auto solution = solve_linear(a, rhs);
  if (!solution) {
    sys.consistent = false;
    sys.particular = RationalMatrix(n, n);
    sys.particular_multiplier = Polynomial(nv);
    return sys;
  }
  split(*solution, sys.particular, sys.particular_multiplier);
  for (const auto& v : nullspace(a)) {
    RationalMatrix g;
    Polynomial p;
    split(v, g, p);
    sys.nullspace.push_back(std::move(g));
    sys.nullspace_multiplier.push_back(std::move(p));
  }
  bool all_monomial = std::all_of(sys.basis.begin(), sys.basis.end(), [](const Polynomial& b) {
    return b.size() == 1 && b.terms().begin()->second == 1;
  });
  if (all_monomial)
    for (const auto& b : sys.basis) sys.monomial_basis.push_back(b.leading_monomial());
  return sys;
}

}  // namespace

RationalMatrix GramSystem::gram_at(std::span<const Rational> lambda) const {
  if (lambda.size() != nullspace.size()) throw std::invalid_argument("lambda has wrong length");
  RationalMatrix g = particular;
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (lambda[k] != 0) g = g + lambda[k] * nullspace[k];
  return g;
}

Polynomial GramSystem::multiplier_at(std::span<const Rational> lambda) const {
  if (lambda.size() != nullspace.size()) throw std::invalid_argument("lambda has wrong length");
  Polynomial p = particular_multiplier;
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (lambda[k] != 0) p += lambda[k] * nullspace_multiplier[k];
  return p;
}

Polynomial GramSystem::represented(const RationalMatrix& g, const Polynomial& multiplier) const {
  Polynomial out(target.nvars());
  std::size_t n = basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(i, j) != 0) out += g(i, j) * (basis[i] * basis[j]);
  if (modulus) out += multiplier * *modulus;
  return out;
}

bool GramSystem::contains(const RationalMatrix& g) const {
  if (!consistent || g.rows() != size() || !g.is_symmetric()) return false;
  if (!modulus) return represented(g, Polynomial(target.nvars())) == target;
  // Solve for lambda from the Gram part, then check the multiplier too.
  std::size_t n = size();
  auto pairs = upper_pairs(n);
  RationalMatrix a(pairs.size(), nullspace.size());
  RationalVector rhs(pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    for (std::size_t k = 0; k < nullspace.size(); ++k) a(r, k) = nullspace[k](pairs[r].i, pairs[r].j);
    rhs[r] = g(pairs[r].i, pairs[r].j) - particular(pairs[r].i, pairs[r].j);
  }
  auto lambda = solve_linear(a, rhs);
  return lambda && gram_at(*lambda) == g;
}

GramSystem assemble_gram_system(const Polynomial& F) {
  require_even_form(F);
  auto basis = homogeneous_monomials(F.nvars(), half_degree(F));
  return assemble_classes(F, basis);
}

GramSystem assemble_gram_system(const Polynomial& F, std::span<const Monomial> basis) {
  require_even_form(F);
  for (const auto& m : basis)
    if (!F.is_zero() && m.degree() != half_degree(F))
      throw std::invalid_argument("basis monomial has the wrong degree");
  return assemble_classes(F, basis);
}

GramSystem assemble_gram_system(const Polynomial& F, std::span<const Polynomial> basis) {
  require_even_form(F);
  for (const auto& b : basis) {
    if (b.nvars() != F.nvars()) throw std::invalid_argument("basis polynomial has wrong ring");
    if (b.is_zero() || !b.is_homogeneous() ||
        (!F.is_zero() && b.total_degree() != static_cast<int>(half_degree(F))))
      throw std::invalid_argument("basis polynomials must be forms of half the target degree");
  }
  return assemble_generic(F, std::vector<Polynomial>(basis.begin(), basis.end()), std::nullopt);
}

GramSystem assemble_gram_system_mod(const Polynomial& F, const Polynomial& f) {
  require_even_form(F);
  if (f.nvars() != F.nvars()) throw std::invalid_argument("modulus lives in a different ring");
  if (!f.is_homogeneous() || f.total_degree() < 1)
    throw std::invalid_argument("modulus must be a nonconstant form");
  auto basis = as_polynomials(homogeneous_monomials(F.nvars(), half_degree(F)), F.nvars());
  return assemble_generic(F, std::move(basis), f);
}

std::vector<Monomial> reduced_monomial_basis(const Polynomial& F) {
  require_even_form(F);
  std::size_t nv = F.nvars();
  auto full = homogeneous_monomials(nv, half_degree(F));
  if (F.is_zero()) return {};

  // Functionals as coefficient vectors in {-1, 0, 1}.
  std::vector<std::vector<int>> functionals;
  for (std::size_t i = 0; i < nv; ++i) {
    std::vector<int> l(nv, 0);
    l[i] = 1;
    functionals.push_back(l);
    for (std::size_t j = i + 1; j < nv; ++j) {
      l[j] = 1;
      functionals.push_back(l);
      l[j] = -1;
      functionals.push_back(l);
      l[j] = 0;
    }
  }
  auto apply = [](const std::vector<int>& l, const Monomial& m) {
    long s = 0;
    for (std::size_t k = 0; k < l.size(); ++k) s += l[k] * static_cast<long>(m[k]);
    return s;
  };
  std::vector<std::pair<long, long>> range;
  for (const auto& l : functionals) {
    long lo = LONG_MAX, hi = LONG_MIN;
    for (const auto& [m, c] : F.terms()) {
      long v = apply(l, m);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    range.push_back({lo, hi});
  }

  // 2*l(beta) must lie in [lo, hi] for each functional.
  std::vector<Monomial> kept;
  for (const auto& m : full) {
    bool inside = true;
    for (std::size_t k = 0; k < functionals.size() && inside; ++k) {
      long v = 2 * apply(functionals[k], m);
      inside = v >= range[k].first && v <= range[k].second;
    }
    if (inside) kept.push_back(m);
  }
  if (4 * kept.size() > 3 * full.size()) kept = full;

  // A square term that no other pair can produce and that is absent from F
  // forces a zero diagonal, hence a zero row.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      Monomial sq = kept[k] * kept[k];
      if (F.coefficient(sq) != 0) continue;
      bool other = false;
      for (std::size_t i = 0; i < kept.size() && !other; ++i)
        for (std::size_t j = i + 1; j < kept.size() && !other; ++j)
          other = kept[i] * kept[j] == sq;
      if (!other) {
        kept.erase(kept.begin() + static_cast<long>(k));
        changed = true;
        break;
      }
    }
  }
  return kept;
}

// ------------------------------------------------------------ certificates

Polynomial sphere_power(std::size_t nvars, std::span<const std::size_t> vars, unsigned n) {
  Polynomial s(nvars);
  for (auto v : vars) {
    Monomial m(nvars);
    m[v] = 2;
    s.add_term(m, 1);
  }
  return s.pow(n);
}

bool verify_certificate(const SosCertificate& cert, std::string* reason) {
  auto fail = [&](const char* why) {
    if (reason) *reason = why;
    return false;
  };
  std::size_t n = cert.basis.size();
  const auto& ldl = cert.ldl;
  if (cert.gram.rows() != n || cert.gram.cols() != n) return fail("gram size mismatch");
  if (!cert.gram.is_symmetric()) return fail("gram not symmetric");
  if (ldl.perm.size() != n || ldl.diagonal.size() != n || ldl.lower.rows() != n)
    return fail("ldl size mismatch");
  std::vector<bool> seen(n, false);
  for (auto p : ldl.perm) {
    if (p >= n || seen[p]) return fail("ldl permutation invalid");
    seen[p] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (ldl.diagonal[i] < 0) return fail("negative pivot");
    if (ldl.lower(i, i) != 1) return fail("L is not unit lower triangular");
    for (std::size_t j = i + 1; j < n; ++j)
      if (ldl.lower(i, j) != 0) return fail("L is not unit lower triangular");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k <= std::min(i, j); ++k)
        s += ldl.lower(i, k) * ldl.diagonal[k] * ldl.lower(j, k);
      if (s != cert.gram(ldl.perm[i], ldl.perm[j])) return fail("L D L^T does not reproduce gram");
    }

  Polynomial sum(cert.nvars);
  for (std::size_t k = 0; k < n; ++k) {
    if (ldl.diagonal[k] == 0) continue;
    Polynomial q(cert.nvars);
    for (std::size_t j = k; j < n; ++j)
      if (ldl.lower(j, k) != 0) q += ldl.lower(j, k) * cert.basis[ldl.perm[j]];
    sum += ldl.diagonal[k] * (q * q);
  }
  Polynomial expected =
      sphere_power(cert.nvars, cert.sphere_variables, cert.denominator_power) * cert.target;
  if (cert.multiplier) {
    if (!cert.modulus) return fail("multiplier without modulus");
    expected -= *cert.multiplier * *cert.modulus;
  }
  if (sum != expected) return fail("sum of squares does not match the target");
  return true;
}

SosCertificate lift_certificate(const SosCertificate& cert) {
  SosCertificate out = cert;
  std::size_t n = cert.basis.size();
  std::size_t k = cert.sphere_variables.size();
  out.basis.clear();
  for (auto v : cert.sphere_variables)
    for (const auto& b : cert.basis) out.basis.push_back(Polynomial::variable(cert.nvars, v) * b);
  out.gram = RationalMatrix(n * k, n * k);
  for (std::size_t blk = 0; blk < k; ++blk)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.gram(blk * n + i, blk * n + j) = cert.gram(i, j);
  out.ldl = ldl_decompose(out.gram);
  out.denominator_power = cert.denominator_power + 1;
  if (cert.multiplier) {
    Polynomial s = sphere_power(cert.nvars, cert.sphere_variables, 1);
    out.multiplier = s * *cert.multiplier;
  }
  return out;
}

namespace {

struct Rounded {
  RationalMatrix gram;
  Polynomial multiplier;
};

// Exact orthogonal projection of a rational symmetric matrix onto the family.
std::optional<Rounded> project_exact(const GramSystem& sys, const RationalMatrix& g,
                                     std::span<const double> lambda_hint, const Integer& bound) {
  std::size_t n = sys.size();
  std::size_t nv = sys.target.nvars();
  if (!sys.modulus && !sys.monomial_basis.empty()) {
    std::map<Monomial, std::vector<std::pair<std::size_t, std::size_t>>, std::greater<>> classes;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        classes[sys.monomial_basis[i] * sys.monomial_basis[j]].push_back({i, j});
    RationalMatrix out = g;
    for (const auto& [m, entries] : classes) {
      Rational s = 0;
      for (auto [i, j] : entries) s += g(i, j);
      Rational delta = (sys.target.coefficient(m) - s) / Rational(static_cast<long>(entries.size()));
      if (delta != 0)
        for (auto [i, j] : entries) out(i, j) += delta;
    }
    return Rounded{std::move(out), Polynomial(nv)};
  }

  std::size_t m = sys.dimension();
  RationalVector lambda(m);
  constexpr std::size_t kExactLimit = 80;
  if (m <= kExactLimit) {
    RationalMatrix normal(m, m);
    RationalVector rhs(m, Rational(0));
    RationalMatrix diff = g - sys.particular;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a; b < m; ++b) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (sys.nullspace[a](i, j) != 0) s += sys.nullspace[a](i, j) * sys.nullspace[b](i, j);
        normal(a, b) = s;
        normal(b, a) = s;
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (sys.nullspace[a](i, j) != 0) rhs[a] += sys.nullspace[a](i, j) * diff(i, j);
    }
    auto sol = solve_linear(normal, rhs);
    if (!sol) return std::nullopt;
    lambda = *sol;
  } else {
    for (std::size_t k = 0; k < m; ++k) lambda[k] = approximate(lambda_hint[k], bound);
  }
  return Rounded{sys.gram_at(lambda), sys.multiplier_at(lambda)};
}

Verdict success(const GramSystem& sys, RationalMatrix gram, LdlDecomposition ldl,
                Polynomial multiplier, std::string detail) {
  auto cert = std::make_shared<SosCertificate>();
  cert->nvars = sys.target.nvars();
  cert->target = sys.target;
  cert->basis = sys.basis;
  cert->gram = std::move(gram);
  cert->ldl = std::move(ldl);
  if (sys.modulus) {
    cert->multiplier = std::move(multiplier);
    cert->modulus = sys.modulus;
  }
  Verdict v = Verdict::certified_yes(std::move(detail));
  v.certificate = std::move(cert);
  return v;
}

Verdict not_psd(const RationalMatrix& g, const LdlDecomposition& ldl) {
  Witness w{Witness::Kind::vector};
  w.direction = ldl.witness;
  w.value = quadratic_form(g, ldl.witness);
  w.note = "y^T G y < 0 for the unique Gram matrix G";
  return Verdict::certified_no(std::move(w), "unique Gram matrix is not positive semidefinite (" +
                                                 ldl.reason + ")");
}

}  // namespace

Verdict certify_gram_system(const GramSystem& sys, const SdpSettings& settings) {
  std::size_t nv = sys.target.nvars();
  if (!sys.consistent) {
    Witness w{Witness::Kind::scalar};
    w.note = "coefficient matching has no solution over the admissible basis";
    return Verdict::certified_no(std::move(w), "no Gram matrix exists");
  }
  if (sys.size() == 0) return success(sys, RationalMatrix(), ldl_decompose(RationalMatrix()),
                                      Polynomial(nv), "zero form");
  if (sys.unique()) {
    auto ldl = ldl_decompose(sys.particular);
    if (ldl.psd)
      return success(sys, sys.particular, std::move(ldl), sys.particular_multiplier,
                     "unique Gram matrix is positive semidefinite");
    return not_psd(sys.particular, ldl);
  }
  if (auto ldl = ldl_decompose(sys.particular); ldl.psd)
    return success(sys, sys.particular, std::move(ldl), sys.particular_multiplier,
                   "particular Gram matrix is positive semidefinite");

  SdpResult numeric = solve_sdp(sys, settings);
  if (!numeric.feasible)
    return Verdict::undecided("INFEASIBLE_NUMERIC: " + numeric.diagnostics);

  Integer bound = settings.rounding_denominator_bound;
  std::size_t n = sys.size();
  for (int attempt = 0; attempt < 4; ++attempt, bound *= 16) {
    RationalMatrix rounded(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational q = approximate(0.5 * (numeric.gram[i][j] + numeric.gram[j][i]), bound);
        rounded(i, j) = q;
        rounded(j, i) = q;
      }
    auto projected = project_exact(sys, rounded, numeric.lambda, bound);
    if (!projected) continue;
    auto ldl = ldl_decompose(projected->gram);
    if (ldl.psd)
      return success(sys, std::move(projected->gram), std::move(ldl),
                     std::move(projected->multiplier),
                     "rounded numeric Gram matrix (denominators <= " + bound.get_str() + ")");
  }
  return Verdict::undecided("numeric Gram matrix found but rounding did not give an exact certificate");
}

Verdict certify_sos(const Polynomial& F, unsigned max_power, const SdpSettings& settings) {
  require_even_form(F);
  std::size_t nv = F.nvars();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < nv; ++i)
    if (F.involves(i)) vars.push_back(i);

  std::optional<Verdict> refuted;
  std::string last;
  Polynomial sphere = sphere_power(nv, vars, 1);
  Polynomial scaled = F;
  for (unsigned N = 0; N <= max_power; ++N) {
    if (N > 0) scaled = sphere * scaled;
    GramSystem sys = assemble_gram_system(scaled, reduced_monomial_basis(scaled));
    Verdict v = certify_gram_system(sys, settings);
    if (v.yes()) {
      auto cert = std::make_shared<SosCertificate>(*v.certificate);
      cert->target = F;
      cert->denominator_power = N;
      cert->sphere_variables = vars;
      v.certificate = std::move(cert);
      v.detail = "N=" + std::to_string(N) + ": " + v.detail;
      return v;
    }
    if (v.no()) {
      // (sum x_i^2)^N F not SOS implies F not SOS.
      if (!refuted) {
        refuted = v;
        refuted->detail = "not a sum of squares (N=" + std::to_string(N) + "): " + v.detail;
      }
      if (N == 0 && max_power == 0) break;
    } else {
      last = v.detail;
    }
  }
  if (refuted) return *refuted;
  return Verdict::undecided("no certificate for N <= " + std::to_string(max_power) + " (" + last +
                            ")");
}

Verdict certify_sos_mod_f(const Polynomial& F, const Polynomial& f, const SdpSettings& settings) {
  if (!f.is_homogeneous() || f.total_degree() < 2)
    throw std::invalid_argument("modulus must be a form of degree at least 2");
  if (!F.is_homogeneous() || F.is_zero() || F.total_degree() != 2 * f.total_degree() - 2)
    throw std::invalid_argument("target must be a form of degree 2*deg(f) - 2");
  GramSystem sys = assemble_gram_system_mod(F, f);
  Verdict v = certify_gram_system(sys, settings);
  if (v.no() && !sys.unique()) return Verdict::undecided(v.detail);
  return v;
}

Verdict sos_cone_membership(const HyperbolicityInstance& inst, std::span<const Rational> a,
                            unsigned max_power, const SdpSettings& settings) {
  Polynomial delta = wronskian_delta(inst.f(), inst.e(), a);
  Verdict v = certify_sos(delta, max_power, settings);
  if (v.no()) return Verdict::undecided("SOS_REFUTED: " + v.detail);
  if (v.yes()) v.detail = "Delta_{e,a} f is a sum of squares (" + v.detail + ")";
  return v;
}

}  // namespace hyper
