#include "hyper/detrep.hpp"

#include <algorithm>

#include "hyper/soscert.hpp"

namespace hyper {

PolynomialMatrix DeterminantalRep::pencil() const { return PolynomialMatrix::pencil(matrices); }

RationalMatrix DeterminantalRep::at(std::span<const Rational> point) const {
  if (point.size() != matrices.size()) throw std::invalid_argument("point has wrong dimension");
  std::size_t d = size();
  RationalMatrix out(d, d);
  for (std::size_t k = 0; k < matrices.size(); ++k)
    if (point[k] != 0) out = out + point[k] * matrices[k];
  return out;
}

namespace {

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

Verdict check_multiaffine_stable(const Polynomial& f, const SampleConfig& cfg, unsigned sos_budget,
                                 const SdpSettings& settings) {
  if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("f must be a nonzero form");
  if (!is_multiaffine(f)) throw std::invalid_argument("f is not multiaffine");
  std::size_t n = f.nvars();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Polynomial> deltas;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      pairs.push_back({i, j});
      deltas.push_back(delta_ij(f, i, j));
    }

  PointSampler sampler(cfg.seed, cfg.coordinate_bound);
  for (unsigned t = 0; t < cfg.trials; ++t) {
    RationalVector p = sampler.next(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      Rational v = evaluate(deltas[k], p);
      if (v < 0) {
        Witness w(Witness::Kind::point);
        w.direction = p;
        w.value = v;
        w.note = "Delta_" + pair_name(pairs[k].first, pairs[k].second) + " f < 0";
        return Verdict::certified_no(std::move(w), "not stable: some Delta_ij f takes a negative value");
      }
    }
  }

  std::string certified, open;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    std::string name = pair_name(pairs[k].first, pairs[k].second);
    bool ok = perfect_square_root(deltas[k]).has_value();
    if (!ok) ok = certify_sos(deltas[k], sos_budget, settings).yes();
    (ok ? certified : open) += (ok ? certified : open).empty() ? name : " " + name;
  }
  if (open.empty()) return Verdict::certified_yes("every Delta_ij f is a sum of squares");
  return Verdict::undecided("certified pairs: " + (certified.empty() ? "none" : certified) +
                            "; uncertified pairs: " + open);
}

DetrepBuild build_detrep_multiaffine(const Polynomial& f, std::span<const std::size_t> dvars,
                                     std::span<const Rational> e) {
  std::size_t n = f.nvars();
  if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("f must be a nonzero form");
  if (e.size() != n) throw std::invalid_argument("point e has wrong dimension");
  if (evaluate(f, e) == 0) throw std::invalid_argument("f(e) = 0");
  const std::size_t d = static_cast<std::size_t>(f.total_degree());
  for (auto v : dvars)
    if (v >= n) throw std::invalid_argument("variable index out of range");
  std::vector<std::size_t> cand(dvars.begin(), dvars.end());
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  if (cand.size() < d) throw std::invalid_argument("need at least deg(f) candidate variables");

  // First lexicographic d-subset meeting the preconditions.
  std::vector<std::size_t> vars;
  std::vector<bool> pick(cand.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < cand.size(); ++k)
      if (pick[k]) s.push_back(cand[k]);
    Monomial prod(n);
    bool affine = true;
    for (auto v : s) {
      prod[v] = 1;
      affine = affine && f.degree_in(v) <= 1;
    }
    if (affine && f.coefficient(prod) != 0) {
      vars = s;
      break;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  if (vars.empty())
    throw std::invalid_argument(
        "no choice of deg(f) variables with f affine in them and a nonzero product coefficient");

  DetrepBuild out;
  out.interlacer.f = f;
  out.interlacer.vars = vars;
  PolynomialMatrix a(d, d, n);
  for (std::size_t i = 0; i < d; ++i) a(i, i) = partial_derivative(f, vars[i]);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Polynomial delta = delta_ij(f, vars[i], vars[j]);
      auto root = perfect_square_root(delta);
      if (!root) {
        out.offending_pair = {vars[i], vars[j]};
        out.offending_delta = std::move(delta);
        out.detail = "NO_REP: Delta_" + pair_name(vars[i], vars[j]) + " f is not a square";
        out.interlacer.a = a;
        return out;
      }
      a(i, j) = *root;
      a(j, i) = std::move(*root);
    }

  // Orient row 1 arbitrarily, then the remaining entries against it.
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto minor = [&] { return a(0, 0) * a(i, j) - a(0, i) * a(0, j); };
      if (exact_divide(minor(), f)) continue;
      a(i, j) = -a(i, j);
      a(j, i) = a(i, j);
      if (!exact_divide(minor(), f))
        throw DetrepError("neither sign of a" + pair_name(vars[i], vars[j]) +
                          " makes a11*aij - a1i*a1j divisible by f; f may be reducible "
                          "(factor it and build each factor separately)");
    }
  for (std::size_t r1 = 0; r1 < d; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < d; ++r2)
      for (std::size_t c1 = 0; c1 < d; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < d; ++c2) {
          Polynomial m = a(r1, c1) * a(r2, c2) - a(r1, c2) * a(r2, c1);
          if (!exact_divide(m, f))
            throw DetrepError("2x2 minor rows " + pair_name(r1, r2) + " columns " +
                              pair_name(c1, c2) + " is not divisible by f; f may be reducible "
                              "(factor it and build each factor separately)");
        }
  out.interlacer.a = a;

  // Full rank: at p_k row k of A is zero off the diagonal.
  for (std::size_t k = 0; k < d; ++k) {
    RationalVector p(n, Rational(0));
    for (std::size_t j = 0; j < d; ++j)
      if (j != k) p[vars[j]] = 1;
    RationalMatrix ak = a.evaluate(p);
    for (std::size_t j = 0; j < d; ++j)
      if ((j == k) == (ak(k, j) == 0))
        throw DetrepError("A(p_" + std::to_string(k + 1) + ") does not have the expected pattern");
  }
  {
    PointSampler sampler(0x5eed, 7);
    bool nonsingular = false;
    for (int t = 0; t < 8 && !nonsingular; ++t) nonsingular = determinant(a.evaluate(sampler.next(n))) != 0;
    if (!nonsingular) throw DetrepError("A is singular at every spot-check point");
  }

  PolynomialMatrix mpoly(d, d, n);
  if (d == 1) {
    mpoly(0, 0) = f;
  } else {
    PolynomialMatrix adj = poly_adjugate(a);
    Polynomial fpow = f.pow(static_cast<unsigned>(d - 2));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        auto q = exact_divide(adj(i, j), fpow);
        if (!q) throw DetrepError("f^(d-2) does not divide adj(A)" + pair_name(i, j));
        if (!q->is_zero() && q->total_degree() != 1)
          throw DetrepError("adj(A)/f^(d-2) has a nonlinear entry");
        mpoly(i, j) = std::move(*q);
      }
  }

  DeterminantalRep rep;
  rep.e.assign(e.begin(), e.end());
  for (std::size_t v = 0; v < n; ++v) {
    Monomial xv(n);
    xv[v] = 1;
    RationalMatrix mv(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) mv(i, j) = mpoly(i, j).coefficient(xv);
    rep.matrices.push_back(std::move(mv));
  }
  Polynomial det = poly_determinant(rep.pencil());
  auto ratio = exact_divide(det, f);
  if (!ratio || !ratio->is_constant() || ratio->is_zero())
    throw DetrepError("det(M) is not a nonzero multiple of f");
  rep.gamma = ratio->coefficient(Monomial(n));

  RationalMatrix me = rep.at(rep.e);
  if (!is_positive_definite(me)) {
    if (!is_positive_definite(Rational(-1) * me)) throw DetrepError("M(e) is not definite");
    for (auto& m : rep.matrices) m = Rational(-1) * m;
    if (d % 2 == 1) rep.gamma = -rep.gamma;
  }
  out.detail = "built a " + std::to_string(d) + "x" + std::to_string(d) +
               " representation on variables " + [&] {
                 std::string s;
                 for (auto v : vars) s += (s.empty() ? "" : ",") + std::to_string(v + 1);
                 return s;
               }();
  out.rep = std::move(rep);
  return out;
}

bool verify_detrep(const DeterminantalRep& rep, const Polynomial& f, std::string* reason) {
  auto fail = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  std::size_t d = rep.size();
  if (rep.nvars() != f.nvars()) return fail("number of matrices differs from the number of variables");
  if (rep.e.size() != f.nvars()) return fail("point e has wrong dimension");
  for (const auto& m : rep.matrices)
    if (m.rows() != d || m.cols() != d || !m.is_symmetric()) return fail("matrices must be symmetric of equal size");
  if (rep.gamma == 0) return fail("gamma is zero");
  if (d == 0) return fail("empty representation");
  if (poly_determinant(rep.pencil()) != rep.gamma * f) return fail("det(M(x)) differs from gamma * f");
  if (!is_positive_definite(rep.at(rep.e))) return fail("M(e) is not positive definite");
  return true;
}

Polynomial interlacer_from_detrep(const DeterminantalRep& rep, const RationalMatrix& E) {
  std::size_t d = rep.size();
  if (E.rows() != d || E.cols() != d || !E.is_symmetric())
    throw std::invalid_argument("E must be symmetric of the representation's size");
  if (!is_positive_semidefinite(E)) throw std::invalid_argument("E is not positive semidefinite");
  return (E * poly_adjugate(rep.pencil())).trace();
}

bool hesse_identity_oracle(std::size_t size, std::span<const Rational> alpha,
                           std::span<const Rational> beta, std::span<const Rational> gamma,
                           std::span<const Rational> delta, std::string* failure) {
  if (size == 0 || size > 4) throw std::invalid_argument("size must be between 1 and 4");
  if (alpha.size() != size || beta.size() != size || gamma.size() != size || delta.size() != size)
    throw std::invalid_argument("vectors must have length size");
  const std::size_t nv = size * size;
  auto var = [&](std::size_t i, std::size_t j) { return Polynomial::variable(nv, i * size + j); };
  auto cst = [&](const Rational& c) { return Polynomial::constant(nv, c); };

  PolynomialMatrix x(size, size, nv);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) x(i, j) = var(i, j);

  auto bordered = [&](std::vector<std::span<const Rational>> cols,
                      std::vector<std::span<const Rational>> rows) {
    std::size_t k = cols.size();
    PolynomialMatrix b(size + k, size + k, nv);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) b(i, j) = x(i, j);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t i = 0; i < size; ++i) {
        b(i, size + c) = cst(cols[c][i]);
        b(size + c, i) = cst(rows[c][i]);
      }
    return poly_determinant_cofactor(b);
  };
  // Direction matrix u w^T as a point in the space of X.
  auto outer = [&](std::span<const Rational> u, std::span<const Rational> w) {
    RationalVector dir(nv);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) dir[i * size + j] = u[i] * w[j];
    return dir;
  };
  auto fail = [&](const char* what) {
    if (failure) *failure = what;
    return false;
  };

  Polynomial det = poly_determinant_cofactor(x);
  Polynomial ba = bordered({beta}, {alpha});
  Polynomial dc = bordered({delta}, {gamma});
  Polynomial da = bordered({delta}, {alpha});
  Polynomial bc = bordered({beta}, {gamma});
  Polynomial big = bordered({beta, delta}, {alpha, gamma});
  if (ba * dc - da * bc != det * big) return fail("bordered determinant identity");

  Polynomial d1 = directional_derivative(det, outer(beta, alpha));
  PolynomialMatrix adj = poly_adjugate(x);
  Polynomial form(nv);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (alpha[i] != 0 && beta[j] != 0) form += (alpha[i] * beta[j]) * adj(i, j);
  if (d1 != form) return fail("first derivative equals a^T adj(X) b");
  if (d1 != -ba) return fail("first derivative equals minus the bordered determinant");

  Polynomial d2 = directional_derivative(d1, outer(delta, gamma));
  if (d2 != big) return fail("second derivative equals the doubly bordered determinant");
  return true;
}

}  // namespace hyper
