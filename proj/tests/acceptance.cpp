// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hyper/corpus.hpp"
#include "hyper/detrep.hpp"
#include "hyper/hypercone.hpp"
#include "hyper/realroots.hpp"
#include "hyper/soscert.hpp"
#include "support.hpp"

using namespace hyper;
using namespace testing_support;

namespace {

// Wall-clock limits in seconds.
constexpr double kLorentzLimit = 1.0;
constexpr double kCubicLimit = 30.0;
constexpr double kVamosLimit = 60.0;
constexpr double kDetrepLimit = 30.0;
constexpr int kIdentityCases = 100;
constexpr int kConsistencyCases = 50;
const SdpSettings kSdp{.max_iterations = 6000, .feasibility_tolerance = 1e-9,
                       .rounding_denominator_bound = 1L << 12, .random_seed = 42};

struct Outcome {
  bool ok = true;
  std::string note;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

RationalVector unit(std::size_t n, std::size_t i) {
  RationalVector v(n, 0);
  v[i] = 1;
  return v;
}

RationalMatrix outer(const RationalVector& u, const RationalVector& v) {
  RationalMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

Polynomial bilinear(const RationalVector& u, const PolynomialMatrix& a, const RationalVector& v) {
  Polynomial s(a.nvars());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (u[i] != 0 && v[j] != 0) s += (u[i] * v[j]) * a(i, j);
  return s;
}

std::vector<std::size_t> all_vars(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// 1. Wronskian of x1^2 - sum x_j^2 at e = e_1 with a symbolic direction.
Outcome lorentz_wronskian() {
  Outcome out;
  for (std::size_t n = 2; n <= 6; ++n) {
    std::size_t nv = 2 * n;  // x1..xn, a1..an
    Polynomial f = embed(gen_lorentz(n), nv);
    std::vector<Polynomial> e, a;
    for (std::size_t i = 0; i < nv; ++i) {
      e.push_back(i == 0 ? Polynomial::constant(nv, 1) : Polynomial(nv));
      a.push_back(i < n ? Polynomial::variable(nv, n + i) : Polynomial(nv));
    }
    auto x = [&](std::size_t i) { return Polynomial::variable(nv, i); };
    auto av = [&](std::size_t i) { return Polynomial::variable(nv, n + i); };
    Polynomial expected = av(0) * x(0).pow(2);
    for (std::size_t j = 1; j < n; ++j)
      expected += Rational(-2) * av(j) * x(0) * x(j) + av(0) * x(j).pow(2);
    expected *= Rational(2);
    out.check(wronskian_delta(f, e, a) == expected, "expansion differs for n=" + std::to_string(n));
  }
  return out;
}

// 2. Gram matrix of (1/2) Delta_{e,a} f for the Lorentz form.
Outcome lorentz_gram() {
  Outcome out;
  Random rnd(2);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int k = 0; k < 10; ++k) {
      RationalVector a = k == 0 && n == 3 ? RationalVector{2, 1, 0} : rnd.vector(n);
      GramSystem sys = assemble_gram_system(Rational(1, 2) * wronskian_delta(gen_lorentz(n), unit(n, 0), a));
      RationalMatrix g(n, n);
      for (std::size_t i = 0; i < n; ++i) g(i, i) = a[0];
      for (std::size_t j = 1; j < n; ++j) g(0, j) = g(j, 0) = -a[j];
      out.check(sys.contains(g), "family misses the expected matrix");
    }
  }
  HyperbolicityInstance inst(gen_lorentz(3), unit(3, 0));
  Polynomial delta = wronskian_delta(inst.f(), inst.e(), RationalVector{2, 1, 0});
  Verdict v = certify_sos(delta, 0, kSdp);
  out.check(v.yes(), "certify_sos: " + v.detail);
  if (v.yes()) {
    out.check(v.certificate->denominator_power == 0, "N != 0");
    out.check(verify_certificate(*v.certificate), "certificate does not verify");
  }
  return out;
}

// 3. The cubic (x - y)(x + y)(x + 2y) - x z^2 at e = (1, 0, 0).
Outcome cubic_example() {
  Outcome out;
  // Ring x, y, z, a, b, c, g1..g6.
  const std::size_t nv = 12;
  std::vector<std::string> names{"x", "y", "z", "a", "b", "c", "g1", "g2", "g3", "g4", "g5", "g6"};
  auto V = [&](const char* s) { return P(s, names); };
  Polynomial f = embed(gen_cubic_example(), nv);
  std::vector<Polynomial> e(nv, Polynomial(nv)), dir(nv, Polynomial(nv));
  e[0] = Polynomial::constant(nv, 1);
  dir[0] = V("a");
  dir[1] = V("b");
  dir[2] = V("c");
  Polynomial delta = wronskian_delta(f, e, dir);
  const char* entries[6][6] = {
      {"3*a + 2*b", "g1", "g2", "4*a - 2*b", "-2*c", "g3"},
      {"g1", "9*a + 2*b", "g4", "4*a - 8*b", "g5", "-2*c"},
      {"g2", "g4", "a", "g6", "0", "0"},
      {"4*a - 2*b", "4*a - 8*b", "g6", "8*a - 20*b - 2*g1", "-2*c - g3", "-g5"},
      {"-2*c", "g5", "0", "-2*c - g3", "2*b - 2*g2", "-2*a - g6"},
      {"g3", "-2*c", "0", "-g5", "-2*a - g6", "2*a + 6*b - 2*g4"}};
  std::vector<Polynomial> v{V("x^2"), V("y^2"), V("z^2"), V("x*y"), V("x*z"), V("y*z")};
  Polynomial vgv(nv);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) vgv += V(entries[i][j]) * v[i] * v[j];
  out.check(vgv == delta, "v^T G v != Delta with symbolic a, b, c, g");

  std::vector<Monomial> basis;
  for (const auto& b : v) basis.push_back(Monomial(std::vector<unsigned>(
                              b.leading_monomial().exponents().begin(),
                              b.leading_monomial().exponents().begin() + 3)));
  Random rnd(3);
  for (int k = 0; k < 5; ++k) {
    RationalVector abc = rnd.vector(3);
    GramSystem sys = assemble_gram_system(
        wronskian_delta(gen_cubic_example(), RationalVector{1, 0, 0}, abc), basis);
    out.check(sys.dimension() == 6, "family does not have 6 parameters");
    // The parametrized matrix at g = 0 and along each g_k lies in the family
    // and spans it.
    auto at = [&](const RationalVector& g) {
      RationalVector point{0, 0, 0, abc[0], abc[1], abc[2]};
      point.insert(point.end(), g.begin(), g.end());
      RationalMatrix m(6, 6);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) m(i, j) = evaluate(V(entries[i][j]), point);
      return m;
    };
    RationalMatrix g0 = at(RationalVector(6, 0));
    RationalMatrix spans(6, 36);
    for (std::size_t t = 0; t < 6; ++t) {
      RationalMatrix gt = at(unit(6, t));
      out.check(sys.contains(gt), "parametrized matrix not in the family");
      RationalMatrix d = gt - g0;
      for (std::size_t q = 0; q < 36; ++q) spans(t, q) = d(q / 6, q % 6);
    }
    out.check(sys.contains(g0), "parametrized matrix not in the family");
    out.check(rank(spans) == 6, "g1..g6 do not span the family");
  }
  HyperbolicityInstance inst(gen_cubic_example(), RationalVector{1, 0, 0});
  Verdict m = sos_cone_membership(inst, RationalVector{1, 0, 0}, 0, kSdp);
  out.check(m.yes(), "sos_cone_membership: " + m.detail);
  if (m.yes()) {
    out.check(m.certificate->denominator_power == 0, "N != 0");
    out.check(verify_certificate(*m.certificate), "certificate does not verify");
  }
  return out;
}

// 4. Vamos restriction.
Outcome vamos() {
  Outcome out;
  const char* reference =
      "x^4*y^2 + 2*x^3*y^3 + x^2*y^4 + x^4*y*z + 5*x^3*y^2*z + 6*x^2*y^3*z + 2*x*y^4*z + x^4*z^2"
      " + 5*x^3*y*z^2 + 10*x^2*y^2*z^2 + 6*x*y^3*z^2 + y^4*z^2 + 2*x^3*z^3 + 6*x^2*y*z^3"
      " + 6*x*y^2*z^3 + 2*y^3*z^3 + x^2*z^4 + 2*x*y*z^4 + y^2*z^4";
  VamosReport r = vamos_reproduction();
  Polynomial W = P(reference, xyz());
  out.check(W.size() == 19, "reference quartic does not have 19 terms");
  out.check(r.W == W, "W differs from the reference quartic");
  RationalMatrix G = RationalMatrix::from_rows(
      {{1, frac(1, 2), 1, 2}, {frac(1, 2), 1, 1, 2}, {1, 1, 1, 2}, {2, 2, 2, 5}});
  out.check(r.gram == G, "Gram matrix differs");
  out.check(r.gram_det == frac(-1, 4), "det(G) = " + to_string(r.gram_det));
  out.check(leibniz_det(G) == frac(-1, 4), "det oracle");
  out.check(r.conclusion.no(), "verdict is " + to_string(r.conclusion.status));
  return out;
}

// 5. Delta_ij of elementary symmetric polynomials.
Outcome elementary_symmetric() {
  Outcome out;
  for (std::size_t n = 3; n <= 5; ++n) {
    Polynomial e1 = gen_elementary_symmetric(n, 1), en = gen_elementary_symmetric(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        out.check(delta_ij(e1, i, j) == Polynomial::constant(n, 1), "Delta_ij e_1 != 1");
        out.check(delta_ij(en, i, j).is_zero(), "Delta_ij e_n != 0");
      }
    Polynomial rest = Polynomial::constant(n, 1);
    for (std::size_t k = 2; k < n; ++k) rest *= Polynomial::variable(n, k);
    out.check(delta_ij(gen_elementary_symmetric(n, n - 1), 0, 1) == rest.pow(2),
              "Delta_12 e_{n-1} for n=" + std::to_string(n));
  }
  for (std::size_t n : {4u, 5u})
    for (std::size_t d = 2; d + 2 <= n; ++d)
      out.check(!perfect_square_root(delta_ij(gen_elementary_symmetric(n, d), 0, 1)),
                "Delta_12 e_" + std::to_string(d) + " is a square for n=" + std::to_string(n));
  return out;
}

// 6. Determinantal representations.
Outcome determinantal() {
  Outcome out;
  std::vector<Polynomial> targets{gen_elementary_symmetric(3, 2), gen_elementary_symmetric(4, 3)};
  for (std::size_t d = 1; d <= 4; ++d) targets.push_back(gen_product(d));
  for (const auto& f : targets) {
    std::size_t n = f.nvars();
    DetrepBuild b = build_detrep_multiaffine(f, all_vars(n), RationalVector(n, 1));
    out.check(b.ok(), "no representation for " + format_poly(f) + ": " + b.detail);
    if (!b.ok()) continue;
    std::string why;
    out.check(verify_detrep(*b.rep, f, &why), "verify_detrep: " + why);
    out.check(poly_determinant(b.rep->pencil()) == b.rep->gamma * f, "det(M) != gamma f");
    out.check(ldl_decompose(b.rep->at(b.rep->e)).psd &&
                  is_positive_definite(b.rep->at(b.rep->e)),
              "M(e) not positive definite");
  }
  Polynomial f = gen_elementary_symmetric(4, 2);
  DetrepBuild b = build_detrep_multiaffine(f, all_vars(4), RationalVector(4, 1));
  out.check(!b.ok(), "e_2 in 4 variables got a representation");
  out.check(b.offending_pair && b.offending_pair->first == 0 && b.offending_pair->second == 1,
            "offending pair is not (1, 2)");
  out.check(b.offending_delta == delta_ij(f, 0, 1), "witness is not Delta_12");
  return out;
}

// 7. Identities on random inputs.
Outcome identities() {
  Outcome out;
  Random rnd(7);
  for (int k = 0; k < kIdentityCases; ++k) {
    std::size_t n = static_cast<std::size_t>(rnd.integer(2, 4));
    Polynomial f = rnd.form(n, static_cast<unsigned>(rnd.integer(1, 4)), 6);
    RationalVector e = rnd.vector(n), a = rnd.vector(n), b = rnd.vector(n), ab(n);
    Rational s = rnd.rational();
    for (std::size_t i = 0; i < n; ++i) ab[i] = s * a[i] + b[i];
    out.check(wronskian_delta(f, e, ab) == s * wronskian_delta(f, e, a) + wronskian_delta(f, e, b),
              "bilinearity");
    out.check(wronskian_delta(f, e, a) == wronskian_delta(f, a, e), "symmetry");
  }
  for (int k = 0; k < kIdentityCases; ++k) {
    std::size_t n = static_cast<std::size_t>(rnd.integer(2, 3));
    Polynomial f = rnd.form(n, static_cast<unsigned>(rnd.integer(1, 2)), 4, 3);
    RationalVector e = rnd.vector(n, 3), a = rnd.vector(n, 3);
    Polynomial delta = wronskian_delta(f, e, a);
    for (unsigned r : {2u, 3u})
      out.check(wronskian_delta(f.pow(r), e, a) == Rational(r) * f.pow(2 * (r - 1)) * delta,
                "power rule r=" + std::to_string(r));
  }
  for (int k = 0; k < kIdentityCases; ++k) {
    Polynomial g = rnd.dense(4, 1, 5, 3), h = rnd.dense(4, 1, 5, 3);
    std::size_t i = static_cast<std::size_t>(rnd.integer(0, 3)),
                j = static_cast<std::size_t>(rnd.integer(0, 3));
    out.check(delta_ij(g * h, i, j) == g.pow(2) * delta_ij(h, i, j) + h.pow(2) * delta_ij(g, i, j),
              "product identity");
  }
  for (std::size_t size : {2u, 3u})
    for (int k = 0; k < kIdentityCases; ++k) {
      RationalVector al = rnd.vector(size), be = rnd.vector(size), ga = rnd.vector(size),
                     de = rnd.vector(size);
      std::string why;
      out.check(hesse_identity_oracle(size, al, be, ga, de, &why),
                "bordered determinant identity (size " + std::to_string(size) + "): " + why);
    }
  for (int k = 0; k < kIdentityCases; ++k) {
    std::size_t d = static_cast<std::size_t>(rnd.integer(1, 4));
    PolynomialMatrix m(d, d, 3);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = rnd.dense(3, 1, 3, 3);
    Polynomial det = poly_determinant(m);
    PolynomialMatrix left = m * poly_adjugate(m), right = poly_adjugate(m) * m;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Polynomial want = i == j ? det : Polynomial(3);
        out.check(left(i, j) == want && right(i, j) == want, "adjugate identity");
      }
  }
  for (int k = 0; k < kIdentityCases; ++k) {
    UnivariatePolynomial p = UnivariatePolynomial::monomial(0, Rational(rnd.integer(1, 4)));
    int deg = static_cast<int>(rnd.integer(2, 6));
    for (int t = 0; t < deg; ++t) p = p * UnivariatePolynomial(std::vector<Rational>{-rnd.rational(5, 3), 1});
    out.check(roots_interlace(p, p.derivative(), false).yes(), "Rolle interlacing");
  }
  return out;
}

// 8. Rank-one pencil: Delta_{e,a} f as an explicit sum of squares.
Outcome rank_one_pencil() {
  Outcome out;
  std::vector<RationalVector> v{{1, 1, 0}, {0, 1, 2}, {1, -1, frac(1, 2)}};
  RationalVector root{1, 2, frac(1, 2)};  // a_i = root_i^2
  std::vector<RationalMatrix> ms;
  for (const auto& u : v) ms.push_back(outer(u, u));
  PolynomialMatrix pencil = PolynomialMatrix::pencil(ms);
  Polynomial f = poly_determinant(pencil);
  out.check(!f.is_zero() && f.total_degree() == 3, "fixture is degenerate");
  PolynomialMatrix adj = poly_adjugate(pencil);
  RationalVector e(3, 1), a(3);
  for (std::size_t i = 0; i < 3; ++i) a[i] = root[i] * root[i];
  Polynomial sos(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      RationalVector mu = v[j];
      for (auto& x : mu) x *= root[j];
      sos += bilinear(v[i], adj, mu).pow(2);
    }
  out.check(wronskian_delta(f, e, a) == sos, "Delta_{e,a} f differs from the sum of squares");
  return out;
}

// 9. Exact membership against the SOS relaxation.
Outcome cross_consistency() {
  Outcome out;
  struct Family {
    Polynomial f;
    RationalVector e;
  };
  std::vector<Family> families{{gen_product(3), RationalVector(3, 1)},
                               {gen_lorentz(3), unit(3, 0)},
                               {gen_lorentz(4), unit(4, 0)},
                               {gen_elementary_symmetric(3, 2), RationalVector(3, 1)},
                               {gen_elementary_symmetric(4, 3), RationalVector(4, 1)}};
  Random rnd(9);
  int certified = 0;
  for (int k = 0; k < kConsistencyCases; ++k) {
    const Family& fam = families[static_cast<std::size_t>(k) % families.size()];
    HyperbolicityInstance inst(fam.f, fam.e);
    RationalVector a = rnd.nonzero_vector(fam.f.nvars(), 3, 2);
    if (k % 2 == 0)
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += 3 * fam.e[i];
    Verdict exact = cone_membership(inst, a, true);
    Verdict sos = sos_cone_membership(inst, a, 1, kSdp);
    out.check(!sos.no(), "sos_cone_membership returned CERTIFIED_NO");
    if (sos.yes()) {
      ++certified;
      out.check(exact.yes(), "contradiction at instance " + std::to_string(k));
      out.check(verify_certificate(*sos.certificate), "certificate does not verify");
    }
  }
  if (certified == 0) out.check(false, "no instance was certified by the relaxation");
  out.note += (out.note.empty() ? "" : "; ") + std::to_string(certified) + "/" +
              std::to_string(kConsistencyCases) + " certified by SOS";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds; 0 = none
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "Lorentz Wronskian expansion", kLorentzLimit, lorentz_wronskian},
      {2, "Lorentz Gram matrix and N=0 certificate", 0, lorentz_gram},
      {3, "cubic Gram family and N=0 membership", kCubicLimit, cubic_example},
      {4, "Vamos quartic, Gram matrix, determinant, verdict", kVamosLimit, vamos},
      {5, "elementary symmetric Delta_ij identities", 0, elementary_symmetric},
      {6, "determinantal representation builder", kDetrepLimit, determinantal},
      {7, "randomized identity suite", 0, identities},
      {8, "rank-one pencil sum of squares", 0, rank_one_pencil},
      {9, "exact vs SOS membership consistency", 0, cross_consistency},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& err) {
      o.ok = false;
      o.note = std::string("exception: ") + err.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs >= c.limit) {
      o.ok = false;
      o.note += (o.note.empty() ? "" : "; ") + std::string("over time limit");
    }
    all = all && o.ok;
    std::printf("criterion %d: %s  %s (%.3fs)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs,
                o.note.empty() ? "" : " - ", o.note.c_str());
  }
  std::printf("criterion 10: excluded (degree-12 boundary polynomial; 8-variable SOS of Delta_13 h)\n");
  return all ? 0 : 1;
}
