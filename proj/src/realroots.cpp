#include "hyper/realroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyper {

std::string to_string(Status s) {
  switch (s) {
    case Status::certified_yes: return "CERTIFIED_YES";
    case Status::certified_no: return "CERTIFIED_NO";
    case Status::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

SturmSequence::SturmSequence(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  chain.push_back(p);
  UnivariatePolynomial d = p.derivative();
  if (d.is_zero()) return;
  chain.push_back(d);
  while (true) {
    UnivariatePolynomial r = divide(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmSequence::variations(const Rational& t) const {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sgn(q(t)));
  return count_variations(signs);
}

int SturmSequence::variations_at_infinity(bool plus) const {
  std::vector<int> signs;
  for (const auto& q : chain) signs.push_back(q.sign_at_infinity(plus));
  return count_variations(signs);
}

int sturm_root_count(const UnivariatePolynomial& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
  if (lo && hi && *lo >= *hi) return 0;
  SturmSequence seq(squarefree_part(p));
  int vlo = lo ? seq.variations(*lo) : seq.variations_at_infinity(false);
  int vhi = hi ? seq.variations(*hi) : seq.variations_at_infinity(true);
  return vlo - vhi;
}

Rational cauchy_bound(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  Rational best = 0;
  const auto& c = p.coefficients();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(c[k] / p.leading());
    if (r > best) best = r;
  }
  return best + 1;
}

unsigned RootList::total_multiplicity() const {
  unsigned s = 0;
  for (const auto& iv : intervals) s += iv.multiplicity;
  return s;
}

namespace {

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Rational with the smallest denominator in the open interval (x, y), x < y.
// hi_open_infinite treats y as +infinity.
Rational simplest_between(const Rational& x, const Rational& y, bool y_infinite = false) {
  Integer n = floor_of(x);
  Rational candidate(n + 1);
  if (y_infinite || candidate < y) return candidate;
  // Here n <= x < y <= n + 1.
  Rational fx = x - Rational(n);
  Rational fy = y - Rational(n);
  if (fx == 0) {
    // (n, y): n + 1/k with the smallest integer k > 1/fy.
    Rational inv = 1 / fy;
    Integer k = floor_of(inv) + 1;
    return Rational(n) + Rational(1) / Rational(k);
  }
  Rational inner = simplest_between(1 / fy, 1 / fx);
  return Rational(n) + 1 / inner;
}

// Primitive integer multiple of p.
UnivariatePolynomial primitive_part(const UnivariatePolynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  std::vector<Rational> ints;
  for (const auto& c : p.coefficients()) {
    Rational v = c * Rational(l);
    ints.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  if (g == 0) return p;
  for (auto& v : ints) v /= Rational(g);
  return UnivariatePolynomial(std::move(ints));
}

// Distinct roots of square-free s: open intervals with non-root endpoints,
// or exact point intervals for rational roots.
std::vector<IsolatingInterval> isolate_squarefree(const UnivariatePolynomial& s,
                                                   const Rational& precision) {
  std::vector<IsolatingInterval> out;
  if (s.degree() <= 0) return out;
  SturmSequence seq(s);
  UnivariatePolynomial prim = primitive_part(s);
  Integer lead = abs(prim.leading().get_num());
  Rational separation = Rational(1) / Rational(2 * lead * lead);

  Rational bound = cauchy_bound(s);
  struct Task {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Task> stack{{-bound, bound, seq.variations(-bound), seq.variations(bound)}};
  std::vector<IsolatingInterval> found;
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    int count = t.vlo - t.vhi;
    if (count == 0) continue;
    if (count == 1) {
      // Refine, detecting a rational root once the interval is narrow
      // enough to hold at most one candidate p/q with q <= lead.
      Rational lo = t.lo, hi = t.hi;
      int slo = sgn(s(lo));
      bool exact = false;
      bool rational_checked = false;
      while (true) {
        Rational width = hi - lo;
        if (!rational_checked && width < separation) {
          rational_checked = true;
          Rational r = simplest_between(lo, hi);
          if (r.get_den() <= lead && s(r) == 0) {
            lo = hi = r;
            exact = true;
            break;
          }
        }
        if (rational_checked && width <= precision) break;
        Rational mid = (lo + hi) / 2;
        int sm = sgn(s(mid));
        if (sm == 0) {
          lo = hi = mid;
          exact = true;
          break;
        }
        if (sm == slo) lo = mid;
        else hi = mid;
      }
      found.push_back({lo, hi, 1});
      (void)exact;
      continue;
    }
    Rational mid = (t.lo + t.hi) / 2;
    int vmid = seq.variations(mid);
    if (s(mid) == 0) {
      found.push_back({mid, mid, 1});
      // Roots in (lo, mid) number vlo - vmid - 1; nudge the split point off
      // the root so both children keep non-root endpoints.
      Rational eps = (t.hi - t.lo) / 4;
      Rational left, right;
      while (true) {
        left = mid - eps;
        right = mid + eps;
        if (s(left) != 0 && s(right) != 0 &&
            seq.variations(left) - seq.variations(right) == 1)
          break;
        eps /= 2;
      }
      stack.push_back({t.lo, left, t.vlo, seq.variations(left)});
      stack.push_back({right, t.hi, seq.variations(right), t.vhi});
      continue;
    }
    stack.push_back({t.lo, mid, t.vlo, vmid});
    stack.push_back({mid, t.hi, vmid, t.vhi});
  }
  std::sort(found.begin(), found.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return found;
}

// Multiplicity of the unique root of s inside iv as a root of the polynomial
// whose square-free decomposition is given.
unsigned multiplicity_in(const std::vector<SquareFreeFactor>& factors, const IsolatingInterval& iv) {
  for (const auto& f : factors) {
    bool hit = iv.exact() ? f.factor(iv.lo) == 0 : sturm_root_count(f.factor, iv.lo, iv.hi) > 0;
    if (hit) return f.multiplicity;
  }
  return 0;
}

}  // namespace

RootList isolate_real_roots(const UnivariatePolynomial& p, const Rational& precision) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  RootList out;
  out.degree = p.degree();
  auto factors = squarefree_decomposition(p);
  for (auto iv : isolate_squarefree(squarefree_part(p), precision)) {
    iv.multiplicity = multiplicity_in(factors, iv);
    out.intervals.push_back(iv);
  }
  return out;
}

bool is_real_rooted(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw std::domain_error("real-rootedness of the zero polynomial");
  unsigned total = 0;
  for (const auto& f : squarefree_decomposition(p))
    total += f.multiplicity * static_cast<unsigned>(sturm_root_count(f.factor, std::nullopt, std::nullopt));
  return static_cast<int>(total) == p.degree();
}

std::vector<MergedRoot> merge_roots(const UnivariatePolynomial& f, const UnivariatePolynomial& g) {
  std::vector<MergedRoot> out;
  UnivariatePolynomial prod = f * g;
  if (prod.is_zero()) throw std::domain_error("merging roots of a zero polynomial");
  auto ff = squarefree_decomposition(f);
  auto gf = squarefree_decomposition(g);
  for (const auto& iv : isolate_squarefree(squarefree_part(prod), Rational(1))) {
    out.push_back({iv, multiplicity_in(ff, iv), multiplicity_in(gf, iv)});
  }
  return out;
}

int sign_at_root(const UnivariatePolynomial& p, const UnivariatePolynomial& f,
                 const IsolatingInterval& where) {
  if (p.is_zero()) return 0;
  if (where.exact()) return sgn(p(where.lo));
  UnivariatePolynomial s = squarefree_part(f);
  UnivariatePolynomial common = gcd(s, p);
  if (common.degree() > 0 && sturm_root_count(common, where.lo, where.hi) > 0) return 0;
  Rational lo = where.lo, hi = where.hi;
  int slo = sgn(s(lo));
  while (sturm_root_count(p, lo, hi) > 0 || p(hi) == 0) {
    Rational mid = (lo + hi) / 2;
    int sm = sgn(s(mid));
    if (sm == 0) return sgn(p(mid));
    if (sm == slo) lo = mid;
    else hi = mid;
  }
  return sgn(p(hi));
}

Verdict roots_interlace(const UnivariatePolynomial& f, const UnivariatePolynomial& g, bool strict) {
  if (f.is_zero() || g.is_zero() || g.degree() != f.degree() - 1)
    throw std::invalid_argument("interlacing requires deg g = deg f - 1 and nonzero inputs");
  auto merged = merge_roots(f, g);
  std::vector<std::size_t> alpha, beta;
  for (std::size_t k = 0; k < merged.size(); ++k) {
    alpha.insert(alpha.end(), merged[k].mult_f, k);
    beta.insert(beta.end(), merged[k].mult_g, k);
  }
  auto fail = [](std::string note) {
    Witness w{Witness::Kind::scalar};
    w.note = note;
    return Verdict::certified_no(std::move(w), std::move(note));
  };
  if (static_cast<int>(alpha.size()) != f.degree()) return fail("f is not real-rooted");
  if (static_cast<int>(beta.size()) != g.degree()) return fail("g is not real-rooted");
  for (std::size_t i = 0; i < beta.size(); ++i) {
    bool ok = strict ? (alpha[i] < beta[i] && beta[i] < alpha[i + 1])
                     : (alpha[i] <= beta[i] && beta[i] <= alpha[i + 1]);
    if (!ok)
      return fail("root " + std::to_string(i + 1) + " of g is out of place" +
                  (strict ? " (strict)" : ""));
  }
  return Verdict::certified_yes(strict ? "strictly interlaces" : "interlaces");
}

}  // namespace hyper
