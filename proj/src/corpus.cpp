#include "hyper/corpus.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "hyper/soscert.hpp"

namespace hyper {

namespace {

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

Polynomial monomial_of(std::size_t nvars, const std::vector<std::size_t>& vars) {
  Monomial m(nvars);
  for (auto v : vars) m[v] += 1;
  return Polynomial::term(m, 1);
}

void subsets(std::size_t n, std::size_t d, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == d) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, d, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::size_t d) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, d, 0, cur, out);
  return out;
}

const char* const kReferenceW =
    "x^4*y^2 + 2*x^3*y^3 + x^2*y^4 + x^4*y*z + 5*x^3*y^2*z + 6*x^2*y^3*z + 2*x*y^4*z"
    " + x^4*z^2 + 5*x^3*y*z^2 + 10*x^2*y^2*z^2 + 6*x*y^3*z^2 + y^4*z^2 + 2*x^3*z^3"
    " + 6*x^2*y*z^3 + 6*x*y^2*z^3 + 2*y^3*z^3 + x^2*z^4 + 2*x*y*z^4 + y^2*z^4";

}  // namespace

Polynomial gen_product(std::size_t n) {
  require_positive(n, "n");
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return monomial_of(n, all);
}

Polynomial gen_lorentz(std::size_t n) {
  if (n < 2) throw std::invalid_argument("the Lorentz form needs at least 2 variables");
  Polynomial f = monomial_of(n, {0, 0});
  for (std::size_t j = 1; j < n; ++j) f -= monomial_of(n, {j, j});
  return f;
}

Polynomial gen_elementary_symmetric(std::size_t n, std::size_t d) {
  require_positive(n, "n");
  if (d > n) throw std::invalid_argument("degree exceeds the number of variables");
  Polynomial f(n);
  for (const auto& s : all_subsets(n, d)) f += monomial_of(n, s);
  return f;
}

Polynomial gen_sym_det(std::size_t d) {
  require_positive(d, "d");
  std::size_t nv = d * (d + 1) / 2;
  PolynomialMatrix x(d, d, nv);
  std::size_t k = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j, ++k) {
      x(i, j) = Polynomial::variable(nv, k);
      x(j, i) = x(i, j);
    }
  return poly_determinant(x);
}

std::vector<std::string> sym_det_variable_names(std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  return names;
}

Polynomial gen_cubic_example() {
  std::vector<std::string> names{"x", "y", "z"};
  return parse_poly("(x - y)*(x + y)*(x + 2*y) - x*z^2", names);
}

std::vector<std::vector<std::size_t>> vamos_nonbases() {
  return {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}, {3, 4, 5, 6}, {3, 4, 7, 8}};
}

Polynomial gen_vamos() {
  auto excluded = vamos_nonbases();
  for (auto& q : excluded)
    for (auto& v : q) --v;
  Polynomial h(8);
  for (const auto& s : all_subsets(8, 4))
    if (std::find(excluded.begin(), excluded.end(), s) == excluded.end()) h += monomial_of(8, s);
  return h;
}

VamosReport vamos_reproduction() {
  auto check = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("Vamos reproduction: ") + what);
  };
  VamosReport r;
  Polynomial h = gen_vamos();
  r.delta78 = delta_ij(h, 6, 7);
  check(!r.delta78.involves(6) && !r.delta78.involves(7), "Delta_78 h involves x7 or x8");

  // Restriction to pairs (x1,x2), (x3,x4), (x5,x6), (x7,x8) -> slots 0..3 of
  // (x, y, z, w), then w dropped.
  auto restrict = [&](const std::array<std::size_t, 4>& slot) {
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < 8; ++v) images.push_back(Polynomial::variable(4, slot[v / 2]));
    Polynomial w4 = substitute(r.delta78, images) * Rational(1, 4);
    check(!w4.involves(3), "the restriction involves w");
    std::vector<Polynomial> drop{Polynomial::variable(3, 0), Polynomial::variable(3, 1),
                                 Polynomial::variable(3, 2), Polynomial(3)};
    return substitute(w4, drop);
  };
  r.literal_W = restrict({0, 1, 2, 3});
  r.W = restrict({2, 1, 0, 3});

  std::vector<std::string> xyz{"x", "y", "z"};
  r.expected_W = parse_poly(kReferenceW, xyz);
  check(r.expected_W.size() == 19, "reference expansion does not have 19 terms");
  check(r.W == r.expected_W, "W differs from the reference expansion");
  std::vector<Polynomial> swap_xz{Polynomial::variable(3, 2), Polynomial::variable(3, 1),
                                  Polynomial::variable(3, 0)};
  check(substitute(r.literal_W, swap_xz) == r.expected_W,
        "x = x1 = x2, z = x5 = x6 does not give the expansion up to exchanging x and z");

  r.vanishing_points = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
  for (const auto& p : r.vanishing_points) check(evaluate(r.W, p) == 0, "W does not vanish at a listed point");

  auto cubics = homogeneous_monomials(3, 3);
  RationalMatrix eval(r.vanishing_points.size(), cubics.size());
  for (std::size_t i = 0; i < r.vanishing_points.size(); ++i)
    for (std::size_t j = 0; j < cubics.size(); ++j)
      eval(i, j) = evaluate(Polynomial::term(cubics[j], 1), r.vanishing_points[i]);
  auto kernel = nullspace(eval);
  r.cubic_space_dimension = kernel.size();
  check(r.cubic_space_dimension == 4, "cubics through the six points do not form a 4-space");

  r.cubic_basis = {parse_poly("x^2*y + x*y^2", xyz), parse_poly("x^2*z + x*z^2", xyz),
                   parse_poly("y^2*z + y*z^2", xyz), parse_poly("x*y*z", xyz)};
  RationalMatrix coords(r.cubic_basis.size(), cubics.size());
  for (std::size_t i = 0; i < r.cubic_basis.size(); ++i) {
    for (const auto& p : r.vanishing_points)
      check(evaluate(r.cubic_basis[i], p) == 0, "basis cubic does not vanish at a listed point");
    for (std::size_t j = 0; j < cubics.size(); ++j) coords(i, j) = r.cubic_basis[i].coefficient(cubics[j]);
  }
  check(rank(coords) == 4, "basis cubics are dependent");

  GramSystem sys = assemble_gram_system(r.W, std::span<const Polynomial>(r.cubic_basis));
  check(sys.consistent, "no Gram matrix over the cubic basis");
  check(sys.unique(), "Gram matrix over the cubic basis is not unique");
  r.gram = sys.particular;
  r.gram_det = determinant(r.gram);
  r.conclusion = certify_gram_system(sys);
  return r;
}

}  // namespace hyper
