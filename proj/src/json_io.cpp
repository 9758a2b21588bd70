#include "hyper/io.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyper {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string");
}

Json to_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    rows.emplace_back();
    for (const auto& x : row) rows.back().push_back(rational_from_json(x));
  }
  return RationalMatrix::from_rows(rows);
}

namespace {

const char* kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::line: return "line";
    case Witness::Kind::point: return "point";
    case Witness::Kind::vector: return "vector";
    case Witness::Kind::matrix: return "matrix";
    case Witness::Kind::scalar: return "scalar";
    case Witness::Kind::pair: return "pair";
  }
  return "scalar";
}

RationalVector vector_from_json(const Json& j) {
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

}  // namespace

Json to_json(const Witness& w) {
  Json j;
  j["kind"] = kind_name(w.kind);
  if (!w.base.empty()) j["e"] = to_json(w.base);
  if (!w.direction.empty()) j[w.kind == Witness::Kind::line ? "a" : "coordinates"] = to_json(w.direction);
  j["value"] = to_json(w.value);
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Json to_json(const Verdict& v, std::span<const std::string> names) {
  Json j;
  j["verdict"] = to_string(v.status);
  j["detail"] = v.detail;
  j["sampled"] = v.sampled;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  if (v.certificate) j["certificate"] = to_json(*v.certificate, names);
  return j;
}

Json to_json(const SosCertificate& c, std::span<const std::string> names) {
  if (names.size() != c.nvars) throw std::invalid_argument("variable names do not match the ring");
  Json j;
  j["variables"] = Json(std::vector<std::string>(names.begin(), names.end()));
  j["target"] = format_poly(c.target, names);
  Json basis = Json::array();
  for (const auto& b : c.basis) basis.push_back(format_poly(b, names));
  j["basis"] = std::move(basis);
  j["gram"] = to_json(c.gram);
  j["N"] = c.denominator_power;
  Json sphere = Json::array();
  for (auto v : c.sphere_variables) sphere.push_back(names[v]);
  j["sphere_variables"] = std::move(sphere);
  j["multiplier"] = c.multiplier ? Json(format_poly(*c.multiplier, names)) : Json(nullptr);
  j["modulus"] = c.modulus ? Json(format_poly(*c.modulus, names)) : Json(nullptr);
  Json ldl;
  ldl["perm"] = Json(std::vector<std::size_t>(c.ldl.perm.begin(), c.ldl.perm.end()));
  ldl["L"] = to_json(c.ldl.lower);
  ldl["D"] = to_json(c.ldl.diagonal);
  j["ldl"] = std::move(ldl);
  return j;
}

SosCertificate certificate_from_json(const Json& j) {
  SosCertificate c;
  auto names = j.at("variables").get<std::vector<std::string>>();
  c.nvars = names.size();
  c.target = parse_poly(j.at("target").get<std::string>(), names);
  for (const auto& b : j.at("basis")) c.basis.push_back(parse_poly(b.get<std::string>(), names));
  c.gram = matrix_from_json(j.at("gram"));
  c.denominator_power = j.at("N").get<unsigned>();
  for (const auto& s : j.at("sphere_variables")) {
    auto it = std::find(names.begin(), names.end(), s.get<std::string>());
    if (it == names.end()) throw std::invalid_argument("unknown sphere variable");
    c.sphere_variables.push_back(static_cast<std::size_t>(it - names.begin()));
  }
  if (!j.at("multiplier").is_null()) c.multiplier = parse_poly(j["multiplier"].get<std::string>(), names);
  if (j.contains("modulus") && !j["modulus"].is_null())
    c.modulus = parse_poly(j["modulus"].get<std::string>(), names);
  const Json& ldl = j.at("ldl");
  c.ldl.perm = ldl.at("perm").get<std::vector<std::size_t>>();
  c.ldl.lower = c.basis.empty() ? RationalMatrix() : matrix_from_json(ldl.at("L"));
  c.ldl.diagonal = vector_from_json(ldl.at("D"));
  c.ldl.psd = true;
  for (const auto& d : c.ldl.diagonal) c.ldl.psd = c.ldl.psd && d >= 0;
  if (c.basis.empty()) c.gram = RationalMatrix();
  return c;
}

Json to_json(const DeterminantalRep& rep) {
  Json j;
  j["d"] = rep.size();
  j["n"] = rep.nvars();
  j["e"] = to_json(rep.e);
  j["gamma"] = to_json(rep.gamma);
  Json ms = Json::array();
  for (const auto& m : rep.matrices) ms.push_back(to_json(m));
  j["matrices"] = std::move(ms);
  return j;
}

DeterminantalRep detrep_from_json(const Json& j) {
  DeterminantalRep rep;
  rep.e = vector_from_json(j.at("e"));
  rep.gamma = rational_from_json(j.at("gamma"));
  for (const auto& m : j.at("matrices")) rep.matrices.push_back(matrix_from_json(m));
  std::size_t d = j.at("d").get<std::size_t>();
  std::size_t n = j.at("n").get<std::size_t>();
  if (rep.matrices.size() != n || rep.size() != d || rep.e.size() != n)
    throw std::invalid_argument("representation dimensions do not match d and n");
  return rep;
}

Json to_json(const VamosReport& r) {
  std::vector<std::string> xyz{"x", "y", "z"};
  Json j;
  j["W"] = format_poly(r.W, xyz);
  j["W_terms"] = r.W.size();
  j["W_matches_expansion"] = r.W == r.expected_W;
  j["W_x_z_exchanged"] = format_poly(r.literal_W, xyz);
  Json pts = Json::array();
  for (const auto& p : r.vanishing_points) pts.push_back(to_json(p));
  j["vanishing_points"] = std::move(pts);
  j["cubic_space_dimension"] = r.cubic_space_dimension;
  Json basis = Json::array();
  for (const auto& b : r.cubic_basis) basis.push_back(format_poly(b, xyz));
  j["cubic_basis"] = std::move(basis);
  j["gram"] = to_json(r.gram);
  j["gram_det"] = to_json(r.gram_det);
  j["conclusion"] = to_json(r.conclusion, xyz);
  return j;
}

}  // namespace hyper
