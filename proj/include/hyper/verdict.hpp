#pragma once

#include <memory>
#include <optional>
#include <string>

#include "hyper/polycore/rational.hpp"

namespace hyper {

struct SosCertificate;

enum class Status { certified_yes, certified_no, unknown };

std::string to_string(Status s);

/// Checkable evidence attached to a verdict.
struct Witness {
  enum class Kind {
    line,      // restriction to t*e + a
    point,     // evaluation point
    vector,    // y with y^T G y < 0
    matrix,    // the unique Gram matrix, not PSD
    scalar,    // e.g. g(e) <= 0
    pair,      // offending index pair (i, j)
  };
  explicit Witness(Kind k = Kind::scalar) : kind(k) {}

  Kind kind;
  RationalVector base;       // line: e
  RationalVector direction;  // line: a; point / vector: the coordinates
  Rational value = 0;        // value of the witnessing quantity
  std::string note;
};

struct Verdict {
  Status status = Status::unknown;
  std::optional<Witness> witness;
  std::string detail;
  /// Set when a yes rests on sampled evidence only.
  bool sampled = false;
  std::shared_ptr<const SosCertificate> certificate;

  bool yes() const noexcept { return status == Status::certified_yes; }
  bool no() const noexcept { return status == Status::certified_no; }
  bool unknown() const noexcept { return status == Status::unknown; }

  static Verdict make(Status s, std::optional<Witness> w, std::string detail) {
    Verdict v;
    v.status = s;
    v.witness = std::move(w);
    v.detail = std::move(detail);
    return v;
  }
  static Verdict certified_yes(std::string detail = {}) {
    return make(Status::certified_yes, std::nullopt, std::move(detail));
  }
  static Verdict certified_no(Witness w, std::string detail = {}) {
    return make(Status::certified_no, std::move(w), std::move(detail));
  }
  static Verdict undecided(std::string detail = {}) {
    return make(Status::unknown, std::nullopt, std::move(detail));
  }
};

}  // namespace hyper
