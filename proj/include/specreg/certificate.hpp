#pragma once

#include <string>
#include <string_view>

namespace specreg {

enum class Relation { ge, le, eq };

std::string_view to_string(Relation r) noexcept;

/// One evaluated inequality: lhs >= rhs - slack (ge), lhs <= rhs + slack (le)
/// or |lhs - rhs| <= slack (eq).
///
/// premise_met is false when an assumption the inequality depends on does not
/// hold for this run; such certificates are reported but never violations.
struct Certificate {
  std::string name;
  Relation relation = Relation::ge;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool premise_met = true;
  bool holds = true;

  bool violated() const noexcept { return premise_met && !holds; }
};

Certificate make_certificate(std::string name, Relation rel, double lhs, double rhs, double slack,
                             bool premise_met = true);

}  // namespace specreg
