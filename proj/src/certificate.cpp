#include "specreg/certificate.hpp"

#include <cmath>
#include <utility>

namespace specreg {

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::ge: return "ge";
    case Relation::le: return "le";
    case Relation::eq: return "eq";
  }
  return "ge";
}

Certificate make_certificate(std::string name, Relation rel, double lhs, double rhs, double slack,
                             bool premise_met) {
  Certificate c{std::move(name), rel, lhs, rhs, slack, premise_met, false};
  switch (rel) {
    case Relation::ge: c.holds = lhs >= rhs - slack; break;
    case Relation::le: c.holds = lhs <= rhs + slack; break;
    case Relation::eq: c.holds = std::fabs(lhs - rhs) <= slack; break;
  }
  return c;
}

}  // namespace specreg
