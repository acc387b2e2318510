#include "pmsched/economics.hpp"

#include <cmath>
#include <string>

namespace pmsched {

CostModel::CostModel(double insp0, double rep0, double out0, double inflation,
                     double discount)
    : insp0_(insp0),
      rep0_(rep0),
      out0_(out0),
      inflation_(inflation),
      discount_(discount) {
  if (!(insp0 > 0.0)) {
    throw ValidationError("cost model: insp0 must be > 0, got " +
                          std::to_string(insp0));
  }
  if (!(rep0 > 0.0)) {
    throw ValidationError("cost model: rep0 must be > 0, got " +
                          std::to_string(rep0));
  }
  if (!(out0 > 0.0)) {
    throw ValidationError("cost model: out0 must be > 0, got " +
                          std::to_string(out0));
  }
  if (!(inflation >= 0.0)) {
    throw ValidationError("cost model: inflation must be >= 0, got " +
                          std::to_string(inflation));
  }
  if (!(inflation < discount)) {
    throw ValidationError(
        "cost model: inflation must be strictly below discount (got " +
        std::to_string(inflation) + " >= " + std::to_string(discount) + ")");
  }
}

double CostModel::factor(Year t) const {
  if (t < 0) {
    throw ValidationError("discount factor: year must be >= 0, got " +
                          std::to_string(t));
  }
  return std::pow((1.0 + inflation_) / (1.0 + discount_),
                  static_cast<double>(t));
}

double CostModel::inspection_cost(Year t) const { return insp0_ * factor(t); }

double CostModel::repair_cost(Year t) const { return rep0_ * factor(t); }

double CostModel::outage_cost(Year t) const { return out0_ * factor(t); }

}  // namespace pmsched
