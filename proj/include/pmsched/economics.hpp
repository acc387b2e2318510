#pragma once

#include "pmsched/errors.hpp"

namespace pmsched {

/// Year index. Year 0 is the primary inspection; all costs are discounted
/// relative to it.
using Year = int;

/// Economic parameters of a maintenance campaign. All monetary amounts are
/// stored in base currency units (euros). Immutable after construction and
/// safe to share across threads.
///
/// Costs decay with time: a cost incurred at year t is the initial cost
/// multiplied by ((1 + inflation)/(1 + discount))^t. Requiring
/// inflation < discount makes every cost curve strictly decreasing in t.
class CostModel {
 public:
  /// Throws ValidationError unless insp0, rep0, out0 > 0 and
  /// 0 <= inflation < discount.
  CostModel(double insp0, double rep0, double out0, double inflation,
            double discount);

  double insp0() const { return insp0_; }
  double rep0() const { return rep0_; }
  double out0() const { return out0_; }
  double inflation() const { return inflation_; }
  double discount() const { return discount_; }

  /// ((1 + inflation)/(1 + discount))^t. t must be >= 0.
  double factor(Year t) const;

  /// Cost of an inspection performed at year t.
  double inspection_cost(Year t) const;

  /// Cost of repairing a single defect at year t.
  double repair_cost(Year t) const;

  /// One-time out-of-service cost of taking the line down at year t.
  double outage_cost(Year t) const;

 private:
  double insp0_;
  double rep0_;
  double out0_;
  double inflation_;
  double discount_;
};

}  // namespace pmsched
