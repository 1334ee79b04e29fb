#ifndef HOMALG_REPORT_HPP
#define HOMALG_REPORT_HPP

#include <string>
#include <vector>

#include "homalg/containers.hpp"

namespace homalg {

/// One offending basis tuple: which identity failed, where, and the nonzero
/// defect vector that was supposed to vanish.
struct Witness {
  std::string identity;
  std::vector<std::string> tuple;
  Vec defect;
};

/// Verdict of a checker. ok is true exactly when witnesses is empty;
/// truncated means the scan stopped at the witness cap.
struct Report {
  bool ok = true;
  std::vector<Witness> witnesses;
  bool truncated = false;
};

struct CheckOptions {
  std::size_t witness_cap = 10;
  bool all_witnesses = false;

  std::size_t effective_cap() const {
    if (all_witnesses) return static_cast<std::size_t>(-1);
    return witness_cap == 0 ? 1 : witness_cap;
  }
};

/// Collects witnesses in scan order up to the cap. add() returns false once
/// the cap is reached so scans can stop early; ordering stays lexicographic
/// because every checker enumerates tuples in a fixed order.
class WitnessSink {
 public:
  WitnessSink(Report& report, const CheckOptions& opt)
      : report_(report), cap_(opt.effective_cap()) {}

  bool add(std::string identity, std::vector<std::string> tuple, Vec defect) {
    report_.ok = false;
    if (report_.witnesses.size() >= cap_) {
      report_.truncated = true;
      return false;
    }
    report_.witnesses.push_back({std::move(identity), std::move(tuple), std::move(defect)});
    if (report_.witnesses.size() >= cap_) {
      // the scan stops here, so later tuples go unexamined
      report_.truncated = true;
      return false;
    }
    return true;
  }

  bool full() const { return report_.witnesses.size() >= cap_; }

 private:
  Report& report_;
  std::size_t cap_;
};

}  // namespace homalg

#endif
