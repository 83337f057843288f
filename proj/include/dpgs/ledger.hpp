#pragma once

#include <string>
#include <vector>

namespace dpgs {

// Advisory record of budget expenditures; drivers compute their splits
// statically and this never blocks anything.
class PrivacyLedger {
 public:
  void add(const std::string& mechanism, double eps);
  double total() const { return total_; }
  const std::vector<std::pair<std::string, double>>& entries() const { return entries_; }

  // [{"mechanism": str, "epsilon": float}]
  std::string to_json() const;

 private:
  std::vector<std::pair<std::string, double>> entries_;
  double total_ = 0.0;
};

}  // namespace dpgs
