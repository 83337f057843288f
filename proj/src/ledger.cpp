#include "dpgs/ledger.hpp"

#include "dpgs/util.hpp"
#include "json.hpp"

namespace dpgs {

void PrivacyLedger::add(const std::string& mechanism, double eps) {
  entries_.emplace_back(mechanism, eps);
  total_ += eps;
}

std::string PrivacyLedger::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [name, eps] : entries_) {
    arr.push_back({{"mechanism", name}, {"epsilon", eps}});
  }
  return arr.dump();
}

}  // namespace dpgs
