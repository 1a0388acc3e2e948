#include "coxlehmer/report.hpp"

#include <iomanip>
#include <sstream>

namespace coxlehmer {

VerificationReport::VerificationReport(std::string check, std::string instance)
    : check_(std::move(check)), instance_(std::move(instance)) {}

void VerificationReport::record(bool ok, const std::function<std::string()>& witness) {
  ++instances_;
  if (ok) return;
  ++failures_;
  if (witnesses_.size() < kMaxWitnesses) witnesses_.push_back(witness ? witness() : std::string("(no detail)"));
}

void VerificationReport::add_child(VerificationReport child) {
  if (!child.pass()) ++children_failed_;
  children_.push_back(std::move(child));
}

void VerificationReport::absorb(const VerificationReport& other) {
  instances_ += other.instances_;
  failures_ += other.failures_;
  for (const auto& w : other.witnesses_) {
    if (witnesses_.size() >= kMaxWitnesses) break;
    witnesses_.push_back(w);
  }
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["check"] = check_;
  j["instance"] = instance_;
  j["pass"] = pass();
  j["instances"] = instances_;
  j["failures"] = failures_;
  if (!witnesses_.empty()) j["witness"] = witnesses_;
  if (!notes_.empty()) j["notes"] = notes_;
  if (seed_) j["seed"] = *seed_;
  j["milliseconds"] = static_cast<std::int64_t>(seconds_ * 1000.0 + 0.5);
  if (!children_.empty()) {
    j["children"] = nlohmann::json::array();
    for (const auto& c : children_) j["children"].push_back(c.to_json());
  }
  return j;
}

std::string VerificationReport::to_text(int indent) const {
  std::ostringstream os;
  std::string pad(static_cast<std::size_t>(indent), ' ');
  os << pad << (pass() ? "PASS " : "FAIL ") << check_;
  if (!instance_.empty()) os << " [" << instance_ << "]";
  os << ": " << instances_ << " instances, " << failures_ << " failures";
  if (seed_) os << ", seed " << *seed_;
  os << ", " << std::fixed << std::setprecision(2) << seconds_ << " s\n";
  for (const auto& [k, v] : notes_.items()) os << pad << "  " << k << " = " << v.dump() << '\n';
  for (const auto& w : witnesses_) os << pad << "  witness: " << w << '\n';
  for (const auto& c : children_) os << c.to_text(indent + 2);
  return os.str();
}

}  // namespace coxlehmer
