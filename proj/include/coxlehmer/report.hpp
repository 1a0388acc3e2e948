#ifndef COXLEHMER_REPORT_HPP
#define COXLEHMER_REPORT_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace coxlehmer {

inline constexpr std::size_t kMaxWitnesses = 10;

/// Outcome of one verification check: how many instances ran, how many
/// failed, and up to kMaxWitnesses failure descriptions.
class VerificationReport {
 public:
  VerificationReport() = default;
  VerificationReport(std::string check, std::string instance);

  const std::string& check() const noexcept { return check_; }
  const std::string& instance() const noexcept { return instance_; }
  std::size_t instances() const noexcept { return instances_; }
  std::size_t failures() const noexcept { return failures_; }
  bool pass() const noexcept { return failures_ == 0 && children_failed_ == 0; }
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }
  const std::vector<VerificationReport>& children() const noexcept { return children_; }
  double seconds() const noexcept { return seconds_; }

  /// Counts one instance; on failure stores the witness text (built lazily).
  void record(bool ok, const std::function<std::string()>& witness = {});
  void fail(std::string witness) { record(false, [&] { return witness; }); }
  /// Free-form facts shown with the report (counts, sizes, ...).
  void note(std::string key, nlohmann::json value) { notes_[std::move(key)] = std::move(value); }
  const nlohmann::json& notes() const noexcept { return notes_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_seconds(double s) { seconds_ = s; }
  void add_child(VerificationReport child);
  /// Adds the counts and witnesses of another report for the same check.
  void absorb(const VerificationReport& other);

  nlohmann::json to_json() const;
  std::string to_text(int indent = 0) const;

 private:
  std::string check_;
  std::string instance_;
  std::size_t instances_ = 0;
  std::size_t failures_ = 0;
  std::size_t children_failed_ = 0;
  std::vector<std::string> witnesses_;
  std::vector<VerificationReport> children_;
  nlohmann::json notes_ = nlohmann::json::object();
  std::optional<std::uint64_t> seed_;
  double seconds_ = 0.0;
};

/// Thread-safe wrapper used when instances run on a worker pool.
class ConcurrentReport {
 public:
  explicit ConcurrentReport(VerificationReport& target) : target_(target) {}
  void record(bool ok, const std::function<std::string()>& witness = {}) {
    std::lock_guard lock(mutex_);
    target_.record(ok, witness);
  }

 private:
  VerificationReport& target_;
  std::mutex mutex_;
};

/// Wall-clock timer that writes the elapsed time into a report.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.set_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count());
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace coxlehmer

#endif  // COXLEHMER_REPORT_HPP
