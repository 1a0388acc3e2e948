#ifndef COXLEHMER_VERIFY_HPP
#define COXLEHMER_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coxlehmer/cache.hpp"
#include "coxlehmer/report.hpp"

namespace coxlehmer {

/// Runs fn(0), ..., fn(count-1) on a pool of threads (0 = hardware
/// concurrency). The first exception thrown by a task is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

struct VerifyOptions {
  /// Largest rank of any group a suite may build.
  int max_rank = 6;
  /// Restricts the symmetric-group suites to S_n.
  std::optional<int> n;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::size_t vd_facet_limit = 24;
  PosetCache* cache = nullptr;
};

/// Suite names accepted by run_suite, "all" last.
std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown name. Exceptions raised while
/// a suite runs are recorded as failures.
VerificationReport run_suite(const std::string& name, const VerifyOptions& options = {});

VerificationReport suite_examples(const VerifyOptions& o);
VerificationReport suite_codes(const VerifyOptions& o);
VerificationReport suite_shellings(const VerifyOptions& o);
VerificationReport suite_vd(const VerifyOptions& o);
VerificationReport suite_flag(const VerifyOptions& o);
VerificationReport suite_maduro(const VerifyOptions& o);
VerificationReport suite_catalan(const VerifyOptions& o);
VerificationReport suite_unimodal(const VerifyOptions& o);
VerificationReport suite_smooth(const VerifyOptions& o);
VerificationReport suite_h3_figure(const VerifyOptions& o);
VerificationReport suite_d_factorization(const VerifyOptions& o);
VerificationReport suite_h3_quotients(const VerifyOptions& o);
VerificationReport suite_strict_inclusions(const VerifyOptions& o);
VerificationReport suite_msequence(const VerifyOptions& o);
VerificationReport suite_dihedral(const VerifyOptions& o);
VerificationReport suite_exponents(const VerifyOptions& o);
VerificationReport suite_all(const VerifyOptions& o);

/// L_{A3}(s2 s1 s3 s2) = (0,2,2).
VerificationReport check_code_example(const VerifyOptions& o);
/// The 3412 interval: routes, maxima and meets.
VerificationReport check_interval_example(const VerifyOptions& o);

}  // namespace coxlehmer

#endif  // COXLEHMER_VERIFY_HPP
