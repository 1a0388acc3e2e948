#ifndef COXLEHMER_CLI_HPP
#define COXLEHMER_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace coxlehmer {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Options shared by the subcommands.
struct RunConfig {
  std::string type = "A";
  int rank = 3;
  int m = 0;
  std::string code = "default";
  /// Generator word ("s2 s1 s3 s2"), one-line ("3412") or signed one-line
  /// ("[-2,1,3]"); empty means the whole group where that makes sense.
  std::optional<std::string> element;
  bool json = false;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string cache_dir;
};

/// coxlehmer <code|hpoly|complex|classify|verify> [flags]. Returns 0 on
/// success, 1 when a verification fails, 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxlehmer

#endif  // COXLEHMER_CLI_HPP
