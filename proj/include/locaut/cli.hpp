#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace locaut {

constexpr std::uint64_t kDefaultSeed = 0x5eed;

/// Runs one command line (without the program name). Exit codes: 0 for any
/// verdict, 1 when selfcheck finds a failure, 2 for invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelfcheckEntry {
  std::string check;
  bool passed = false;
  std::string detail;
};

struct SelfcheckReport {
  std::uint64_t seed = kDefaultSeed;
  std::vector<SelfcheckEntry> entries;
  std::size_t failures() const;
};

SelfcheckReport run_selfcheck(std::uint64_t seed = kDefaultSeed);

}  // namespace locaut
