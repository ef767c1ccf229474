#pragma once

// Subcommands of the `kgonal` tool. Each returns the process exit status:
// 0 on success or agreement, 1 when a verification fails, 2 on bad usage.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "kgonal/kgonal.hpp"

namespace kgonal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { table, jsonl, bfile };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Decimal digits with an optional leading '-'; nullopt otherwise.
std::optional<BigInt> parse_bigint(std::string_view text);

struct GenOptions {
  long k = 3;
  std::size_t count = 1;
  std::uint64_t start_index = 0;
  OutputFormat format = OutputFormat::table;
};

struct VerifyOptions {
  long k_min = 3;
  long k_max = 3;
  BigInt limit = 1;
};

struct PellOptions {
  BigInt disc = 2;
  std::size_t count = 5;
};

struct InvertOptions {
  long k = 3;
  BigInt value = 1;
};

struct Case2Options {
  long k = 4;
  std::size_t count = 10;
};

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_pell(const PellOptions& opts, std::ostream& out, std::ostream& err);
int cmd_invert(const InvertOptions& opts, std::ostream& out, std::ostream& err);
int cmd_case2(const Case2Options& opts, std::ostream& out, std::ostream& err);

/// One jsonl line (no trailing newline): keys k, i, value, m, n, a, all
/// decimal strings.
std::string to_jsonl(const IntersectionRecord& rec);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kgonal::cli
