#pragma once

// Subcommands of the `veronese` tool as library calls. Each returns a JSON
// payload tagged with the schema version; the executable only parses flags.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veronese/io.hpp"
#include "veronese/transversality.hpp"
#include "veronese/verify.hpp"

namespace veronese {

enum class CommandStatus { Ok, PreconditionFailed, BudgetExceeded, ChecksFailed };

std::string to_string(CommandStatus s);

struct CommandResult {
  CommandStatus status = CommandStatus::Ok;
  Json payload;
  /// Diagnostics for stderr; not part of the byte-stable payload.
  std::vector<std::string> log;
  /// Set when the requested output is plain text rather than JSON.
  std::optional<std::string> text;

  /// 0 for Ok, 1 ChecksFailed, 2 PreconditionFailed, 3 BudgetExceeded.
  int exit_code() const;
};

enum class EqsFormat { BracketText, Json };

/// φ_I (d = 2) or ψ_{I,J} (d ≥ 3) in lexicographic order of (J, I), each
/// labelled by its index sets.
CommandResult cmd_eqs(int d, int n, EqsFormat format);

/// Membership report for a configuration given as JSON text. With `field`
/// set, a ℚ configuration is first reduced into it.
CommandResult cmd_eval(const std::string& config_json, const std::optional<Field>& field = std::nullopt);

/// Gale transform of a configuration given as JSON text.
CommandResult cmd_gale(const std::string& config_json, const std::optional<Field>& field = std::nullopt);

/// Reduces ℚ coordinates into `target` (identity when the fields agree).
/// Throws PreconditionError for 𝔽_p → ℚ or a denominator divisible by p.
PointConfiguration change_field(const PointConfiguration& p, const Field& target);

struct SampleOptions {
  std::string kind = "rnc";  ///< rnc | generic | degenerate | two-lines | chain
  int d = 2;
  int n = 6;
  std::uint64_t seed = 0;
  Field field = Field::default_prime();
  long long height = 100;
  std::vector<int> degrees;              ///< chain: component degrees (default: d ones)
  std::vector<int> points_per_component; ///< chain: default spreads n as evenly as possible
  ChainTopology topology = ChainTopology::Chain;
  int on_first = -1;                     ///< two-lines: default n/2
};

CommandResult cmd_sample(const SampleOptions& options);

struct TransversalOptions {
  int n = 0;  ///< 0: infer from the edges
  int k = 0;
  std::optional<SearchMode> min_mode;
  /// Analyze C([n], k) instead of an edge list; requires n and k.
  bool min_only = false;
};

/// Edges as a JSON array of vertex arrays or {"n", "k", "edges"}.
CommandResult cmd_transversal(const std::string& edges_json, const TransversalOptions& options);

CommandResult cmd_dim(int d, int n, std::uint64_t seed, const Field& field);

CommandResult cmd_verify(Suite suite, std::uint64_t seed);

}  // namespace veronese
