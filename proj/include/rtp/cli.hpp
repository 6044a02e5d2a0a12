#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "rtp/riordan.hpp"

namespace rtp {

enum class OutputFormat { Table, Csv, Json };

// Everything a subcommand needs; flags map onto these fields 1:1.
struct RunConfig {
  std::string spec_file;     // --spec FILE
  std::string catalog_name;  // --catalog NAME
  int rows = 8;
  int cols = 0;       // 0: same as rows
  int order = 8;
  int minor_cap = 0;  // 0: full (min dimension)
  OutputFormat format = OutputFormat::Table;
  std::uint64_t seed = 1;
  int trials = 1000;
};

// Reads the spec from --spec or --catalog (exactly one must be set).
RiordanSpec load_spec(const RunConfig& cfg);

// Subcommands write to `out` and return the process exit code.
// Exit codes: 0 success / certified; 1 refuted (a negative minor was
// found where the command checks positivity); 2 inconclusive
// (cmd_certify: no criterion certifies but the direct check passes).
// Callers map toolkit errors to exit code 3.
int cmd_build(const RunConfig& cfg, std::ostream& out);
int cmd_certify(const RunConfig& cfg, std::ostream& out);
int cmd_identity(const RunConfig& cfg, std::ostream& out);
int cmd_az(const RunConfig& cfg, std::ostream& out);
int cmd_tp(const RunConfig& cfg, std::ostream& out);
int cmd_search(const RunConfig& cfg, std::ostream& out);
int cmd_catalog(const RunConfig& cfg, std::ostream& out);

// Table-mode matrix rendering; lower-triangular matrices drop the
// zeros above the last nonzero entry of each row, the way triangles
// are usually displayed.
std::string render_matrix(const Mat& m, OutputFormat format);

}  // namespace rtp
