#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cli/report.hpp"
#include "cli/spec_file.hpp"

namespace curvefol::cli {

enum ExitCode { kSuccess = 0, kInvalid = 1, kMismatch = 2 };

struct GridRanges {
  std::vector<long> n{3, 4, 5};
  std::vector<long> k{1, 2, 3, 4, 5};
  std::vector<long> ell{0, 1, 2, 3};
  std::vector<long> d{1, 2, 3, 4};
  std::vector<long> g{0, 1, 2, 3};

  std::size_t size() const { return n.size() * k.size() * ell.size() * d.size() * g.size(); }
};

/// "3", "1..5" or "0,2,7". Throws ValidationError otherwise.
std::vector<long> parse_range(const std::string& text);

Report cmd_analyze(const SpecFile& spec);
Report cmd_blowup(const SpecFile& spec, std::size_t chart);
Report cmd_count(const SpecFile& spec);
Report cmd_formulas(const SpecFile& spec);
Report cmd_chow_verify(const GridRanges& grid, const std::optional<SpecFile>& spec);
Report cmd_deform(const SpecFile& spec);

}  // namespace curvefol::cli
