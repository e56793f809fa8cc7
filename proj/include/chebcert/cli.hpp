#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chebcert {

enum class OutputFormat { markdown, csv, json };

struct CliConfig {
  int precision = 40;
  int digits = 12;
  OutputFormat format = OutputFormat::markdown;
};

/// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_table(unsigned max_nu, const CliConfig& cfg, std::ostream& out);
int cmd_sup(unsigned nu, const CliConfig& cfg, std::ostream& out);
int cmd_poly(const std::string& kind, unsigned k, const CliConfig& cfg, std::ostream& out);
int cmd_certify(unsigned nu_max, const CliConfig& cfg, std::ostream& out);

}  // namespace chebcert
