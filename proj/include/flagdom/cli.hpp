#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flagdom {

constexpr const char *kSchemaVersion = "1";

// Exit codes: 0 ok, 1 validation error, 2 verification failure.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace flagdom
