#pragma once

namespace sic {

/* Full command-line front end. Returns the process exit code: 0 success,
 * 1 a validation failed, 2 flag/config/input parse errors. */
int run_cli(int argc, const char* const* argv);

}  // namespace sic
