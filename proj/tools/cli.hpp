#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tame {

/* Runs one `tame` invocation; args exclude the program name.  Reports go to
   `out`, errors as JSON objects to `err`.  Returns the process exit code:
   0 success, 1 usage or input error, 2 verification failure. */
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/* Exit code for a library error code string. */
int exit_code_for(const std::string& error_code);

}  // namespace tame
