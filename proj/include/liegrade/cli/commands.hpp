#pragma once

#include "liegrade/cli/config.hpp"

namespace liegrade::cli {

// Dispatches on c.command. Errors propagate as InvalidInput,
// PreconditionFailed, VerificationFailure or InternalError.
Report run(const JobConfig& c);

// Every check tied to a value stated in the source text, plus the witness
// data of the Cayley examples. Checks are sorted by id.
Report verify_paper(std::uint64_t seed = 0);

enum ExitCode { exit_ok = 0, exit_verification = 1, exit_invalid = 2 };

}  // namespace liegrade::cli
