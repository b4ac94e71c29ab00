#pragma once

namespace ces {

// Entry point behind the `ces` binary. Returns 0 for affirmative outcomes,
// 1 for negative decisions, 2 for usage or input errors.
int cli_main(int argc, const char* const* argv);

}  // namespace ces
