#pragma once

namespace upbkit {

// Full command-line driver. Exit codes: 0 affirmative verdict or success,
// 1 negative verdict, 2 usage or input-format error, 3 infeasible (search
// capped or pattern unrealizable).
int run_cli(int argc, char** argv);

}  // namespace upbkit
