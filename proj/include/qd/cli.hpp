#pragma once

namespace qd {

/* Command-line dispatch. Exit codes: 0 every requested check passed,
 * 1 a verification failed (certificate / audit / drift), 2 usage or
 * input error. */
int run_cli(int argc, char** argv);

}  // namespace qd
