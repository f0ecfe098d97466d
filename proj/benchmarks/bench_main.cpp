#include <benchmark/benchmark.h>

// Own main: the distro's benchmark_main archive is LTO bytecode tied to one
// compiler release.
BENCHMARK_MAIN();
