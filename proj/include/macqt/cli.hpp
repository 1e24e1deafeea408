// Command-line front end: compute expansions, query structure
// constants, apply lattice operators, run the identity suites, and
// benchmark the two table-building algorithms. Deterministic output;
// exit codes: 0 success, 1 failed identity, 2 usage error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace macqt {

struct BenchRow {
    int n = 0;
    std::string algo;
    long long millis = 0;
    std::size_t table_entries = 0;
};

/// Time the full coefficient table per degree, cold caches:
/// algo "bh" uses the one-cell recursion pipeline, "oracle" the
/// eigen-decomposition route.
std::vector<BenchRow> run_bench(int max_n, const std::string& algo);

/// Entry point used by the binary and by tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace macqt
