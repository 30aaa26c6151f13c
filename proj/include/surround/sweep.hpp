#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "surround/solver.hpp"

namespace surround {

// One generalized Petersen cell gp(n, k); valid when n > 2k and k >= 1.
struct SweepCell {
    int n = 0;
    int k = 0;
    int number = 0;        // meaningful only when status == "ok"
    double seconds = 0.0;
    std::string status;    // "ok" or "budget"
};

struct SweepOptions {
    int nmax = 12;
    int kmax = 0;    // 0 = only the n > 2k constraint
    Variant variant = Variant::surround;
    int workers = 1;
    // Zero the seconds column so output is byte-identical across runs and
    // worker counts.
    bool stable = false;
    std::uint64_t config_budget = 5'000'000;
};

// All valid (n, k) cells with 3 <= n <= nmax, ordered by n then k.
std::vector<std::pair<int, int>> sweep_cells(int nmax, int kmax = 0);

// Computes every cell, optionally in parallel. When out_path is nonempty the
// CSV is rewritten (complete and sorted) after each finished cell, and rows
// already present in the file with status "ok" are kept instead of being
// recomputed, so an interrupted sweep resumes where it stopped. Returns the
// full sorted table. `log` receives one line per computed cell.
std::vector<SweepCell> run_sweep(const SweepOptions& opts, const std::string& out_path,
                                 std::ostream* log = nullptr);

// CSV I/O. Format: header "n,k,number,seconds,status", '#' comments allowed.
std::vector<SweepCell> read_sweep_csv(const std::string& path);
std::string format_sweep_csv(const std::vector<SweepCell>& cells);
void write_sweep_csv(const std::string& path, const std::vector<SweepCell>& cells);

// Reference tables bundled as "n,k,number" CSV (header and '#' comments
// allowed). Returns rows in file order.
std::vector<SweepCell> read_reference_csv(const std::string& path);

struct CompareReport {
    int compared = 0;             // computed ok-cells with a reference value
    int matched = 0;
    int mismatched = 0;
    int missing_reference = 0;    // computed ok-cells absent from the reference
    std::vector<std::string> mismatch_lines;
};

CompareReport compare_sweep(const std::vector<SweepCell>& computed,
                            const std::vector<SweepCell>& reference);

}  // namespace surround
