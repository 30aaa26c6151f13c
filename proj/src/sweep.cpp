#include "surround/sweep.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "surround/errors.hpp"
#include "surround/families.hpp"
#include "surround/record.hpp"

namespace surround {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

int parse_int_field(const std::string& s, const std::string& what) {
    int value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || p != s.data() + s.size()) {
        throw parse_error("bad " + what + " field in sweep csv: '" + s + "'");
    }
    return value;
}

double parse_double_field(const std::string& s, const std::string& what) {
    double value = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || p != s.data() + s.size()) {
        throw parse_error("bad " + what + " field in sweep csv: '" + s + "'");
    }
    return value;
}

// Strips an inline '#' comment and surrounding whitespace; empty result means
// the line carries no data.
std::string data_part(const std::string& line) {
    std::size_t hash = line.find('#');
    return trim(hash == std::string::npos ? line : line.substr(0, hash));
}

}  // namespace

std::vector<std::pair<int, int>> sweep_cells(int nmax, int kmax) {
    std::vector<std::pair<int, int>> cells;
    for (int n = 3; n <= nmax; ++n) {
        for (int k = 1; 2 * k < n; ++k) {
            if (kmax > 0 && k > kmax) break;
            cells.emplace_back(n, k);
        }
    }
    return cells;
}

std::vector<SweepCell> read_sweep_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open sweep csv: " + path);
    std::vector<SweepCell> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string data = data_part(line);
        if (data.empty()) continue;
        std::vector<std::string> f = split_csv(data);
        if (f[0] == "n") continue;    // header
        if (f.size() != 5) throw parse_error("expected 5 fields in sweep csv row: '" + data + "'");
        SweepCell c;
        c.n = parse_int_field(f[0], "n");
        c.k = parse_int_field(f[1], "k");
        c.number = parse_int_field(f[2], "number");
        c.seconds = parse_double_field(f[3], "seconds");
        c.status = f[4];
        out.push_back(std::move(c));
    }
    return out;
}

std::string format_sweep_csv(const std::vector<SweepCell>& cells) {
    std::string out = "n,k,number,seconds,status\n";
    char buf[128];
    for (const SweepCell& c : cells) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.3f,%s\n", c.n, c.k, c.number, c.seconds,
                      c.status.c_str());
        out += buf;
    }
    return out;
}

void write_sweep_csv(const std::string& path, const std::vector<SweepCell>& cells) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream outf(tmp, std::ios::trunc);
        if (!outf) throw std::runtime_error("cannot write sweep csv: " + path);
        outf << format_sweep_csv(cells);
    }
    std::filesystem::rename(tmp, path);
}

std::vector<SweepCell> read_reference_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open reference csv: " + path);
    std::vector<SweepCell> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string data = data_part(line);
        if (data.empty()) continue;
        std::vector<std::string> f = split_csv(data);
        if (f[0] == "n") continue;    // header
        if (f.size() != 3) {
            throw parse_error("expected 3 fields in reference csv row: '" + data + "'");
        }
        SweepCell c;
        c.n = parse_int_field(f[0], "n");
        c.k = parse_int_field(f[1], "k");
        c.number = parse_int_field(f[2], "number");
        c.status = "ok";
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<SweepCell> run_sweep(const SweepOptions& opts, const std::string& out_path,
                                 std::ostream* log) {
    const std::vector<std::pair<int, int>> cells = sweep_cells(opts.nmax, opts.kmax);

    // Resume: rows already finished in the output file are kept as-is.
    std::map<std::pair<int, int>, SweepCell> done;
    if (!out_path.empty() && std::filesystem::exists(out_path)) {
        for (SweepCell& c : read_sweep_csv(out_path)) {
            if (c.status == "ok") done[{c.n, c.k}] = c;
        }
    }

    std::vector<std::optional<SweepCell>> results(cells.size());
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto it = done.find(cells[i]);
        if (it != done.end()) {
            results[i] = it->second;
            if (opts.stable) results[i]->seconds = 0.0;
        } else {
            todo.push_back(i);
        }
    }

    std::mutex mu;
    std::exception_ptr first_error;
    auto flush_locked = [&]() {
        if (out_path.empty()) return;
        std::vector<SweepCell> filled;
        for (const auto& r : results) {
            if (r) filled.push_back(*r);
        }
        write_sweep_csv(out_path, filled);
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t slot = next.fetch_add(1);
            if (slot >= todo.size()) return;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (first_error) return;
            }
            const std::size_t idx = todo[slot];
            const auto [n, k] = cells[idx];
            SweepCell cell;
            cell.n = n;
            cell.k = k;
            auto t0 = std::chrono::steady_clock::now();
            try {
                Graph g = generalized_petersen(n, k);
                SolveOptions so;
                so.config_budget = opts.config_budget;
                GameNumberResult res = game_number(g, opts.variant, so);
                cell.number = res.number;
                cell.status = "ok";
            } catch (const budget_error&) {
                cell.number = 0;
                cell.status = "budget";
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
            cell.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::lock_guard<std::mutex> lock(mu);
            if (log) {
                *log << "gp(" << n << "," << k << ") " << variant_name(opts.variant);
                if (cell.status == "ok") {
                    char buf[64];
                    std::snprintf(buf, sizeof(buf), " = %d (%.2fs)\n", cell.number, cell.seconds);
                    *log << buf;
                } else {
                    *log << ": config budget exceeded\n";
                }
            }
            if (opts.stable) cell.seconds = 0.0;
            results[idx] = cell;
            flush_locked();
        }
    };

    const int nworkers = std::max(1, opts.workers);
    if (nworkers == 1 || todo.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nworkers));
        for (int i = 0; i < nworkers; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<SweepCell> out;
    out.reserve(cells.size());
    for (const auto& r : results) out.push_back(*r);
    return out;
}

CompareReport compare_sweep(const std::vector<SweepCell>& computed,
                            const std::vector<SweepCell>& reference) {
    std::map<std::pair<int, int>, int> ref;
    for (const SweepCell& c : reference) ref[{c.n, c.k}] = c.number;
    CompareReport rep;
    for (const SweepCell& c : computed) {
        if (c.status != "ok") continue;
        auto it = ref.find({c.n, c.k});
        if (it == ref.end()) {
            ++rep.missing_reference;
            continue;
        }
        ++rep.compared;
        if (c.number == it->second) {
            ++rep.matched;
        } else {
            ++rep.mismatched;
            std::ostringstream os;
            os << "gp(" << c.n << "," << c.k << "): computed " << c.number << ", reference "
               << it->second;
            rep.mismatch_lines.push_back(os.str());
        }
    }
    return rep;
}

}  // namespace surround
