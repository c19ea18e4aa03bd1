#include "ovd/satfrontend.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

namespace ovd {

namespace {

void check_var_cap(const CnfFormula& f) {
    if (f.num_vars > kMaxSplitVars)
        throw ParameterError("formula has " + std::to_string(f.num_vars) +
                             " variables, cap is " + std::to_string(kMaxSplitVars));
}

// Variable group of the 4-split: the first (V mod 4) groups take ceil(V/4)
// variables, the rest floor(V/4), variables assigned in index order.
std::array<std::pair<int, int>, 4> group_bounds(int num_vars) {
    std::array<std::pair<int, int>, 4> bounds;
    int var = 1;
    for (int g = 0; g < 4; ++g) {
        const int size = num_vars / 4 + (g < num_vars % 4 ? 1 : 0);
        bounds[g] = {var, var + size};
        var += size;
    }
    return bounds;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    int expected_clauses = -1;
    std::vector<int> current;
    bool in_clause = false;
    std::string line;
    int lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok)) continue;
        if (tok[0] == 'c') continue;
        if (tok == "p") {
            if (expected_clauses >= 0) throw ParseError("duplicate header", lineno);
            std::string fmt;
            if (!(tokens >> fmt) || fmt != "cnf") throw ParseError("expected 'p cnf V C'", lineno);
            if (!(tokens >> f.num_vars >> expected_clauses) || f.num_vars < 0 ||
                expected_clauses < 0)
                throw ParseError("bad 'p cnf' counts", lineno);
            continue;
        }
        if (expected_clauses < 0) throw ParseError("clause before 'p cnf' header", lineno);
        // Literal tokens; 0 terminates a clause.
        tokens.clear();
        tokens.str(line);
        int lit;
        while (tokens >> lit) {
            if (lit == 0) {
                if (current.empty()) throw ParseError("empty clause", lineno);
                f.clauses.push_back(current);
                current.clear();
                in_clause = false;
            } else {
                if (std::abs(lit) > f.num_vars)
                    throw ParseError("literal " + std::to_string(lit) + " out of range", lineno);
                current.push_back(lit);
                in_clause = true;
            }
        }
        if (tokens.fail() && !tokens.eof()) throw ParseError("bad literal token", lineno);
    }
    if (expected_clauses < 0) throw ParseError("missing 'p cnf' header", lineno);
    if (in_clause) throw ParseError("unterminated clause at end of input", lineno);
    if (static_cast<int>(f.clauses.size()) != expected_clauses)
        throw ParseError("clause count mismatch: header says " + std::to_string(expected_clauses) +
                             ", found " + std::to_string(f.clauses.size()),
                         lineno);
    return f;
}

CnfFormula parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_dimacs(in);
}

std::array<std::vector<BitVector>, 4> split_and_list(const CnfFormula& formula, int k) {
    if (k != 4) throw ParameterError("only the 4-split is supported");
    check_var_cap(formula);
    const int num_clauses = static_cast<int>(formula.clauses.size());
    if (num_clauses < 1) throw ParameterError("formula needs at least one clause");
    if (num_clauses > 60) throw ParameterError("clause count cap is 60");

    const auto bounds = group_bounds(formula.num_vars);
    std::array<std::vector<BitVector>, 4> lists;
    for (int g = 0; g < 4; ++g) {
        const auto [lo, hi] = bounds[g];
        const int size = hi - lo;
        for (std::uint32_t assignment = 0; assignment < (1u << size); ++assignment) {
            // Variable lo + t is true iff bit t of the assignment counter is set.
            std::uint64_t coords = 0;
            for (int c = 0; c < num_clauses; ++c) {
                bool satisfied = false;
                for (int lit : formula.clauses[c]) {
                    const int var = std::abs(lit);
                    if (var < lo || var >= hi) continue;
                    const bool value = (assignment >> (var - lo)) & 1;
                    if (value == (lit > 0)) {
                        satisfied = true;
                        break;
                    }
                }
                if (!satisfied) coords |= 1ull << c;
            }
            lists[g].emplace_back(coords, num_clauses);
        }
    }
    return lists;
}

OvInstance merge_groups(const std::array<std::vector<BitVector>, 4>& lists) {
    int num_clauses = -1;
    for (const auto& list : lists) {
        for (const auto& v : list) {
            if (num_clauses < 0) num_clauses = v.length();
            if (v.length() != num_clauses) throw DimensionError("mixed vector lengths across groups");
        }
    }
    if (num_clauses < 0) throw ParameterError("all groups are empty");

    std::vector<BitVector> merged;
    for (int g = 0; g < 4; ++g) {
        // Gadget coordinates: 1 everywhere except at this group's position.
        std::uint64_t gadget = 0xfull & ~(1ull << g);
        for (const auto& v : lists[g])
            merged.emplace_back(v.mask() | (gadget << num_clauses), num_clauses + 4);
    }
    return OvInstance::from_vectors(std::move(merged));
}

bool brute_force_sat(const CnfFormula& formula) {
    check_var_cap(formula);
    const std::uint64_t total = 1ull << formula.num_vars;
    for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
        bool ok = true;
        for (const auto& clause : formula.clauses) {
            bool satisfied = false;
            for (int lit : clause) {
                const bool value = (assignment >> (std::abs(lit) - 1)) & 1;
                if (value == (lit > 0)) {
                    satisfied = true;
                    break;
                }
            }
            if (!satisfied) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace ovd
