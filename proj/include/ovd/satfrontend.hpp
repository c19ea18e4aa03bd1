#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "ovd/ovcore.hpp"

namespace ovd {

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;  // signed DIMACS literals, never empty
};

/// Standard DIMACS CNF: 'c' comments, "p cnf V C" header, 0-terminated
/// clauses. Errors carry the offending line number.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_file(const std::string& path);

inline constexpr int kMaxSplitVars = 24;

/// Splits the variables into four nearly-equal groups (in index order) and
/// lists one vector per partial assignment: coordinate per clause, 0 iff the
/// partial assignment already satisfies it.
std::array<std::vector<BitVector>, 4> split_and_list(const CnfFormula& formula, int k = 4);

/// Appends four group-gadget coordinates (vector of group g is 0 exactly at
/// gadget position g), concatenates and deduplicates. Orthogonal quadruples
/// of the result take exactly one vector per group.
OvInstance merge_groups(const std::array<std::vector<BitVector>, 4>& lists);

/// Exhaustive satisfiability oracle, capped at kMaxSplitVars variables.
bool brute_force_sat(const CnfFormula& formula);

}  // namespace ovd
