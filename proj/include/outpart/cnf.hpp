#pragma once

#include <string>
#include <vector>

#include "outpart/digraph.hpp"

namespace outpart {

struct Literal {
    int var = 0;  // 0-based
    bool positive = true;

    bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

enum class CnfMode { plain3sat, monotone_nae };

/// Clauses over boolean variables. plain3sat: exactly 3 literals per clause.
/// monotone_nae: positive literals only; a clause is satisfied when its
/// variables are not all equal. The clause width for NAE is the caller's
/// business (the reductions fix it).
struct CnfFormula {
    int vars = 0;
    std::vector<Clause> clauses;
    CnfMode mode = CnfMode::plain3sat;

    void validate() const;  // throws parse_error on mode violations
};

/// DIMACS CNF: "p cnf n m" header, m clauses terminated by 0. Comment lines
/// start with 'c'. The mode is the caller's flag, never inferred.
CnfFormula parse_dimacs(const std::string& text, CnfMode mode);

std::string serialize_dimacs(const CnfFormula& f);

bool clause_satisfied(const Clause& clause, const std::vector<bool>& assignment, CnfMode mode);

}  // namespace outpart
