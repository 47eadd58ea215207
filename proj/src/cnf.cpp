#include "outpart/cnf.hpp"

#include <sstream>

namespace outpart {

void CnfFormula::validate() const {
    if (vars < 0) throw parse_error(parse_error::kind::bad_header, "negative variable count");
    for (const auto& clause : clauses) {
        if (mode == CnfMode::plain3sat && clause.size() != 3)
            throw parse_error(parse_error::kind::bad_arity,
                              "plain 3-SAT clause must have exactly 3 literals, got " +
                                  std::to_string(clause.size()));
        for (const auto& lit : clause) {
            if (lit.var < 0 || lit.var >= vars)
                throw parse_error(parse_error::kind::bad_literal,
                                  "literal out of range: " + std::to_string(lit.var + 1));
            if (mode == CnfMode::monotone_nae && !lit.positive)
                throw parse_error(parse_error::kind::bad_literal,
                                  "monotone NAE clause contains a negated literal");
        }
    }
}

CnfFormula parse_dimacs(const std::string& text, CnfMode mode) {
    std::istringstream is(text);
    std::string token;
    CnfFormula f;
    f.mode = mode;
    long long declared_clauses = -1;

    while (is >> token) {
        if (token == "c") {
            std::string rest;
            std::getline(is, rest);
            continue;
        }
        if (token == "p") {
            std::string fmt;
            long long n, m;
            if (!(is >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
                throw parse_error(parse_error::kind::bad_header, "malformed DIMACS header");
            f.vars = static_cast<int>(n);
            declared_clauses = m;
            continue;
        }
        if (declared_clauses < 0)
            throw parse_error(parse_error::kind::bad_header, "clause data before \"p cnf\" header");
        // token is the first literal of a clause
        Clause clause;
        long long lit;
        try {
            lit = std::stoll(token);
        } catch (const std::exception&) {
            throw parse_error(parse_error::kind::bad_literal, "malformed literal: \"" + token + "\"");
        }
        while (lit != 0) {
            const long long var = lit > 0 ? lit : -lit;
            if (var > f.vars)
                throw parse_error(parse_error::kind::bad_literal,
                                  "literal " + std::to_string(lit) + " out of declared range");
            clause.push_back(Literal{static_cast<int>(var - 1), lit > 0});
            if (!(is >> lit))
                throw parse_error(parse_error::kind::malformed_line, "clause not terminated by 0");
        }
        f.clauses.push_back(std::move(clause));
    }
    if (declared_clauses < 0) throw parse_error(parse_error::kind::bad_header, "missing DIMACS header");
    if (static_cast<long long>(f.clauses.size()) != declared_clauses)
        throw parse_error(parse_error::kind::bad_header,
                          "header declares " + std::to_string(declared_clauses) + " clauses, got " +
                              std::to_string(f.clauses.size()));
    f.validate();
    return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
    std::ostringstream os;
    os << "p cnf " << f.vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (const auto& lit : clause) os << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << ' ';
        os << "0\n";
    }
    return os.str();
}

bool clause_satisfied(const Clause& clause, const std::vector<bool>& assignment, CnfMode mode) {
    if (mode == CnfMode::plain3sat) {
        for (const auto& lit : clause)
            if (assignment[lit.var] == lit.positive) return true;
        return false;
    }
    // NAE: needs both a true and a false variable.
    bool any_true = false, any_false = false;
    for (const auto& lit : clause) (assignment[lit.var] ? any_true : any_false) = true;
    return any_true && any_false;
}

}  // namespace outpart
