#pragma once

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "homlab/errors.hpp"

namespace homlab {

enum class CnfDialect { three_sat, pos_nae_3sat };

/// Clauses of signed literals over variables 1..variables.
struct CnfFormula {
    int variables = 0;
    std::vector<std::vector<int>> clauses;
    CnfDialect dialect = CnfDialect::three_sat;

    int occurrences(int var) const {
        int c = 0;
        for (const auto& cl : clauses)
            for (int lit : cl)
                c += std::abs(lit) == var;
        return c;
    }

    bool has_both_polarities(int var) const {
        bool pos = false, neg = false;
        for (const auto& cl : clauses)
            for (int lit : cl) {
                pos |= lit == var;
                neg |= lit == -var;
            }
        return pos && neg;
    }

    int clause_count(std::size_t size) const {
        return static_cast<int>(std::count_if(clauses.begin(), clauses.end(),
                                              [&](const auto& c) { return c.size() == size; }));
    }

    /// Does the 0/1 assignment (index 1..variables) satisfy every clause in this dialect?
    bool satisfied_by(const std::vector<bool>& value) const {
        for (const auto& cl : clauses) {
            bool some_true = false, some_false = false;
            for (int lit : cl) {
                bool v = value[std::abs(lit)] == (lit > 0);
                (v ? some_true : some_false) = true;
            }
            if (!some_true || (dialect == CnfDialect::pos_nae_3sat && !some_false))
                return false;
        }
        return true;
    }
};

namespace cnf_detail {
inline void require(bool ok, const std::string& msg) {
    if (!ok)
        throw InvalidInstance(msg);
}

inline void check_literals(const CnfFormula& f) {
    require(f.variables >= 0, "variable count must be non-negative");
    for (const auto& cl : f.clauses)
        for (int lit : cl)
            require(lit != 0 && std::abs(lit) <= f.variables, "literal out of range: " + std::to_string(lit));
}
} // namespace cnf_detail

/// Positive clauses of 2 or 3 distinct variables, no clause repeated.
inline void validate_pos_nae(const CnfFormula& f) {
    cnf_detail::check_literals(f);
    std::vector<std::vector<int>> seen;
    for (auto cl : f.clauses) {
        cnf_detail::require(cl.size() == 2 || cl.size() == 3, "NAE clauses need 2 or 3 variables");
        for (int lit : cl)
            cnf_detail::require(lit > 0, "NAE clauses must be all positive");
        std::sort(cl.begin(), cl.end());
        cnf_detail::require(std::adjacent_find(cl.begin(), cl.end()) == cl.end(), "NAE clause repeats a variable");
        cnf_detail::require(std::find(seen.begin(), seen.end(), cl) == seen.end(), "NAE clauses must be distinct");
        seen.push_back(cl);
    }
}

/// Clauses of 1..3 literals (exactly 3 when `exactly_three`), each variable in both polarities.
inline void validate_three_sat(const CnfFormula& f, bool exactly_three = false) {
    cnf_detail::check_literals(f);
    for (const auto& cl : f.clauses) {
        cnf_detail::require(!cl.empty() && cl.size() <= 3, "clauses need 1 to 3 literals");
        cnf_detail::require(!exactly_three || cl.size() == 3, "clauses need exactly 3 literals");
    }
    for (int v = 1; v <= f.variables; ++v)
        cnf_detail::require(f.has_both_polarities(v),
                            "variable " + std::to_string(v) + " must occur both positively and negatively");
}

/// DIMACS: comment lines `c ...`, header `p cnf <vars> <clauses>`, clauses terminated by 0.
inline CnfFormula parse_dimacs(std::istream& in, CnfDialect dialect = CnfDialect::three_sat) {
    CnfFormula f;
    f.dialect = dialect;
    std::string line;
    bool header = false;
    int expected = 0;
    std::vector<int> current;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c" || tok[0] == '%')
            continue;
        if (tok == "p") {
            std::string kind;
            if (header || !(ls >> kind >> f.variables >> expected) || kind != "cnf" || f.variables < 0 || expected < 0)
                throw MalformedInput("bad DIMACS header: " + line);
            header = true;
            continue;
        }
        if (!header)
            throw MalformedInput("clause before DIMACS header");
        ls.clear();
        ls.str(line);
        long long lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(current);
                current.clear();
            } else {
                if (std::llabs(lit) > f.variables)
                    throw MalformedInput("literal out of range: " + std::to_string(lit));
                current.push_back(static_cast<int>(lit));
            }
        }
        if (!ls.eof())
            throw MalformedInput("bad clause line: " + line);
    }
    if (!header)
        throw MalformedInput("missing DIMACS header");
    if (!current.empty())
        f.clauses.push_back(current);
    if (static_cast<int>(f.clauses.size()) != expected)
        throw MalformedInput("DIMACS header promises " + std::to_string(expected) + " clauses, found " +
                             std::to_string(f.clauses.size()));
    if (dialect == CnfDialect::pos_nae_3sat)
        for (const auto& cl : f.clauses)
            for (int lit : cl)
                if (lit < 0)
                    throw MalformedInput("negative literal in a positive NAE formula");
    return f;
}

inline void write_dimacs(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses) {
        for (int lit : cl)
            out << lit << ' ';
        out << "0\n";
    }
}

} // namespace homlab
