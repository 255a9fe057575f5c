#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qtor/qscalar.hpp"

namespace qtor {

struct SourcePos {
    int line = 1;
    int col = 1;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, SourcePos p)
        : std::runtime_error(msg + " at line " + std::to_string(p.line) + ", col " +
                             std::to_string(p.col)),
          pos(p) {}
    SourcePos pos;
};

// value := integer | signed monomial (q^-2, -q^1/2, -1) | range a..b
//        | list [v, ...] | identifier | basis(deg<=N[, lat<=K])
struct Value {
    enum class Kind { Int, Mono, Range, List, Ident, Basis };
    Kind kind = Kind::Int;
    long long i = 0;          // Int
    Unit mono;                // Mono
    long long lo = 0, hi = 0; // Range
    std::vector<Value> list;  // List
    std::string ident;        // Ident
    int basis_deg = 0;        // Basis
    int basis_lat = 0;

    bool operator==(const Value& o) const;
    std::string to_string() const;
};

struct CheckStmt {
    std::string name;
    std::vector<std::pair<std::string, Value>> args;
    SourcePos pos;

    bool operator==(const CheckStmt& o) const {
        return name == o.name && args == o.args;
    }
    const Value* find(const std::string& key) const;
};

struct Script {
    std::vector<CheckStmt> checks;
    bool operator==(const Script& o) const { return checks == o.checks; }
};

// stmt := "check" IDENT "{" (key "=" value)* "}" ; "#" comments; statements
// newline-separated. Throws ParseError with position on malformed input.
Script parse_script(const std::string& text);

// Canonical text form; parse_script(print_script(s)) == s.
std::string print_script(const Script& s);

}  // namespace qtor
