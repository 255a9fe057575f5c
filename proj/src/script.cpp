#include "qtor/script.hpp"

#include <cctype>
#include <sstream>

namespace qtor {

bool Value::operator==(const Value& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Int: return i == o.i;
        case Kind::Mono: return mono == o.mono;
        case Kind::Range: return lo == o.lo && hi == o.hi;
        case Kind::List: return list == o.list;
        case Kind::Ident: return ident == o.ident;
        case Kind::Basis: return basis_deg == o.basis_deg && basis_lat == o.basis_lat;
    }
    return false;
}

std::string Value::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Int: os << i; break;
        case Kind::Mono: {
            if (mono.neg) os << "-";
            os << "q";
            if (mono.vexp != 2) {
                os << "^";
                if (mono.vexp % 2 == 0) os << mono.vexp / 2;
                else os << mono.vexp << "/2";
            }
            break;
        }
        case Kind::Range: os << lo << ".." << hi; break;
        case Kind::List: {
            os << "[";
            for (std::size_t k = 0; k < list.size(); ++k)
                os << (k ? "," : "") << list[k].to_string();
            os << "]";
            break;
        }
        case Kind::Ident: os << ident; break;
        case Kind::Basis:
            os << "basis(deg<=" << basis_deg;
            if (basis_lat != 0) os << ",lat<=" << basis_lat;
            os << ")";
            break;
    }
    return os.str();
}

const Value* CheckStmt::find(const std::string& key) const {
    for (const auto& [k, v] : args)
        if (k == key) return &v;
    return nullptr;
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    SourcePos at;

    explicit Lexer(const std::string& t) : text(t) {}

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    char peek2() const { return pos + 1 < text.size() ? text[pos + 1] : '\0'; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') { at.line += 1; at.col = 1; }
        else at.col += 1;
        return c;
    }

    void skip_space_and_comments(bool stop_at_newline) {
        while (pos < text.size()) {
            char c = peek();
            if (c == '#') {
                while (pos < text.size() && peek() != '\n') advance();
            } else if (c == '\n') {
                if (stop_at_newline) return;
                advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    bool eof() {
        skip_space_and_comments(false);
        return pos >= text.size();
    }

    std::string ident() {
        skip_space_and_comments(false);
        SourcePos start = at;
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            throw ParseError("expected identifier", start);
        std::string s;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            s += advance();
        return s;
    }

    long long integer() {
        skip_space_and_comments(false);
        SourcePos start = at;
        bool neg = false;
        if (peek() == '-') { neg = true; advance(); }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer", start);
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (advance() - '0');
        return neg ? -v : v;
    }

    void expect(char c) {
        skip_space_and_comments(false);
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", at);
        advance();
    }

    bool accept(char c) {
        skip_space_and_comments(false);
        if (peek() != c) return false;
        advance();
        return true;
    }
};

// exponent of q: integer or odd/2; returned in halves of q == v-exponent
int parse_q_exponent(Lexer& lx) {
    SourcePos start = lx.at;
    long long num = lx.integer();
    if (lx.accept('/')) {
        long long den = lx.integer();
        if (den != 2) throw ParseError("only half-integer q-powers are supported", start);
        if (num % 2 == 0)
            throw ParseError("use an integer exponent instead of an even half", start);
        return static_cast<int>(num);
    }
    return static_cast<int>(2 * num);
}

Value parse_value(Lexer& lx) {
    lx.skip_space_and_comments(false);
    SourcePos start = lx.at;
    Value v;
    char c = lx.peek();
    if (c == '[') {
        lx.advance();
        v.kind = Value::Kind::List;
        if (!lx.accept(']')) {
            v.list.push_back(parse_value(lx));
            while (lx.accept(',')) v.list.push_back(parse_value(lx));
            lx.expect(']');
        }
        return v;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        bool neg = (c == '-');
        if (neg) {
            // "-q..." monomial or negative number
            if (lx.peek2() == 'q') {
                lx.advance();
                lx.expect('q');
                v.kind = Value::Kind::Mono;
                v.mono = Unit{true, 2};
                if (lx.accept('^')) v.mono.vexp = parse_q_exponent(lx);
                return v;
            }
        }
        long long n = lx.integer();
        lx.skip_space_and_comments(true);
        if (lx.peek() == '.' && lx.peek2() == '.') {
            lx.advance();
            lx.advance();
            v.kind = Value::Kind::Range;
            v.lo = n;
            v.hi = lx.integer();
            if (v.hi < v.lo) throw ParseError("empty range", start);
            return v;
        }
        v.kind = Value::Kind::Int;
        v.i = n;
        return v;
    }
    if (c == 'q' && !std::isalnum(static_cast<unsigned char>(lx.peek2())) &&
        lx.peek2() != '_') {
        lx.advance();
        v.kind = Value::Kind::Mono;
        v.mono = Unit{false, 2};
        if (lx.accept('^')) v.mono.vexp = parse_q_exponent(lx);
        return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id = lx.ident();
        if (id == "basis" && lx.accept('(')) {
            v.kind = Value::Kind::Basis;
            bool saw_deg = false;
            do {
                std::string key = lx.ident();
                lx.expect('<');
                lx.expect('=');
                long long n = lx.integer();
                if (key == "deg") { v.basis_deg = static_cast<int>(n); saw_deg = true; }
                else if (key == "lat") v.basis_lat = static_cast<int>(n);
                else throw ParseError("unknown basis constraint '" + key + "'", start);
            } while (lx.accept(','));
            lx.expect(')');
            if (!saw_deg) throw ParseError("basis(...) requires deg<=N", start);
            return v;
        }
        v.kind = Value::Kind::Ident;
        v.ident = id;
        return v;
    }
    throw ParseError("expected a value", start);
}

}  // namespace

Script parse_script(const std::string& text) {
    Script s;
    Lexer lx(text);
    while (!lx.eof()) {
        SourcePos start = lx.at;
        std::string kw = lx.ident();
        if (kw != "check")
            throw ParseError("expected 'check', got '" + kw + "'", start);
        CheckStmt stmt;
        stmt.pos = start;
        stmt.name = lx.ident();
        lx.expect('{');
        while (!lx.accept('}')) {
            std::string key = lx.ident();
            lx.expect('=');
            Value v = parse_value(lx);
            stmt.args.emplace_back(key, v);
        }
        s.checks.push_back(std::move(stmt));
    }
    return s;
}

std::string print_script(const Script& s) {
    std::ostringstream os;
    for (const auto& c : s.checks) {
        os << "check " << c.name << " {";
        for (const auto& [k, v] : c.args) os << " " << k << "=" << v.to_string();
        os << " }\n";
    }
    return os.str();
}

}  // namespace qtor
