#include "cspace/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cspace {

Formula Formula::make(Kind k, std::vector<Formula> kids) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->kids = std::move(kids);
    return Formula(std::move(n));
}

Formula Formula::var(std::string name) {
    if (name.empty()) throw UsageError("variable name must be nonempty");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->name = std::move(name);
    return Formula(std::move(n));
}

Formula Formula::negate(Formula f) { return make(Kind::Not, {std::move(f)}); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, {std::move(a), std::move(b)}); }
Formula Formula::implies(Formula a, Formula b) { return make(Kind::Implies, {std::move(a), std::move(b)}); }
Formula Formula::iff(Formula a, Formula b) { return make(Kind::Iff, {std::move(a), std::move(b)}); }

static void collect_vars(const Formula& f, std::vector<std::string>& out) {
    if (f.kind() == Formula::Kind::Var) {
        if (std::find(out.begin(), out.end(), f.var_name()) == out.end())
            out.push_back(f.var_name());
        return;
    }
    collect_vars(f.lhs(), out);
    if (f.kind() != Formula::Kind::Not) collect_vars(f.rhs(), out);
}

std::vector<std::string> Formula::variables() const {
    std::vector<std::string> out;
    collect_vars(*this, out);
    return out;
}

std::string Formula::print() const {
    switch (kind()) {
        case Kind::Var: return var_name();
        case Kind::Not: return "!" + lhs().print();  // binary operands self-parenthesize
        case Kind::And: return "(" + lhs().print() + " & " + rhs().print() + ")";
        case Kind::Or: return "(" + lhs().print() + " | " + rhs().print() + ")";
        case Kind::Implies: return "(" + lhs().print() + " -> " + rhs().print() + ")";
        case Kind::Iff: return "(" + lhs().print() + " <-> " + rhs().print() + ")";
    }
    throw Error("bad formula node");
}

bool Formula::eval(const std::vector<std::string>& vars, std::uint64_t assignment) const {
    switch (kind()) {
        case Kind::Var: {
            auto it = std::find(vars.begin(), vars.end(), var_name());
            if (it == vars.end())
                throw UsageError("variable '" + var_name() + "' is not in the variable list");
            return (assignment >> (it - vars.begin())) & 1u;
        }
        case Kind::Not: return !lhs().eval(vars, assignment);
        case Kind::And: return lhs().eval(vars, assignment) && rhs().eval(vars, assignment);
        case Kind::Or: return lhs().eval(vars, assignment) || rhs().eval(vars, assignment);
        case Kind::Implies: return !lhs().eval(vars, assignment) || rhs().eval(vars, assignment);
        case Kind::Iff: return lhs().eval(vars, assignment) == rhs().eval(vars, assignment);
    }
    throw Error("bad formula node");
}

// ---------------------------------------------------------------------------
// Parser: recursive descent, one token of lookahead.

namespace {

enum class Tok { Ident, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    Tok tok = Tok::End;
    std::string ident;
    size_t tok_pos = 0;

    explicit Lexer(const std::string& t) : text(t) { advance(); }

    [[noreturn]] void fail(const std::string& msg, size_t at) const {
        std::ostringstream out;
        out << "syntax error at position " << (at + 1) << ": " << msg;
        throw ParseError(out.str(), at + 1);
    }

    void advance() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        tok_pos = pos;
        if (pos >= text.size()) {
            tok = Tok::End;
            return;
        }
        char c = text[pos];
        if (c == '!' || c == '~') { tok = Tok::Not; ++pos; return; }
        if (c == '&') { tok = Tok::And; ++pos; return; }
        if (c == '|') { tok = Tok::Or; ++pos; return; }
        if (c == '(') { tok = Tok::LParen; ++pos; return; }
        if (c == ')') { tok = Tok::RParen; ++pos; return; }
        if (c == '-') {
            if (pos + 1 < text.size() && text[pos + 1] == '>') { tok = Tok::Implies; pos += 2; return; }
            fail("'-' must be part of '->'", pos);
        }
        if (c == '<') {
            if (pos + 2 < text.size() && text[pos + 1] == '-' && text[pos + 2] == '>') {
                tok = Tok::Iff;
                pos += 3;
                return;
            }
            fail("'<' must be part of '<->'", pos);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            tok = Tok::Ident;
            ident = text.substr(start, pos - start);
            return;
        }
        fail(std::string("unexpected character '") + c + "'", pos);
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& text) : lex(text) {}

    Formula parse() {
        if (lex.tok == Tok::End) lex.fail("empty input", 0);
        Formula f = parse_iff();
        if (lex.tok != Tok::End) lex.fail("unexpected trailing input", lex.tok_pos);
        return f;
    }

    Formula parse_iff() {
        Formula f = parse_implies();
        while (lex.tok == Tok::Iff) {
            lex.advance();
            f = Formula::iff(std::move(f), parse_implies());
        }
        return f;
    }

    Formula parse_implies() {  // right-associative
        Formula f = parse_or();
        if (lex.tok == Tok::Implies) {
            lex.advance();
            return Formula::implies(std::move(f), parse_implies());
        }
        return f;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (lex.tok == Tok::Or) {
            lex.advance();
            f = Formula::disj(std::move(f), parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (lex.tok == Tok::And) {
            lex.advance();
            f = Formula::conj(std::move(f), parse_unary());
        }
        return f;
    }

    Formula parse_unary() {
        if (lex.tok == Tok::Not) {
            lex.advance();
            return Formula::negate(parse_unary());
        }
        if (lex.tok == Tok::LParen) {
            lex.advance();
            Formula f = parse_iff();
            if (lex.tok != Tok::RParen) lex.fail("expected ')'", lex.tok_pos);
            lex.advance();
            return f;
        }
        if (lex.tok == Tok::Ident) {
            Formula f = Formula::var(lex.ident);
            lex.advance();
            return f;
        }
        if (lex.tok == Tok::End) lex.fail("unexpected end of input", lex.text.size());
        lex.fail("expected a variable, '!', or '('", lex.tok_pos);
    }
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Truth tables: masks combined bottom-up on 64-bit words.

bool TruthTable::is_zero() const {
    for (auto w : mask)
        if (w) return false;
    return true;
}

bool TruthTable::is_ones() const {
    const std::uint64_t n = bit_count();
    for (std::uint64_t j = 0; j < mask.size(); ++j) {
        std::uint64_t want = ~0ull;
        if ((j + 1) * 64 > n) want = (n & 63) ? ((1ull << (n & 63)) - 1) : ~0ull;
        if (mask[j] != want) return false;
    }
    return true;
}

namespace {

size_t words_for(unsigned nvars) {
    std::uint64_t bits = 1ull << nvars;
    return static_cast<size_t>((bits + 63) / 64);
}

// Pattern of variable i over assignments: bit j is bit i of j.
std::vector<std::uint64_t> var_mask(unsigned i, unsigned nvars) {
    static constexpr std::uint64_t kWithinWord[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    size_t nw = words_for(nvars);
    std::vector<std::uint64_t> m(nw, 0);
    for (size_t w = 0; w < nw; ++w) {
        if (i < 6) {
            m[w] = kWithinWord[i];
        } else {
            // whole words alternate with period 2^(i-6)
            m[w] = ((w >> (i - 6)) & 1) ? ~0ull : 0ull;
        }
    }
    if (nvars < 6) m[0] &= (1ull << (1u << nvars)) - 1;
    return m;
}

std::vector<std::uint64_t> build_mask(const Formula& f, const std::vector<std::string>& vars) {
    using K = Formula::Kind;
    const unsigned n = static_cast<unsigned>(vars.size());
    switch (f.kind()) {
        case K::Var: {
            auto it = std::find(vars.begin(), vars.end(), f.var_name());
            if (it == vars.end())
                throw UsageError("variable '" + f.var_name() + "' is not in the variable list");
            return var_mask(static_cast<unsigned>(it - vars.begin()), n);
        }
        case K::Not: {
            auto m = build_mask(f.lhs(), vars);
            for (auto& w : m) w = ~w;
            if (n < 6) m[0] &= (1ull << (1u << n)) - 1;
            return m;
        }
        default: {
            auto a = build_mask(f.lhs(), vars);
            auto b = build_mask(f.rhs(), vars);
            for (size_t i = 0; i < a.size(); ++i) {
                switch (f.kind()) {
                    case K::And: a[i] &= b[i]; break;
                    case K::Or: a[i] |= b[i]; break;
                    case K::Implies: a[i] = ~a[i] | b[i]; break;
                    case K::Iff: a[i] = ~(a[i] ^ b[i]); break;
                    default: throw Error("bad formula node");
                }
            }
            if ((f.kind() == K::Implies || f.kind() == K::Iff) && n < 6)
                a[0] &= (1ull << (1u << n)) - 1;
            return a;
        }
    }
}

void check_vars(const std::vector<std::string>& vars) {
    if (vars.size() > kMaxTruthTableVars)
        throw CapError("too many variables: " + std::to_string(vars.size()) +
                       " (at most " + std::to_string(kMaxTruthTableVars) + ")");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw UsageError("duplicate variable '" + vars[i] + "'");
}

}  // namespace

TruthTable truth_table(const Formula& f, const std::vector<std::string>& vars) {
    check_vars(vars);
    std::vector<std::uint64_t> mask = build_mask(f, vars);  // may throw; build it first
    return TruthTable{vars, std::move(mask)};
}

bool conjunction_satisfiable(const std::vector<Formula>& fs,
                             const std::vector<std::string>& vars) {
    check_vars(vars);
    if (fs.empty()) return true;
    std::vector<std::uint64_t> acc(words_for(static_cast<unsigned>(vars.size())), ~0ull);
    if (vars.size() < 6) acc[0] = (1ull << (1u << vars.size())) - 1;
    for (const Formula& f : fs) {
        auto m = build_mask(f, vars);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] &= m[i];
    }
    for (auto w : acc)
        if (w) return true;
    return false;
}

// ---------------------------------------------------------------------------

static std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<LabeledFormula> parse_formula_list(const std::string& text) {
    std::vector<LabeledFormula> out;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        std::string label, source = body;
        size_t colon = body.find(':');
        if (colon != std::string::npos) {
            label = trim(body.substr(0, colon));
            source = trim(body.substr(colon + 1));
            if (label.empty())
                throw UsageError("line " + std::to_string(lineno) + ": empty label");
        }
        Formula f = [&] {
            try {
                return parse_formula(source);
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(lineno) + ": " + e.what(),
                                 e.position);
            }
        }();
        if (label.empty()) label = source;
        out.push_back(LabeledFormula{std::move(label), std::move(f)});
    }
    return out;
}

}  // namespace cspace
