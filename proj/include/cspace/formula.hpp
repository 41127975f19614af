#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cspace/errors.hpp"

namespace cspace {

// Propositional formula over named variables. Immutable shared tree; copies
// are cheap.
class Formula {
  public:
    enum class Kind { Var, Not, And, Or, Implies, Iff };

    static Formula var(std::string name);
    static Formula negate(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula implies(Formula a, Formula b);
    static Formula iff(Formula a, Formula b);

    Kind kind() const { return node_->kind; }
    const std::string& var_name() const { return node_->name; }
    const Formula& lhs() const { return node_->kids[0]; }  // Not: the operand
    const Formula& rhs() const { return node_->kids[1]; }

    // Variable names in order of first appearance.
    std::vector<std::string> variables() const;

    // Fully parenthesized form; parse(print(f)) reproduces the tree.
    std::string print() const;

    bool eval(const std::vector<std::string>& vars, std::uint64_t assignment) const;

  private:
    struct Node {
        Kind kind;
        std::string name;
        std::vector<Formula> kids;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula make(Kind k, std::vector<Formula> kids);
    std::shared_ptr<const Node> node_;
};

// Grammar: ident `[A-Za-z_][A-Za-z0-9_]*`; `!`/`~` not, `&` and, `|` or,
// `->` implies (right-assoc), `<->` iff; parens. Tightest first:
// not > and > or > implies > iff.
Formula parse_formula(const std::string& text);

inline constexpr unsigned kMaxTruthTableVars = 16;

// The value table of a formula over an ordered variable list: bit j of the
// mask is the value under assignment j, where variable i's value is bit i
// of j. All-ones mask = the constant 1, all-zeros = 0.
struct TruthTable {
    std::vector<std::string> vars;
    std::vector<std::uint64_t> mask;  // 2^|vars| bits

    std::uint64_t bit_count() const { return 1ull << vars.size(); }
    bool bit(std::uint64_t j) const { return (mask[j >> 6] >> (j & 63)) & 1u; }
    bool is_zero() const;
    bool is_ones() const;
    bool operator==(const TruthTable& o) const { return vars == o.vars && mask == o.mask; }
};

TruthTable truth_table(const Formula& f, const std::vector<std::string>& vars);

// Whether the conjunction of all formulas is satisfiable (bitwise-and of the
// masks is nonzero); the empty conjunction is satisfiable.
bool conjunction_satisfiable(const std::vector<Formula>& fs,
                             const std::vector<std::string>& vars);

struct LabeledFormula {
    std::string label;
    Formula formula;
};

// One formula per line, `#` comments, blank lines ignored; `label: formula`
// names the point, otherwise the trimmed source text is the label.
std::vector<LabeledFormula> parse_formula_list(const std::string& text);

}  // namespace cspace
