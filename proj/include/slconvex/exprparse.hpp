#pragma once

// Small arithmetic expression language for defining scalar energy profiles
// at the command line: literals, named variables, + - * / ^, unary minus,
// sqrt/abs/exp/log/min/max, parentheses. Deterministic IEEE evaluation;
// anything that would produce NaN is a domain error naming the offending
// subexpression. Grammar in docs/expression-grammar.md.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "slconvex/errors.hpp"

namespace slconvex::expr {

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset, int line, int column)
        : Error(message + " at " + std::to_string(line) + ":" + std::to_string(column)),
          offset_(offset), line_(line), column_(column)
    {
    }

    std::size_t offset() const { return offset_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::size_t offset_;
    int line_;
    int column_;
};

class EvalError : public Error {
public:
    EvalError(const std::string& message, std::string subexpression)
        : Error(message + " in '" + subexpression + "'"), subexpression_(std::move(subexpression))
    {
    }

    const std::string& subexpression() const { return subexpression_; }

private:
    std::string subexpression_;
};

enum class NodeKind { Literal, Variable, Negate, Add, Sub, Mul, Div, Pow, Call };

struct Node {
    NodeKind kind;
    double literal = 0.0;
    std::string name; // variable or function name
    std::vector<std::unique_ptr<Node>> children;
};

using Bindings = std::map<std::string, double>;

class Expr {
public:
    Expr() = default;

    double eval(const Bindings& bindings) const;
    // Fully parenthesized canonical form; parse(print(e)) reproduces e.
    std::string print() const;
    bool empty() const { return root_ == nullptr; }

private:
    friend Expr parse(const std::string&, const std::vector<std::string>&);
    friend class Parser;
    std::shared_ptr<const Node> root_;
};

// Parses `src` admitting exactly the variables in `allowed_variables`;
// any other identifier (outside the function set) is rejected with its
// position.
Expr parse(const std::string& src, const std::vector<std::string>& allowed_variables);

} // namespace slconvex::expr
