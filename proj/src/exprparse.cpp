#include "slconvex/exprparse.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace slconvex::expr {

namespace {

const std::vector<std::string> kUnaryFunctions = {"sqrt", "abs", "exp", "log"};
const std::vector<std::string> kBinaryFunctions = {"min", "max"};

bool is_unary_function(const std::string& name)
{
    return std::find(kUnaryFunctions.begin(), kUnaryFunctions.end(), name) != kUnaryFunctions.end();
}

bool is_binary_function(const std::string& name)
{
    return std::find(kBinaryFunctions.begin(), kBinaryFunctions.end(), name) !=
           kBinaryFunctions.end();
}

std::string print_node(const Node& n);

std::string print_children_infix(const Node& n, const char* op)
{
    return "(" + print_node(*n.children[0]) + " " + op + " " + print_node(*n.children[1]) + ")";
}

std::string print_node(const Node& n)
{
    switch (n.kind) {
    case NodeKind::Literal: {
        std::ostringstream os;
        os.precision(17);
        os << n.literal;
        return os.str();
    }
    case NodeKind::Variable:
        return n.name;
    case NodeKind::Negate:
        return "(-" + print_node(*n.children[0]) + ")";
    case NodeKind::Add:
        return print_children_infix(n, "+");
    case NodeKind::Sub:
        return print_children_infix(n, "-");
    case NodeKind::Mul:
        return print_children_infix(n, "*");
    case NodeKind::Div:
        return print_children_infix(n, "/");
    case NodeKind::Pow:
        return print_children_infix(n, "^");
    case NodeKind::Call: {
        std::string out = n.name + "(" + print_node(*n.children[0]);
        if (n.children.size() > 1)
            out += ", " + print_node(*n.children[1]);
        return out + ")";
    }
    }
    return "?";
}

double eval_node(const Node& n, const Bindings& bindings)
{
    switch (n.kind) {
    case NodeKind::Literal:
        return n.literal;
    case NodeKind::Variable: {
        auto it = bindings.find(n.name);
        if (it == bindings.end())
            throw EvalError("unbound variable", n.name);
        return it->second;
    }
    case NodeKind::Negate:
        return -eval_node(*n.children[0], bindings);
    case NodeKind::Add:
        return eval_node(*n.children[0], bindings) + eval_node(*n.children[1], bindings);
    case NodeKind::Sub:
        return eval_node(*n.children[0], bindings) - eval_node(*n.children[1], bindings);
    case NodeKind::Mul:
        return eval_node(*n.children[0], bindings) * eval_node(*n.children[1], bindings);
    case NodeKind::Div: {
        const double num = eval_node(*n.children[0], bindings);
        const double den = eval_node(*n.children[1], bindings);
        if (den == 0.0)
            throw EvalError("division by zero", print_node(n));
        return num / den;
    }
    case NodeKind::Pow: {
        const double base = eval_node(*n.children[0], bindings);
        const double exponent = eval_node(*n.children[1], bindings);
        if (base < 0.0 && exponent != std::nearbyint(exponent))
            throw EvalError("negative base with non-integer exponent", print_node(n));
        if (base == 0.0 && exponent < 0.0)
            throw EvalError("zero base with negative exponent", print_node(n));
        const double out = std::pow(base, exponent);
        if (std::isnan(out))
            throw EvalError("power out of domain", print_node(n));
        return out;
    }
    case NodeKind::Call: {
        const double a = eval_node(*n.children[0], bindings);
        if (n.name == "sqrt") {
            if (a < 0.0)
                throw EvalError("sqrt of negative value", print_node(n));
            return std::sqrt(a);
        }
        if (n.name == "abs")
            return std::abs(a);
        if (n.name == "exp")
            return std::exp(a);
        if (n.name == "log") {
            if (a <= 0.0)
                throw EvalError("log of non-positive value", print_node(n));
            return std::log(a);
        }
        const double b = eval_node(*n.children[1], bindings);
        if (n.name == "min")
            return std::min(a, b);
        return std::max(a, b); // "max"
    }
    }
    throw EvalError("corrupt expression node", "?");
}

} // namespace

class Parser {
public:
    Parser(const std::string& src, const std::vector<std::string>& variables)
        : src_(src), variables_(variables)
    {
    }

    Expr run()
    {
        skip_space();
        if (at_end())
            fail("empty expression");
        auto root = parse_expr();
        skip_space();
        if (!at_end())
            fail("unexpected trailing input");
        Expr e;
        e.root_ = std::shared_ptr<const Node>(std::move(root));
        return e;
    }

private:
    using NodePtr = std::unique_ptr<Node>;

    NodePtr parse_expr()
    {
        auto lhs = parse_term();
        for (;;) {
            skip_space();
            if (consume('+'))
                lhs = binary(NodeKind::Add, std::move(lhs), parse_term());
            else if (consume('-'))
                lhs = binary(NodeKind::Sub, std::move(lhs), parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term()
    {
        auto lhs = parse_unary();
        for (;;) {
            skip_space();
            if (consume('*'))
                lhs = binary(NodeKind::Mul, std::move(lhs), parse_unary());
            else if (consume('/'))
                lhs = binary(NodeKind::Div, std::move(lhs), parse_unary());
            else
                return lhs;
        }
    }

    // Unary minus binds looser than ^, so -2^2 = -(2^2).
    NodePtr parse_unary()
    {
        skip_space();
        if (consume('-')) {
            auto node = std::make_unique<Node>();
            node->kind = NodeKind::Negate;
            node->children.push_back(parse_unary());
            return node;
        }
        return parse_power();
    }

    NodePtr parse_power()
    {
        auto base = parse_primary();
        skip_space();
        if (consume('^'))
            return binary(NodeKind::Pow, std::move(base), parse_unary()); // right-assoc
        return base;
    }

    NodePtr parse_primary()
    {
        skip_space();
        if (at_end())
            fail("expected value");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_expr();
            skip_space();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return parse_identifier();
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number()
    {
        const char* begin = src_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin)
            fail("malformed number");
        pos_ += static_cast<std::size_t>(end - begin);
        auto node = std::make_unique<Node>();
        node->kind = NodeKind::Literal;
        node->literal = v;
        return node;
    }

    NodePtr parse_identifier()
    {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string name = src_.substr(start, pos_ - start);
        skip_space();
        if (!at_end() && src_[pos_] == '(') {
            if (!is_unary_function(name) && !is_binary_function(name))
                fail_at(start, "unknown function '" + name + "'");
            ++pos_;
            auto node = std::make_unique<Node>();
            node->kind = NodeKind::Call;
            node->name = name;
            node->children.push_back(parse_expr());
            skip_space();
            if (is_binary_function(name)) {
                expect(',');
                node->children.push_back(parse_expr());
                skip_space();
            }
            expect(')');
            return node;
        }
        if (std::find(variables_.begin(), variables_.end(), name) == variables_.end())
            fail_at(start, "unknown variable '" + name + "'");
        auto node = std::make_unique<Node>();
        node->kind = NodeKind::Variable;
        node->name = name;
        return node;
    }

    static NodePtr binary(NodeKind kind, NodePtr lhs, NodePtr rhs)
    {
        auto node = std::make_unique<Node>();
        node->kind = kind;
        node->children.push_back(std::move(lhs));
        node->children.push_back(std::move(rhs));
        return node;
    }

    bool at_end() const { return pos_ >= src_.size(); }
    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }
    bool consume(char c)
    {
        if (!at_end() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!consume(c))
            fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

    [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const
    {
        int line = 1, column = 1;
        for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, offset, line, column);
    }

    const std::string& src_;
    const std::vector<std::string>& variables_;
    std::size_t pos_ = 0;
};

double Expr::eval(const Bindings& bindings) const
{
    if (!root_)
        throw EvalError("empty expression", "");
    const double out = eval_node(*root_, bindings);
    if (std::isnan(out))
        throw EvalError("evaluation produced NaN", print());
    return out;
}

std::string Expr::print() const
{
    if (!root_)
        return "";
    return print_node(*root_);
}

Expr parse(const std::string& src, const std::vector<std::string>& allowed_variables)
{
    Parser parser(src, allowed_variables);
    return parser.run();
}

} // namespace slconvex::expr
