#ifndef RDTM_EXPR_HPP
#define RDTM_EXPR_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rdtm {

enum class NodeKind { Constant, NamedConstant, Variable, Negate, Add, Multiply, Divide, Power, Apply };

enum class Function { Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Ln, Sqrt };

std::string_view function_name(Function fn);

// Returns false when `name` is not one of the supported function names.
bool function_from_name(std::string_view name, Function& out);

class Node;

// Immutable handle to a node of an expression DAG over the spatial variable x.
// Copies share the node; identical subtrees may be referenced from several parents.
class Expr {
public:
    // Constant 0.
    Expr();

    static Expr constant(double value);
    static Expr named(std::string name);
    static Expr variable();

    NodeKind kind() const;
    const Node& node() const { return *node_; }
    const Node* get() const { return node_.get(); }

    bool is_constant() const { return kind() == NodeKind::Constant; }
    bool is_constant(double value) const;
    // Only valid for Constant nodes.
    double constant_value() const;

    // Pointer identity, not mathematical equality.
    bool same_node(const Expr& other) const { return node_ == other.node_; }

private:
    friend class Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Power exponent: either an integer or (from user input only) a real number.
struct Exponent {
    bool integral = true;
    long integer = 1;
    double real = 1.0;

    static Exponent of(long n) { return {true, n, static_cast<double>(n)}; }
    static Exponent of_real(double r) { return {false, 0, r}; }
    double value() const { return integral ? static_cast<double>(integer) : real; }
};

class Node {
public:
    NodeKind kind() const { return kind_; }
    double value() const { return value_; }
    const std::string& name() const { return name_; }
    Function function() const { return function_; }
    const Exponent& exponent() const { return exponent_; }
    const std::vector<Expr>& children() const { return children_; }
    const Expr& child(std::size_t i) const { return children_.at(i); }

    static Expr make_constant(double value);
    static Expr make_named(std::string name);
    static Expr make_variable();
    static Expr make_negate(Expr child);
    static Expr make_add(std::vector<Expr> terms);
    static Expr make_multiply(std::vector<Expr> factors);
    static Expr make_divide(Expr numerator, Expr denominator);
    static Expr make_power(Expr base, Exponent exponent);
    static Expr make_apply(Function fn, Expr argument);

private:
    explicit Node(NodeKind kind) : kind_(kind) {}

    NodeKind kind_;
    double value_ = 0.0;
    std::string name_;
    Function function_ = Function::Sin;
    Exponent exponent_{};
    std::vector<Expr> children_;
};

// Raw constructors. They never simplify; use simplify() for that.
Expr operator-(const Expr& a);
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator*(double a, const Expr& b);
Expr pow(const Expr& base, long exponent);
Expr pow(const Expr& base, double exponent);
Expr apply(Function fn, const Expr& argument);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr tan(const Expr& a);
Expr sinh(const Expr& a);
Expr cosh(const Expr& a);
Expr tanh(const Expr& a);
Expr exp(const Expr& a);
Expr ln(const Expr& a);
Expr sqrt(const Expr& a);

struct Bindings {
    double x = 0.0;
    std::map<std::string, double, std::less<>> constants;

    Bindings& set(std::string name, double value)
    {
        constants[std::move(name)] = value;
        return *this;
    }
    Bindings at(double new_x) const
    {
        Bindings b = *this;
        b.x = new_x;
        return b;
    }
};

class EvalError : public std::runtime_error {
public:
    enum class Kind { UnboundConstant, Domain };
    EvalError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

double evaluate(const Expr& e, const Bindings& b);

// Exact symbolic derivative d^order e / dx^order, simplified after every order.
Expr differentiate(const Expr& e, int order = 1);

// Local algebraic identities only: constant folding, neutral/absorbing elements,
// double negation, flattening, like-term and like-factor merging.
Expr simplify(const Expr& e);

// Fully parenthesized text accepted by parse().
std::string to_string(const Expr& e);

// Number of distinct nodes in the DAG.
std::size_t node_count(const Expr& e);

// Names of all NamedConstant nodes, sorted.
std::vector<std::string> named_constants(const Expr& e);

bool depends_on_x(const Expr& e);

}  // namespace rdtm

#endif  // RDTM_EXPR_HPP
