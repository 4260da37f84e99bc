#include "rdtm/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <unordered_set>

#include "rdtm/evaluator.hpp"

namespace rdtm {

namespace {

constexpr std::array<std::pair<Function, std::string_view>, 9> kFunctionNames{{
    {Function::Sin, "sin"},
    {Function::Cos, "cos"},
    {Function::Tan, "tan"},
    {Function::Sinh, "sinh"},
    {Function::Cosh, "cosh"},
    {Function::Tanh, "tanh"},
    {Function::Exp, "exp"},
    {Function::Ln, "ln"},
    {Function::Sqrt, "sqrt"},
}};

}  // namespace

std::string_view function_name(Function fn)
{
    for (const auto& [f, name] : kFunctionNames) {
        if (f == fn) return name;
    }
    return "?";
}

bool function_from_name(std::string_view name, Function& out)
{
    for (const auto& [f, n] : kFunctionNames) {
        if (n == name) {
            out = f;
            return true;
        }
    }
    return false;
}

Expr::Expr() : Expr(Node::make_constant(0.0)) {}

Expr Expr::constant(double value) { return Node::make_constant(value); }
Expr Expr::named(std::string name) { return Node::make_named(std::move(name)); }
Expr Expr::variable() { return Node::make_variable(); }

NodeKind Expr::kind() const { return node_->kind(); }

bool Expr::is_constant(double value) const { return is_constant() && node_->value() == value; }

double Expr::constant_value() const
{
    if (!is_constant()) throw std::logic_error("constant_value() on a non-constant node");
    return node_->value();
}

Expr Node::make_constant(double value)
{
    auto n = std::shared_ptr<Node>(new Node(NodeKind::Constant));
    n->value_ = value;
    return Expr(std::move(n));
}

Expr Node::make_named(std::string name)
{
    if (name.empty()) throw std::invalid_argument("named constant needs a name");
    auto n = std::shared_ptr<Node>(new Node(NodeKind::NamedConstant));
    n->name_ = std::move(name);
    return Expr(std::move(n));
}

Expr Node::make_variable()
{
    static const Expr x(std::shared_ptr<Node>(new Node(NodeKind::Variable)));
    return x;
}

Expr Node::make_negate(Expr child)
{
    auto n = std::shared_ptr<Node>(new Node(NodeKind::Negate));
    n->children_.push_back(std::move(child));
    return Expr(std::move(n));
}

Expr Node::make_add(std::vector<Expr> terms)
{
    if (terms.empty()) return make_constant(0.0);
    if (terms.size() == 1) return terms.front();
    auto n = std::shared_ptr<Node>(new Node(NodeKind::Add));
    n->children_ = std::move(terms);
    return Expr(std::move(n));
}

Expr Node::make_multiply(std::vector<Expr> factors)
{
    if (factors.empty()) return make_constant(1.0);
    if (factors.size() == 1) return factors.front();
    auto n = std::shared_ptr<Node>(new Node(NodeKind::Multiply));
    n->children_ = std::move(factors);
    return Expr(std::move(n));
}

Expr Node::make_divide(Expr numerator, Expr denominator)
{
    if (denominator.is_constant(0.0)) throw std::invalid_argument("division by the literal constant 0");
    auto n = std::shared_ptr<Node>(new Node(NodeKind::Divide));
    n->children_.push_back(std::move(numerator));
    n->children_.push_back(std::move(denominator));
    return Expr(std::move(n));
}

Expr Node::make_power(Expr base, Exponent exponent)
{
    auto n = std::shared_ptr<Node>(new Node(NodeKind::Power));
    n->exponent_ = exponent;
    n->children_.push_back(std::move(base));
    return Expr(std::move(n));
}

Expr Node::make_apply(Function fn, Expr argument)
{
    auto n = std::shared_ptr<Node>(new Node(NodeKind::Apply));
    n->function_ = fn;
    n->children_.push_back(std::move(argument));
    return Expr(std::move(n));
}

Expr operator-(const Expr& a) { return Node::make_negate(a); }
Expr operator+(const Expr& a, const Expr& b) { return Node::make_add({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Node::make_add({a, Node::make_negate(b)}); }
Expr operator*(const Expr& a, const Expr& b) { return Node::make_multiply({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Node::make_divide(a, b); }
Expr operator*(double a, const Expr& b) { return Node::make_multiply({Expr::constant(a), b}); }
Expr pow(const Expr& base, long exponent) { return Node::make_power(base, Exponent::of(exponent)); }
Expr pow(const Expr& base, double exponent) { return Node::make_power(base, Exponent::of_real(exponent)); }
Expr apply(Function fn, const Expr& argument) { return Node::make_apply(fn, argument); }
Expr sin(const Expr& a) { return apply(Function::Sin, a); }
Expr cos(const Expr& a) { return apply(Function::Cos, a); }
Expr tan(const Expr& a) { return apply(Function::Tan, a); }
Expr sinh(const Expr& a) { return apply(Function::Sinh, a); }
Expr cosh(const Expr& a) { return apply(Function::Cosh, a); }
Expr tanh(const Expr& a) { return apply(Function::Tanh, a); }
Expr exp(const Expr& a) { return apply(Function::Exp, a); }
Expr ln(const Expr& a) { return apply(Function::Ln, a); }
Expr sqrt(const Expr& a) { return apply(Function::Sqrt, a); }

double evaluate(const Expr& e, const Bindings& b)
{
    return Evaluator(e, b).evaluate(b.x);
}

namespace {

void append_number(std::string& out, double v)
{
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::fabs(v));
    (void)ec;
    if (std::signbit(v)) {
        out += "(-";
        out.append(buf.data(), end);
        out += ')';
    } else {
        out.append(buf.data(), end);
    }
}

void print(const Expr& e, std::string& out)
{
    const Node& n = e.node();
    switch (n.kind()) {
    case NodeKind::Constant:
        append_number(out, n.value());
        return;
    case NodeKind::NamedConstant:
        out += n.name();
        return;
    case NodeKind::Variable:
        out += 'x';
        return;
    case NodeKind::Negate:
        out += "(-";
        print(n.child(0), out);
        out += ')';
        return;
    case NodeKind::Add:
    case NodeKind::Multiply: {
        const char* sep = n.kind() == NodeKind::Add ? " + " : " * ";
        out += '(';
        for (std::size_t i = 0; i < n.children().size(); ++i) {
            if (i) out += sep;
            print(n.children()[i], out);
        }
        out += ')';
        return;
    }
    case NodeKind::Divide:
        out += '(';
        print(n.child(0), out);
        out += " / ";
        print(n.child(1), out);
        out += ')';
        return;
    case NodeKind::Power:
        out += '(';
        print(n.child(0), out);
        out += '^';
        if (n.exponent().integral) {
            if (n.exponent().integer < 0) {
                out += "(-" + std::to_string(-n.exponent().integer) + ")";
            } else {
                out += std::to_string(n.exponent().integer);
            }
        } else {
            append_number(out, n.exponent().real);
        }
        out += ')';
        return;
    case NodeKind::Apply:
        out += function_name(n.function());
        out += '(';
        print(n.child(0), out);
        out += ')';
        return;
    }
}

template <class Visit>
void walk_unique(const Expr& root, Visit&& visit)
{
    std::unordered_set<const Node*> seen;
    std::vector<const Node*> stack{root.get()};
    while (!stack.empty()) {
        const Node* n = stack.back();
        stack.pop_back();
        if (!seen.insert(n).second) continue;
        visit(*n);
        for (const auto& c : n->children()) stack.push_back(c.get());
    }
}

}  // namespace

std::string to_string(const Expr& e)
{
    std::string out;
    print(e, out);
    return out;
}

std::size_t node_count(const Expr& e)
{
    std::size_t count = 0;
    walk_unique(e, [&](const Node&) { ++count; });
    return count;
}

std::vector<std::string> named_constants(const Expr& e)
{
    std::set<std::string> names;
    walk_unique(e, [&](const Node& n) {
        if (n.kind() == NodeKind::NamedConstant) names.insert(n.name());
    });
    return {names.begin(), names.end()};
}

bool depends_on_x(const Expr& e)
{
    bool found = false;
    walk_unique(e, [&](const Node& n) { found = found || n.kind() == NodeKind::Variable; });
    return found;
}

}  // namespace rdtm
