#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rdtm/expr.hpp"

namespace rdtm {

namespace {

class Differentiator {
public:
    Expr run(const Expr& e)
    {
        if (auto it = memo_.find(e.get()); it != memo_.end()) return it->second;
        Expr d = derive(e);
        memo_.emplace(e.get(), d);
        return d;
    }

private:
    static Expr num(double v) { return Expr::constant(v); }

    Expr derive(const Expr& e)
    {
        const Node& n = e.node();
        switch (n.kind()) {
        case NodeKind::Constant:
        case NodeKind::NamedConstant:
            return num(0.0);
        case NodeKind::Variable:
            return num(1.0);
        case NodeKind::Negate:
            return -run(n.child(0));
        case NodeKind::Add: {
            std::vector<Expr> terms;
            for (const auto& c : n.children()) terms.push_back(run(c));
            return Node::make_add(std::move(terms));
        }
        case NodeKind::Multiply: {
            // Product rule over n factors.
            const auto& fs = n.children();
            std::vector<Expr> terms;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                Expr di = run(fs[i]);
                if (di.is_constant(0.0)) continue;
                std::vector<Expr> factors = fs;
                factors[i] = di;
                terms.push_back(Node::make_multiply(std::move(factors)));
            }
            return Node::make_add(std::move(terms));
        }
        case NodeKind::Divide: {
            const Expr& a = n.child(0);
            const Expr& b = n.child(1);
            Expr top = run(a) * b - a * run(b);
            return top / pow(b, 2L);
        }
        case NodeKind::Power: {
            const Expr& b = n.child(0);
            const Exponent& k = n.exponent();
            Expr lowered = k.integral ? pow(b, k.integer - 1) : pow(b, k.real - 1.0);
            return Node::make_multiply({num(k.value()), lowered, run(b)});
        }
        case NodeKind::Apply: {
            const Expr& a = n.child(0);
            Expr da = run(a);
            switch (n.function()) {
            case Function::Sin: return cos(a) * da;
            case Function::Cos: return Node::make_multiply({num(-1.0), sin(a), da});
            case Function::Tan: return (num(1.0) + pow(e, 2L)) * da;
            case Function::Sinh: return cosh(a) * da;
            case Function::Cosh: return sinh(a) * da;
            case Function::Tanh: return (num(1.0) - pow(e, 2L)) * da;
            case Function::Exp: return e * da;
            case Function::Ln: return da / a;
            case Function::Sqrt: return da / (num(2.0) * e);
            }
        }
        }
        throw std::logic_error("unhandled node kind in differentiate");
    }

    std::unordered_map<const Node*, Expr> memo_;
};

}  // namespace

Expr differentiate(const Expr& e, int order)
{
    if (order < 1) throw std::invalid_argument("derivative order must be positive");
    Expr d = e;
    for (int i = 0; i < order; ++i) d = simplify(Differentiator().run(d));
    return d;
}

}  // namespace rdtm
