#ifndef RDTM_EVALUATOR_HPP
#define RDTM_EVALUATOR_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rdtm/expr.hpp"

namespace rdtm {

// Math kernels per scalar type. Specialized for double here and for
// binary128 in rdtm/quad.hpp.
template <class Scalar>
struct ScalarOps;

template <>
struct ScalarOps<double> {
    static double from_double(double v) { return v; }
    static double to_double(double v) { return v; }
    static double pow(double b, double e) { return std::pow(b, e); }
    static double apply(Function fn, double v)
    {
        switch (fn) {
        case Function::Sin: return std::sin(v);
        case Function::Cos: return std::cos(v);
        case Function::Tan: return std::tan(v);
        case Function::Sinh: return std::sinh(v);
        case Function::Cosh: return std::cosh(v);
        case Function::Tanh: return std::tanh(v);
        case Function::Exp: return std::exp(v);
        case Function::Ln: return std::log(v);
        case Function::Sqrt: return std::sqrt(v);
        }
        return v;
    }
};

namespace detail {

std::string describe_node(const Node& n);
[[noreturn]] void throw_unbound(const std::string& name);
[[noreturn]] void throw_domain(const Node& n, const char* what, double value);

}  // namespace detail

// Compiles one or more expressions into a flat tape of unique DAG nodes in
// dependency order; named constants are resolved once at construction.
// Evaluation is const and reentrant. The evaluator keeps its roots alive.
template <class Scalar>
class BasicEvaluator {
public:
    BasicEvaluator(const Expr& root, const Bindings& bindings)
        : BasicEvaluator(std::span<const Expr>(&root, 1), bindings)
    {
    }

    BasicEvaluator(std::span<const Expr> roots, const Bindings& bindings) : owned_(roots.begin(), roots.end())
    {
        std::unordered_map<const Node*, std::uint32_t> index;
        for (const auto& r : roots) roots_.push_back(compile(r, index, bindings));
    }

    std::size_t size() const { return tape_.size(); }
    std::size_t root_count() const { return roots_.size(); }

    // Value of the first root.
    Scalar evaluate(Scalar x) const
    {
        std::vector<Scalar> scratch(tape_.size());
        run(x, scratch);
        return scratch[roots_.front()];
    }

    // Values of every root, in construction order.
    void evaluate_all(Scalar x, std::span<Scalar> out) const
    {
        std::vector<Scalar> scratch(tape_.size());
        run(x, scratch);
        for (std::size_t i = 0; i < roots_.size() && i < out.size(); ++i) out[i] = scratch[roots_[i]];
    }

    std::vector<Scalar> evaluate_all(Scalar x) const
    {
        std::vector<Scalar> out(roots_.size());
        evaluate_all(x, out);
        return out;
    }

private:
    using Ops = ScalarOps<Scalar>;

    struct Instr {
        const Node* node;
        NodeKind kind;
        std::uint32_t first;  // into args_
        std::uint32_t count;
        Scalar constant;
    };

    std::uint32_t compile(const Expr& root, std::unordered_map<const Node*, std::uint32_t>& index,
                          const Bindings& bindings)
    {
        // Iterative post-order so deep trees do not exhaust the stack.
        std::vector<std::pair<const Node*, bool>> stack{{root.get(), false}};
        while (!stack.empty()) {
            auto [n, expanded] = stack.back();
            stack.pop_back();
            if (index.count(n)) continue;
            if (!expanded) {
                stack.emplace_back(n, true);
                for (auto it = n->children().rbegin(); it != n->children().rend(); ++it) {
                    if (!index.count(it->get())) stack.emplace_back(it->get(), false);
                }
                continue;
            }
            Instr ins{n, n->kind(), static_cast<std::uint32_t>(args_.size()),
                      static_cast<std::uint32_t>(n->children().size()), Scalar{}};
            for (const auto& c : n->children()) args_.push_back(index.at(c.get()));
            if (n->kind() == NodeKind::Constant) {
                ins.constant = Ops::from_double(n->value());
            } else if (n->kind() == NodeKind::NamedConstant) {
                auto it = bindings.constants.find(n->name());
                if (it == bindings.constants.end()) detail::throw_unbound(n->name());
                ins.constant = Ops::from_double(it->second);
                ins.kind = NodeKind::Constant;
            } else if (n->kind() == NodeKind::Power) {
                ins.constant = Ops::from_double(n->exponent().value());
            }
            index.emplace(n, static_cast<std::uint32_t>(tape_.size()));
            tape_.push_back(ins);
        }
        return index.at(root.get());
    }

    void run(Scalar x, std::span<Scalar> v) const
    {
        for (std::size_t i = 0; i < tape_.size(); ++i) {
            const Instr& ins = tape_[i];
            const std::uint32_t* a = args_.data() + ins.first;
            switch (ins.kind) {
            case NodeKind::Constant:
            case NodeKind::NamedConstant:
                v[i] = ins.constant;
                break;
            case NodeKind::Variable:
                v[i] = x;
                break;
            case NodeKind::Negate:
                v[i] = -v[a[0]];
                break;
            case NodeKind::Add: {
                Scalar s = v[a[0]];
                for (std::uint32_t j = 1; j < ins.count; ++j) s = s + v[a[j]];
                v[i] = s;
                break;
            }
            case NodeKind::Multiply: {
                Scalar p = v[a[0]];
                for (std::uint32_t j = 1; j < ins.count; ++j) p = p * v[a[j]];
                v[i] = p;
                break;
            }
            case NodeKind::Divide: {
                const Scalar den = v[a[1]];
                if (den == Scalar(0)) detail::throw_domain(*ins.node, "division by zero", 0.0);
                v[i] = v[a[0]] / den;
                break;
            }
            case NodeKind::Power: {
                const Scalar base = v[a[0]];
                const Exponent& e = ins.node->exponent();
                if (base == Scalar(0) && e.value() < 0)
                    detail::throw_domain(*ins.node, "zero raised to a negative power", 0.0);
                if (!e.integral && base < Scalar(0))
                    detail::throw_domain(*ins.node, "negative base with real exponent", Ops::to_double(base));
                v[i] = Ops::pow(base, ins.constant);
                break;
            }
            case NodeKind::Apply: {
                const Scalar arg = v[a[0]];
                const Function fn = ins.node->function();
                if (fn == Function::Ln && !(arg > Scalar(0)))
                    detail::throw_domain(*ins.node, "logarithm of a nonpositive value", Ops::to_double(arg));
                if (fn == Function::Sqrt && arg < Scalar(0))
                    detail::throw_domain(*ins.node, "square root of a negative value", Ops::to_double(arg));
                v[i] = Ops::apply(fn, arg);
                break;
            }
            }
        }
    }

    std::vector<Instr> tape_;
    std::vector<std::uint32_t> args_;
    std::vector<std::uint32_t> roots_;
    std::vector<Expr> owned_;
};

using Evaluator = BasicEvaluator<double>;

}  // namespace rdtm

#endif  // RDTM_EVALUATOR_HPP
