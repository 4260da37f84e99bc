#include <bit>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rdtm/expr.hpp"

namespace rdtm {

namespace {

// Structural key of a node whose children are already interned.
struct Key {
    NodeKind kind;
    Function fn;
    std::uint64_t value_bits;
    bool integral;
    long integer;
    std::uint64_t real_bits;
    std::string name;
    std::vector<const Node*> children;

    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const
    {
        std::size_t h = static_cast<std::size_t>(k.kind) * 0x9e3779b97f4a7c15ULL;
        auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
        mix(static_cast<std::size_t>(k.fn));
        mix(k.value_bits);
        mix(static_cast<std::size_t>(k.integer));
        mix(k.real_bits);
        mix(std::hash<std::string>{}(k.name));
        for (const Node* c : k.children) mix(std::hash<const Node*>{}(c));
        return h;
    }
};

class Simplifier {
public:
    Expr run(const Expr& e)
    {
        if (auto it = memo_.find(e.get()); it != memo_.end()) return it->second;
        Expr out = simplify_node(e);
        memo_.emplace(e.get(), out);
        return out;
    }

private:
    Expr intern(const Expr& e)
    {
        const Node& n = e.node();
        Key key{n.kind(),
                n.function(),
                std::bit_cast<std::uint64_t>(n.kind() == NodeKind::Constant ? n.value() : 0.0),
                n.exponent().integral,
                n.exponent().integer,
                std::bit_cast<std::uint64_t>(n.exponent().real),
                n.name(),
                {}};
        key.children.reserve(n.children().size());
        for (const auto& c : n.children()) key.children.push_back(c.get());
        auto [it, inserted] = table_.try_emplace(std::move(key), e);
        return it->second;
    }

    Expr constant(double v) { return intern(Expr::constant(v)); }

    Expr simplify_node(const Expr& e)
    {
        const Node& n = e.node();
        switch (n.kind()) {
        case NodeKind::Constant:
        case NodeKind::NamedConstant:
        case NodeKind::Variable:
            return intern(e);
        case NodeKind::Negate:
            return negate(run(n.child(0)));
        case NodeKind::Add: {
            std::vector<Expr> terms;
            for (const auto& c : n.children()) terms.push_back(run(c));
            return combine_terms(terms);
        }
        case NodeKind::Multiply: {
            std::vector<Expr> factors;
            for (const auto& c : n.children()) factors.push_back(run(c));
            return combine_factors(factors);
        }
        case NodeKind::Divide: {
            Expr num = run(n.child(0));
            Expr den = run(n.child(1));
            if (den.is_constant(0.0)) return intern(Node::make_divide(num, n.child(1)));
            if (den.is_constant(1.0)) return num;
            if (num.is_constant(0.0)) return num;
            if (num.is_constant() && den.is_constant()) return constant(num.constant_value() / den.constant_value());
            return intern(Node::make_divide(num, den));
        }
        case NodeKind::Power:
            return power(run(n.child(0)), n.exponent());
        case NodeKind::Apply: {
            Expr arg = run(n.child(0));
            if (arg.is_constant()) {
                const double v = arg.constant_value();
                const bool domain_ok = !(n.function() == Function::Ln && !(v > 0)) &&
                                       !(n.function() == Function::Sqrt && v < 0);
                if (domain_ok) return constant(evaluate(apply(n.function(), arg), Bindings{}));
            }
            return intern(Node::make_apply(n.function(), arg));
        }
        }
        return e;
    }

    Expr power(const Expr& base, const Exponent& exponent)
    {
        if (!exponent.integral) {
            if (base.is_constant() && base.constant_value() > 0)
                return constant(std::pow(base.constant_value(), exponent.real));
            return intern(Node::make_power(base, exponent));
        }
        const long k = exponent.integer;
        if (k == 1) return base;
        if (k == 0 && !base.is_constant(0.0)) return constant(1.0);
        if (base.is_constant()) {
            const double b = base.constant_value();
            if (!(b == 0 && k < 0)) return constant(std::pow(b, static_cast<double>(k)));
            return intern(Node::make_power(base, exponent));
        }
        const Node& bn = base.node();
        if (bn.kind() == NodeKind::Power && bn.exponent().integral)
            return power(bn.child(0), Exponent::of(bn.exponent().integer * k));
        if (bn.kind() == NodeKind::Negate) {
            Expr inner = power(bn.child(0), exponent);
            return k % 2 == 0 ? inner : negate(inner);
        }
        if (bn.kind() == NodeKind::Multiply) {
            std::vector<Expr> factors;
            for (const auto& f : bn.children()) factors.push_back(power(f, exponent));
            return combine_factors(factors);
        }
        return intern(Node::make_power(base, exponent));
    }

    Expr negate(const Expr& a)
    {
        const Node& n = a.node();
        switch (n.kind()) {
        case NodeKind::Constant:
            return constant(-n.value());
        case NodeKind::Negate:
            return n.child(0);
        case NodeKind::Multiply:
            if (n.child(0).is_constant()) {
                std::vector<Expr> factors = n.children();
                factors[0] = constant(-factors[0].constant_value());
                return combine_factors(factors);
            }
            break;
        case NodeKind::Add: {
            std::vector<Expr> terms;
            for (const auto& t : n.children()) terms.push_back(negate(t));
            return combine_terms(terms);
        }
        default:
            break;
        }
        return combine_factors({constant(-1.0), a});
    }

    // term == coefficient * rest
    std::pair<double, Expr> split_coefficient(const Expr& term)
    {
        const Node& n = term.node();
        if (n.kind() == NodeKind::Negate) {
            auto [c, rest] = split_coefficient(n.child(0));
            return {-c, rest};
        }
        if (n.kind() == NodeKind::Multiply && n.child(0).is_constant()) {
            std::vector<Expr> rest(n.children().begin() + 1, n.children().end());
            return {n.child(0).constant_value(), intern(Node::make_multiply(std::move(rest)))};
        }
        return {1.0, term};
    }

    Expr with_coefficient(double c, const Expr& rest)
    {
        if (c == 1.0) return rest;
        std::vector<Expr> factors{constant(c)};
        if (rest.kind() == NodeKind::Multiply) {
            factors.insert(factors.end(), rest.node().children().begin(), rest.node().children().end());
        } else {
            factors.push_back(rest);
        }
        return intern(Node::make_multiply(std::move(factors)));
    }

    Expr combine_terms(const std::vector<Expr>& input)
    {
        struct Group {
            double coefficient;
            Expr rest;
            bool is_constant_slot;
        };
        std::vector<Group> groups;
        std::unordered_map<const Node*, std::size_t> slot;
        std::size_t constant_slot = SIZE_MAX;

        auto add_term = [&](const Expr& t, auto&& self) -> void {
            if (t.kind() == NodeKind::Add) {
                for (const auto& c : t.node().children()) self(c, self);
                return;
            }
            if (t.is_constant()) {
                if (t.constant_value() == 0.0) return;
                if (constant_slot == SIZE_MAX) {
                    constant_slot = groups.size();
                    groups.push_back({t.constant_value(), t, true});
                } else {
                    groups[constant_slot].coefficient += t.constant_value();
                }
                return;
            }
            auto [c, rest] = split_coefficient(t);
            auto [it, inserted] = slot.try_emplace(rest.get(), groups.size());
            if (inserted) {
                groups.push_back({c, rest, false});
            } else {
                groups[it->second].coefficient += c;
            }
        };
        for (const auto& t : input) add_term(t, add_term);

        std::vector<Expr> terms;
        for (const auto& g : groups) {
            if (g.coefficient == 0.0) continue;
            terms.push_back(g.is_constant_slot ? constant(g.coefficient) : with_coefficient(g.coefficient, g.rest));
        }
        if (terms.empty()) return constant(0.0);
        if (terms.size() == 1) return terms.front();
        return intern(Node::make_add(std::move(terms)));
    }

    Expr combine_factors(const std::vector<Expr>& input)
    {
        double coefficient = 1.0;
        std::vector<std::pair<Expr, long>> bases;
        std::unordered_map<const Node*, std::size_t> slot;

        auto add_base = [&](const Expr& b, long k) {
            auto [it, inserted] = slot.try_emplace(b.get(), bases.size());
            if (inserted) {
                bases.emplace_back(b, k);
            } else {
                bases[it->second].second += k;
            }
        };
        auto add_factor = [&](const Expr& f, auto&& self) -> void {
            const Node& n = f.node();
            switch (n.kind()) {
            case NodeKind::Constant:
                coefficient *= n.value();
                return;
            case NodeKind::Negate:
                coefficient = -coefficient;
                self(n.child(0), self);
                return;
            case NodeKind::Multiply:
                for (const auto& c : n.children()) self(c, self);
                return;
            case NodeKind::Power:
                if (n.exponent().integral) {
                    add_base(n.child(0), n.exponent().integer);
                    return;
                }
                break;
            default:
                break;
            }
            add_base(f, 1);
        };
        for (const auto& f : input) add_factor(f, add_factor);

        if (coefficient == 0.0) return constant(0.0);
        std::vector<Expr> factors;
        if (coefficient != 1.0) factors.push_back(constant(coefficient));
        for (const auto& [b, k] : bases) {
            if (k == 0) continue;
            factors.push_back(k == 1 ? b : intern(Node::make_power(b, Exponent::of(k))));
        }
        if (factors.empty()) return constant(coefficient);
        if (factors.size() == 1) return factors.front();
        return intern(Node::make_multiply(std::move(factors)));
    }

    std::unordered_map<const Node*, Expr> memo_;
    std::unordered_map<Key, Expr, KeyHash> table_;
};

}  // namespace

Expr simplify(const Expr& e) { return Simplifier().run(e); }

}  // namespace rdtm
