#include "rdtm/evaluator.hpp"

#include <sstream>

namespace rdtm::detail {

std::string describe_node(const Node& n)
{
    static constexpr const char* kinds[] = {"constant", "named constant", "variable", "negation", "sum",
                                            "product",  "quotient",       "power",    "function"};
    std::string out = kinds[static_cast<int>(n.kind())];
    if (n.kind() == NodeKind::Apply) out += std::string(" ") + std::string(function_name(n.function()));
    // Shared DAGs can print exponentially long; only show small nodes.
    const std::string text = [&] {
        switch (n.kind()) {
        case NodeKind::Divide:
        case NodeKind::Power:
        case NodeKind::Apply: {
            const Expr& c = n.children().back();
            return node_count(c) <= 64 ? to_string(c) : std::string("...");
        }
        default:
            return std::string();
        }
    }();
    if (!text.empty()) out += " of " + text;
    return out;
}

void throw_unbound(const std::string& name)
{
    throw EvalError(EvalError::Kind::UnboundConstant, "unbound named constant '" + name + "'");
}

void throw_domain(const Node& n, const char* what, double value)
{
    std::ostringstream os;
    os << "domain error: " << what << " (" << describe_node(n) << ", argument value " << value << ")";
    throw EvalError(EvalError::Kind::Domain, os.str());
}

}  // namespace rdtm::detail
