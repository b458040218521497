#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ladist/distinction.hpp"
#include "ladist/multisegment.hpp"

namespace ladist {

/// One factor of a parsed expression: a bare discrete series, an explicit
/// ladder, or a Tadic unitary block.
using ExprItem = std::variant<Segment, Multisegment, UnitaryFactor>;

/// Product expression in the CLI grammar:
///   Seg(rho, -1/2, 1/2) | St(rho, k) | St(rho, k)@c | eta*rho lines,
///   Ladder[Seg(...), ...] | Speh(St(rho,2), 3) | Pair(Speh(...), 1/4),
///   factors joined with x.
struct Expression {
    std::vector<ExprItem> items;

    bool operator==(const Expression& o) const;
};

Expression parseExpression(const std::string& text);
std::string printExpression(const Expression& e);

std::string printSegment(const Segment& s);
std::string printMultisegment(const Multisegment& ms);
std::string printUnitaryFactor(const UnitaryFactor& u);

} // namespace ladist
