#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellpoly/correlation.hpp"
#include "bellpoly/polyhedra.hpp"
#include "bellpoly/strategies.hpp"
#include "bellpoly/symmetry.hpp"

namespace bellpoly {

// Malformed text input. `line` is 1-based, 0 when unknown.
class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& message);
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Blank lines and text after '#' are ignored by every reader.

//   scenario MA MB KA KB
//   p A B I J = N/D        (one line per nonzero entry)
void write_table(std::ostream& out, const CorrelationTable& t);
CorrelationTable read_table(std::istream& in);

//   point fixed|bidir MA MB
//   x_0 x_1 ...
void write_point(std::ostream& out, const ReducedPoint& p);
ReducedPoint read_point(std::istream& in);

struct VertexList {
    Space space = Space::fixed;
    int ma = 0;
    int mb = 0;
    int r_bits = 0;
    std::vector<RationalVector> points;

    [[nodiscard]] VRep vrep() const;
};

//   vertices fixed|bidir MA MB RBITS COUNT
//   one point per line
void write_vertices(std::ostream& out, const VertexList& v);
VertexList read_vertices(std::istream& in);

struct InequalityList {
    Space space = Space::fixed;
    int ma = 0;
    int mb = 0;
    HRep hrep;
};

//   ineq fixed|bidir MA MB COUNT
//   c_0 c_1 ... <= bound    (inequalities)
//   c_0 c_1 ... = rhs       (equations)
// COUNT counts both kinds.
void write_inequalities(std::ostream& out, const InequalityList& list);
InequalityList read_inequalities(std::istream& in);

// One inequality as a single line, without header.
std::string format_inequality(const LinearInequality& q);

//   ensemble MA MB KA KB COUNT
//   W lsr | alpha .. | beta ..
//   W fixed a>b|b>a L | kappa .. | sender .. | receiver r.. ; r.. ; ..
//   W bidir R S | kappa .. | sigma .. | alice r.. ; .. | bob r.. ; ..
void write_ensemble(std::ostream& out, const StrategyEnsemble& e);
StrategyEnsemble read_ensemble(std::istream& in);

// Fixed-chart coefficients as a grid with one column per Alice input:
// the q_A row, then p(00|.j) for each j, then p(10|.j) for each j, and the
// bound underneath.
std::string chart_text(const LinearInequality& q, int ma, int mb);

// Per class: representative (inequality format), member count, orbit size,
// trivial flag, and the chart when `pretty` and the chart is fixed.
void write_class_report(std::ostream& out, const InequalityList& list, const std::vector<InequalityClass>& classes,
                        bool pretty);

}  // namespace bellpoly
