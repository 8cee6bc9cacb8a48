#include "bellpoly/io.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace bellpoly {

FormatError::FormatError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Line {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    std::optional<Line> next() {
        std::string text;
        while (std::getline(in_, text)) {
            ++number_;
            if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
            std::istringstream words(text);
            Line line{number_, {}};
            for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
            if (!line.tokens.empty()) return line;
        }
        if (in_.bad()) throw FormatError(number_, "read failure");
        return std::nullopt;
    }

    Line require(const std::string& what) {
        auto line = next();
        if (!line) throw FormatError(number_, "unexpected end of input, expected " + what);
        return *line;
    }

    void expect_end() {
        if (auto line = next()) throw FormatError(line->number, "unexpected trailing content");
    }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

int to_int(const Line& line, std::size_t k, int min_value = 0) {
    if (k >= line.tokens.size()) throw FormatError(line.number, "missing field");
    const std::string& s = line.tokens[k];
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw FormatError(line.number, "expected an integer, got '" + s + "'");
    }
    if (used != s.size() || v < min_value || v > 1'000'000) {
        throw FormatError(line.number, "integer out of range: '" + s + "'");
    }
    return static_cast<int>(v);
}

Rational to_rational_token(const Line& line, std::size_t k) {
    try {
        return parse_rational(line.tokens.at(k));
    } catch (const std::exception&) {
        throw FormatError(line.number, "expected a rational number");
    }
}

Integer to_integer_token(const Line& line, std::size_t k) {
    try {
        return parse_integer(line.tokens.at(k));
    } catch (const std::exception&) {
        throw FormatError(line.number, "expected an integer");
    }
}

Space to_space(const Line& line, std::size_t k) {
    try {
        return parse_space(line.tokens.at(k));
    } catch (const std::exception&) {
        throw FormatError(line.number, "expected 'fixed' or 'bidir'");
    }
}

void expect_keyword(const Line& line, const std::string& keyword, std::size_t fields) {
    if (line.tokens.front() != keyword) throw FormatError(line.number, "expected '" + keyword + "' header");
    if (line.tokens.size() != fields) {
        throw FormatError(line.number, "'" + keyword + "' header needs " + std::to_string(fields - 1) + " fields");
    }
}

void write_coords(std::ostream& out, const RationalVector& x) {
    for (std::size_t k = 0; k < x.size(); ++k) out << (k == 0 ? "" : " ") << to_string(x[k]);
    out << '\n';
}

RationalVector read_coords(const Line& line, std::size_t dim) {
    if (line.tokens.size() != dim) {
        throw FormatError(line.number, "expected " + std::to_string(dim) + " coordinates, got " +
                                           std::to_string(line.tokens.size()));
    }
    RationalVector x;
    x.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) x.push_back(to_rational_token(line, k));
    return x;
}

void check_chart(const Line& line, int ma, int mb) {
    if (ma < 1 || mb < 1) throw FormatError(line.number, "input counts must be >= 1");
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k == 0 ? "" : " ") + std::to_string(v[k]);
    return s;
}

std::string join_rows(const std::vector<std::vector<int>>& rows) {
    std::string s;
    for (std::size_t k = 0; k < rows.size(); ++k) s += (k == 0 ? "" : " ; ") + join(rows[k]);
    return s;
}

// Splits "a b | c d | e" into token groups.
std::vector<std::vector<std::string>> sections(const std::vector<std::string>& tokens, std::size_t from) {
    std::vector<std::vector<std::string>> out(1);
    for (std::size_t k = from; k < tokens.size(); ++k) {
        if (tokens[k] == "|") {
            out.emplace_back();
        } else {
            out.back().push_back(tokens[k]);
        }
    }
    return out;
}

std::vector<int> ints_of(std::size_t line, const std::vector<std::string>& tokens, std::size_t from) {
    std::vector<int> out;
    for (std::size_t k = from; k < tokens.size(); ++k) {
        Line l{line, tokens};
        out.push_back(to_int(l, k));
    }
    return out;
}

std::vector<std::vector<int>> rows_of(std::size_t line, const std::vector<std::string>& tokens, std::size_t from) {
    std::vector<std::vector<int>> out(1);
    for (std::size_t k = from; k < tokens.size(); ++k) {
        if (tokens[k] == ";") {
            out.emplace_back();
            continue;
        }
        Line l{line, tokens};
        out.back().push_back(to_int(l, k));
    }
    return out;
}

const std::vector<std::string>& section(std::size_t line, const std::vector<std::vector<std::string>>& parts,
                                        std::size_t k, const std::string& label) {
    if (k >= parts.size() || parts[k].empty() || parts[k].front() != label) {
        throw FormatError(line, "expected '" + label + "' section");
    }
    return parts[k];
}

}  // namespace

void write_table(std::ostream& out, const CorrelationTable& t) {
    const Scenario& sc = t.scenario();
    out << "scenario " << sc.ma << ' ' << sc.mb << ' ' << sc.ka << ' ' << sc.kb << '\n';
    for (int i = 0; i < sc.ma; ++i)
        for (int j = 0; j < sc.mb; ++j)
            for (int a = 0; a < sc.ka; ++a)
                for (int b = 0; b < sc.kb; ++b) {
                    const Rational& v = t.at(a, b, i, j);
                    if (v != 0) out << "p " << a << ' ' << b << ' ' << i << ' ' << j << " = " << to_string(v) << '\n';
                }
}

CorrelationTable read_table(std::istream& in) {
    Reader reader(in);
    const Line header = reader.require("scenario header");
    expect_keyword(header, "scenario", 5);
    const Scenario sc{to_int(header, 1, 1), to_int(header, 2, 1), to_int(header, 3, 1), to_int(header, 4, 1)};
    if (sc.entry_count() > 10'000'000) throw FormatError(header.number, "scenario too large");
    CorrelationTable t(sc);
    std::vector<bool> seen(sc.entry_count(), false);
    while (auto line = reader.next()) {
        if (line->tokens.size() != 7 || line->tokens[0] != "p" || line->tokens[5] != "=") {
            throw FormatError(line->number, "expected 'p A B I J = N/D'");
        }
        const int a = to_int(*line, 1);
        const int b = to_int(*line, 2);
        const int i = to_int(*line, 3);
        const int j = to_int(*line, 4);
        if (a >= sc.ka || b >= sc.kb || i >= sc.ma || j >= sc.mb) throw FormatError(line->number, "index out of range");
        const std::size_t k = t.index(a, b, i, j);
        if (seen[k]) throw FormatError(line->number, "duplicate entry");
        seen[k] = true;
        t.entry(k) = to_rational_token(*line, 6);
    }
    return t;
}

void write_point(std::ostream& out, const ReducedPoint& p) {
    out << "point " << to_string(p.space) << ' ' << p.scenario.ma << ' ' << p.scenario.mb << '\n';
    write_coords(out, p.coords);
}

ReducedPoint read_point(std::istream& in) {
    Reader reader(in);
    const Line header = reader.require("point header");
    expect_keyword(header, "point", 4);
    ReducedPoint p;
    p.space = to_space(header, 1);
    p.scenario = Scenario{to_int(header, 2, 1), to_int(header, 3, 1), 2, 2};
    const std::size_t dim = reduced_dimension(p.space, p.scenario.ma, p.scenario.mb);
    p.coords = read_coords(reader.require("coordinates"), dim);
    reader.expect_end();
    return p;
}

VRep VertexList::vrep() const { return VRep{reduced_dimension(space, ma, mb), points}; }

void write_vertices(std::ostream& out, const VertexList& v) {
    out << "vertices " << to_string(v.space) << ' ' << v.ma << ' ' << v.mb << ' ' << v.r_bits << ' '
        << v.points.size() << '\n';
    for (const auto& p : v.points) write_coords(out, p);
}

VertexList read_vertices(std::istream& in) {
    Reader reader(in);
    const Line header = reader.require("vertices header");
    expect_keyword(header, "vertices", 6);
    VertexList v;
    v.space = to_space(header, 1);
    v.ma = to_int(header, 2, 1);
    v.mb = to_int(header, 3, 1);
    v.r_bits = to_int(header, 4);
    check_chart(header, v.ma, v.mb);
    const int count = to_int(header, 5);
    const std::size_t dim = reduced_dimension(v.space, v.ma, v.mb);
    for (int k = 0; k < count; ++k) v.points.push_back(read_coords(reader.require("a vertex"), dim));
    reader.expect_end();
    return v;
}

std::string format_inequality(const LinearInequality& q) {
    std::string s;
    for (const auto& c : q.coeffs) s += c.get_str() + ' ';
    return s + "<= " + q.bound.get_str();
}

void write_inequalities(std::ostream& out, const InequalityList& list) {
    const HRep& h = list.hrep;
    out << "ineq " << to_string(list.space) << ' ' << list.ma << ' ' << list.mb << ' '
        << h.inequalities.size() + h.equations.size() << '\n';
    for (const auto& e : h.equations) {
        for (const auto& c : e.coeffs) out << c.get_str() << ' ';
        out << "= " << e.rhs.get_str() << '\n';
    }
    for (const auto& q : h.inequalities) out << format_inequality(q) << '\n';
}

InequalityList read_inequalities(std::istream& in) {
    Reader reader(in);
    const Line header = reader.require("ineq header");
    expect_keyword(header, "ineq", 5);
    InequalityList list;
    list.space = to_space(header, 1);
    list.ma = to_int(header, 2, 1);
    list.mb = to_int(header, 3, 1);
    const int count = to_int(header, 4);
    const std::size_t dim = reduced_dimension(list.space, list.ma, list.mb);
    list.hrep.dimension = dim;
    for (int k = 0; k < count; ++k) {
        const Line line = reader.require("an inequality");
        if (line.tokens.size() != dim + 2) {
            throw FormatError(line.number, "expected " + std::to_string(dim) + " coefficients, a relation and a bound");
        }
        IntegerVector coeffs;
        coeffs.reserve(dim);
        for (std::size_t c = 0; c < dim; ++c) coeffs.push_back(to_integer_token(line, c));
        Integer bound = to_integer_token(line, dim + 1);
        const std::string& rel = line.tokens[dim];
        try {
            if (rel == "<=") {
                list.hrep.inequalities.push_back(LinearInequality::make(std::move(coeffs), std::move(bound)));
            } else if (rel == "=") {
                list.hrep.equations.push_back(LinearEquation::make(std::move(coeffs), std::move(bound)));
            } else {
                throw FormatError(line.number, "relation must be '<=' or '='");
            }
        } catch (const std::invalid_argument& e) {
            throw FormatError(line.number, e.what());
        }
    }
    reader.expect_end();
    return list;
}

void write_ensemble(std::ostream& out, const StrategyEnsemble& e) {
    const Scenario& sc = e.scenario;
    out << "ensemble " << sc.ma << ' ' << sc.mb << ' ' << sc.ka << ' ' << sc.kb << ' ' << e.entries.size() << '\n';
    for (const auto& [w, s] : e.entries) {
        out << to_string(w) << ' ';
        if (const auto* l = std::get_if<LsrStrategy>(&s)) {
            out << "lsr | alpha " << join(l->alpha) << " | beta " << join(l->beta);
        } else if (const auto* f = std::get_if<FixedCcStrategy>(&s)) {
            out << "fixed " << (f->direction == Direction::alice_to_bob ? "a>b" : "b>a") << ' ' << f->messages
                << " | kappa " << join(f->kappa) << " | sender " << join(f->sender_output) << " | receiver "
                << join_rows(f->receiver_output);
        } else {
            const auto& b = std::get<BidirCcStrategy>(s);
            out << "bidir " << b.r_bits << ' ' << b.s_bits << " | kappa " << join(b.kappa) << " | sigma "
                << join(b.sigma) << " | alice " << join_rows(b.alice_output) << " | bob " << join_rows(b.bob_output);
        }
        out << '\n';
    }
}

StrategyEnsemble read_ensemble(std::istream& in) {
    Reader reader(in);
    const Line header = reader.require("ensemble header");
    expect_keyword(header, "ensemble", 6);
    StrategyEnsemble e;
    e.scenario = Scenario{to_int(header, 1, 1), to_int(header, 2, 1), to_int(header, 3, 1), to_int(header, 4, 1)};
    const int count = to_int(header, 5);
    for (int k = 0; k < count; ++k) {
        const Line line = reader.require("an ensemble entry");
        if (line.tokens.size() < 2) throw FormatError(line.number, "expected a weight and a strategy");
        const Rational w = to_rational_token(line, 0);
        const auto parts = sections(line.tokens, 1);
        const auto& kind = parts.front();
        Strategy s;
        if (kind.size() == 1 && kind[0] == "lsr") {
            LsrStrategy l;
            l.alpha = ints_of(line.number, section(line.number, parts, 1, "alpha"), 1);
            l.beta = ints_of(line.number, section(line.number, parts, 2, "beta"), 1);
            s = l;
        } else if (kind.size() == 3 && kind[0] == "fixed" && (kind[1] == "a>b" || kind[1] == "b>a")) {
            FixedCcStrategy f;
            f.direction = kind[1] == "a>b" ? Direction::alice_to_bob : Direction::bob_to_alice;
            f.messages = to_int(Line{line.number, kind}, 2, 1);
            f.kappa = ints_of(line.number, section(line.number, parts, 1, "kappa"), 1);
            f.sender_output = ints_of(line.number, section(line.number, parts, 2, "sender"), 1);
            f.receiver_output = rows_of(line.number, section(line.number, parts, 3, "receiver"), 1);
            s = f;
        } else if (kind.size() == 3 && kind[0] == "bidir") {
            BidirCcStrategy b;
            b.r_bits = to_int(Line{line.number, kind}, 1);
            b.s_bits = to_int(Line{line.number, kind}, 2);
            b.kappa = ints_of(line.number, section(line.number, parts, 1, "kappa"), 1);
            b.sigma = ints_of(line.number, section(line.number, parts, 2, "sigma"), 1);
            b.alice_output = rows_of(line.number, section(line.number, parts, 3, "alice"), 1);
            b.bob_output = rows_of(line.number, section(line.number, parts, 4, "bob"), 1);
            s = b;
        } else {
            throw FormatError(line.number, "unknown strategy kind");
        }
        try {
            validate_strategy(e.scenario, s);
        } catch (const std::invalid_argument& err) {
            throw FormatError(line.number, err.what());
        }
        e.entries.emplace_back(w, std::move(s));
    }
    reader.expect_end();
    return e;
}

std::string chart_text(const LinearInequality& q, int ma, int mb) {
    const std::size_t dim = reduced_dimension(Space::fixed, ma, mb);
    if (q.coeffs.size() != dim) throw std::invalid_argument("inequality is not in the fixed chart of this scenario");
    std::size_t width = 1;
    for (const auto& c : q.coeffs) width = std::max(width, c.get_str().size());
    std::ostringstream out;
    const std::size_t rows = 1 + 2 * static_cast<std::size_t>(mb);
    for (std::size_t r = 0; r < rows; ++r) {
        for (int i = 0; i < ma; ++i) {
            out << (i == 0 ? "" : " ") << std::setw(static_cast<int>(width)) << q.coeffs[r * ma + i].get_str();
        }
        out << '\n';
    }
    out << "<= " << q.bound.get_str() << '\n';
    return out.str();
}

void write_class_report(std::ostream& out, const InequalityList& list, const std::vector<InequalityClass>& classes,
                        bool pretty) {
    std::size_t trivial = 0;
    for (const auto& c : classes) trivial += c.trivial ? 1 : 0;
    out << "classes " << to_string(list.space) << ' ' << list.ma << ' ' << list.mb << " nontrivial="
        << classes.size() - trivial << " trivial=" << trivial << " total=" << classes.size() << '\n';
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const auto& c = classes[k];
        out << "\nclass " << k + 1 << " members=" << c.members.size() << " orbit=" << c.orbit_size
            << " trivial=" << (c.trivial ? "yes" : "no") << '\n';
        out << "ineq " << to_string(list.space) << ' ' << list.ma << ' ' << list.mb << " 1\n";
        out << format_inequality(c.representative) << '\n';
        if (pretty && list.space == Space::fixed) out << chart_text(c.representative, list.ma, list.mb);
    }
}

}  // namespace bellpoly
