#include "bellpoly/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "bellpoly/bounds.hpp"
#include "bellpoly/io.hpp"
#include "bellpoly/polyhedra.hpp"
#include "bellpoly/strategies.hpp"
#include "bellpoly/symmetry.hpp"

namespace bellpoly {

namespace {

// Exit with a given code from inside a subcommand.
struct Exit {
    int code;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename ReadFn>
auto read_file(const std::string& path, ReadFn&& read) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return read(in);
}

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(out);
        return;
    }
    std::ostringstream buffer;
    write(buffer);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path);
    file << buffer.str();
    if (!file) throw UsageError("cannot write " + path);
}

Scenario binary(int ma, int mb) { return Scenario{ma, mb, 2, 2}; }

struct Options {
    std::string model;
    std::string space;
    std::string method = "dd";
    std::string order = "input";
    std::string in;
    std::string out;
    std::string point;
    std::string table;
    std::string vertices;
    int ma = 0;
    int mb = 0;
    int bits = -1;
    int n = 0;
    int k = 0;
    bool pretty = false;
};

int cmd_vertices(const Options& o, std::ostream& out) {
    if (o.ma < 1 || o.mb < 1) throw UsageError("--ma and --mb must be >= 1");
    const Scenario sc = binary(o.ma, o.mb);
    VertexList list;
    std::vector<ReducedPoint> points;
    if (o.model == "lsr") {
        if (o.bits > 0) throw UsageError("--bits does not apply to the lsr model");
        list.space = o.space.empty() ? Space::bidir : parse_space(o.space);
        points = project_all(list.space, enumerate_lsr_vertices(sc));
    } else {
        if (!o.space.empty()) throw UsageError("--space only applies to the lsr model");
        if (o.bits < 0) throw UsageError("--bits is required for communication models");
        if (o.model == "fixed-ab") {
            points = enumerate_fixed_cc_vertices(sc, Direction::alice_to_bob, o.bits);
            list.space = Space::fixed;
        } else if (o.model == "fixed-ba") {
            points = enumerate_fixed_cc_vertices(sc, Direction::bob_to_alice, o.bits);
            list.space = Space::fixed;
        } else {
            points = enumerate_bidir_cc_vertices(sc, o.bits);
            list.space = Space::bidir;
        }
        list.r_bits = o.bits;
    }
    const Scenario chart = points.empty() ? sc : points.front().scenario;
    list.ma = chart.ma;
    list.mb = chart.mb;
    for (auto& p : points) list.points.push_back(std::move(p.coords));
    emit(o.out, out, [&](std::ostream& s) { write_vertices(s, list); });
    return 0;
}

int cmd_facets(const Options& o, std::ostream& out) {
    const VertexList v = read_file(o.in, read_vertices);
    if (v.points.empty()) throw FormatError(0, "vertex list is empty");
    InequalityList list{v.space, v.ma, v.mb, {}};
    if (o.method == "symmetric") {
        const InequalityAction action(binary(v.ma, v.mb), v.space);
        if (!action.stabilizes(v.points)) throw UsageError("vertex set is not invariant under local relabelings");
        list.hrep = facets_up_to_symmetry(v.vrep(), action);
    } else {
        HullOptions options;
        options.keep_order = o.order == "input";
        list.hrep = facets_from_vertices(v.vrep(), options);
    }
    emit(o.out, out, [&](std::ostream& s) { write_inequalities(s, list); });
    return 0;
}

int cmd_classes(const Options& o, std::ostream& out) {
    const InequalityList list = read_file(o.in, read_inequalities);
    const auto classes =
        partition_into_classes(list.hrep.inequalities, binary(list.ma, list.mb), list.space, list.hrep.equations);
    std::size_t trivial = 0;
    for (const auto& c : classes) trivial += c.trivial ? 1 : 0;
    if (!o.out.empty() || o.pretty) {
        emit(o.out, out, [&](std::ostream& s) { write_class_report(s, list, classes, o.pretty); });
    }
    out << "nontrivial=" << classes.size() - trivial << " trivial=" << trivial << " total=" << classes.size() << '\n';
    return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
    if (o.point.empty() == o.table.empty()) throw UsageError("give exactly one of --point and --table");
    const VertexList v = read_file(o.vertices, read_vertices);
    RationalVector x;
    if (!o.point.empty()) {
        const ReducedPoint p = read_file(o.point, read_point);
        if (p.space != v.space || p.scenario.ma != v.ma || p.scenario.mb != v.mb) {
            throw UsageError("point chart does not match the vertex list");
        }
        x = p.coords;
    } else {
        const CorrelationTable t = read_file(o.table, read_table);
        if (t.scenario() != binary(v.ma, v.mb)) throw UsageError("table scenario does not match the vertex list");
        try {
            x = project(v.space, t).coords;
        } catch (const std::domain_error& e) {
            out << "outside: " << e.what() << '\n';
            return 1;
        }
    }
    if (v.points.empty()) throw FormatError(0, "vertex list is empty");
    const MembershipResult r = membership(x, v.vrep());
    if (const auto* inside = std::get_if<Inside>(&r)) {
        out << "inside\n";
        for (const auto& [index, w] : inside->weights) out << "weight " << index << ' ' << to_string(w) << '\n';
        return 0;
    }
    out << "outside\n";
    InequalityList sep{v.space, v.ma, v.mb, {}};
    sep.hrep.dimension = x.size();
    sep.hrep.inequalities.push_back(std::get<Outside>(r).separator);
    write_inequalities(out, sep);
    return 1;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const CorrelationTable t = read_file(o.in, read_table);
    StrategyEnsemble e;
    try {
        e = bacon_toner_ensemble(t);
    } catch (const std::domain_error& err) {
        out << "not simulable: " << err.what() << '\n';
        return 1;
    }
    const bool exact = ensemble_to_table(e) == t;
    const Scenario& sc = t.scenario();
    const int bits = ceil_log2(std::min(sc.ma, sc.mb));
    emit(o.out, out, [&](std::ostream& s) { write_ensemble(s, e); });
    out << "bits=" << bits << " exact=" << (exact ? "yes" : "no") << '\n';
    return exact ? 0 : 1;
}

int cmd_lowerbound(const Options& o, std::ostream& out) {
    if (o.ma < 1 || o.mb < 1 || o.bits < 0) throw UsageError("need --ma, --mb >= 1 and --bits >= 0");
    const LowerBoundReport r = lower_bound_report(o.ma, o.mb, o.bits);
    emit(o.out, out, [&](std::ostream& s) {
        const Scenario& sc = r.scenario;
        s << "lowerbound " << sc.ma << ' ' << sc.mb << " r=" << r.r_bits << '\n';
        if (r.roles_swapped) s << "roles swapped: analysed with the larger input set on Alice's side\n";
        s << "exhaustive=" << (r.exhaustive_ran ? "ran" : "skipped") << " strategies=" << r.strategies_checked
          << " refuted=" << (r.exhaustive_refuted ? "yes" : "no") << '\n';
        s << "lp=" << (r.lp_outside ? "outside" : "inside") << '\n';
        s << "certificates=" << (r.certificates_hold ? "hold" : "n/a") << '\n';
        s << "agree=" << (r.agree() ? "yes" : "no") << '\n';
        if (r.separator) {
            InequalityList sep{Space::bidir, sc.ma, sc.mb, {}};
            sep.hrep.dimension = r.separator->coeffs.size();
            sep.hrep.inequalities.push_back(*r.separator);
            write_inequalities(s, sep);
        }
        for (const auto& ex : r.examples) {
            s << "example kappa=";
            for (auto x : ex.strategy.kappa) s << x;
            s << " sigma=";
            for (auto x : ex.strategy.sigma) s << x;
            s << " s=" << ex.strategy.s_bits << " triple=" << ex.triple.t0 << ',' << ex.triple.t1 << ','
              << ex.triple.t2 << " violates p(" << ex.violated.a << ex.violated.b << '|' << ex.violated.i
              << ex.violated.j << ")=0\n";
        }
    });
    return r.agree() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact correlation polytopes with classical communication"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto* vertices = app.add_subcommand("vertices", "enumerate deterministic vertices");
    vertices->add_option("--model", o.model)->required()->check(CLI::IsMember({"lsr", "fixed-ab", "fixed-ba", "bidir"}));
    vertices->add_option("--ma", o.ma)->required();
    vertices->add_option("--mb", o.mb)->required();
    vertices->add_option("--bits", o.bits);
    vertices->add_option("--space", o.space)->check(CLI::IsMember({"fixed", "bidir"}));
    vertices->add_option("--out", o.out);
    vertices->callback([&] { action = [&] { return cmd_vertices(o, out); }; });

    auto* facets = app.add_subcommand("facets", "facet description of a vertex list");
    facets->add_option("--in", o.in)->required();
    facets->add_option("--out", o.out);
    facets->add_option("--method", o.method)->check(CLI::IsMember({"dd", "symmetric"}));
    facets->add_option("--order", o.order)->check(CLI::IsMember({"input", "lex"}));
    facets->callback([&] { action = [&] { return cmd_facets(o, out); }; });

    auto* classes = app.add_subcommand("classes", "group facets into relabeling classes");
    classes->add_option("--in", o.in)->required();
    classes->add_option("--out", o.out);
    classes->add_flag("--pretty-chart", o.pretty);
    classes->callback([&] { action = [&] { return cmd_classes(o, out); }; });

    auto* check = app.add_subcommand("check", "membership of a point in conv(vertices)");
    check->add_option("--point", o.point);
    check->add_option("--table", o.table);
    check->add_option("--vertices", o.vertices)->required();
    check->callback([&] { action = [&] { return cmd_check(o, out); }; });

    auto* simulate = app.add_subcommand("simulate", "one-way simulation ensemble of a table");
    simulate->add_option("--in", o.in)->required();
    simulate->add_option("--out", o.out);
    simulate->callback([&] { action = [&] { return cmd_simulate(o, out); }; });

    auto* stirling = app.add_subcommand("stirling", "Stirling number of the second kind");
    stirling->add_option("n", o.n)->required()->check(CLI::Range(0, 10000));
    stirling->add_option("k", o.k)->required()->check(CLI::Range(0, 10000));
    stirling->callback([&] {
        action = [&] {
            out << stirling_second_kind(o.n, o.k).get_str() << '\n';
            return 0;
        };
    });

    auto* hat = app.add_subcommand("hat", "no-signaling witness table");
    hat->add_option("--ma", o.ma)->required();
    hat->add_option("--mb", o.mb)->required();
    hat->add_option("--out", o.out);
    hat->callback([&] {
        action = [&] {
            const CorrelationTable t = hat_distribution(o.ma, o.mb);
            emit(o.out, out, [&](std::ostream& s) { write_table(s, t); });
            return 0;
        };
    });

    auto* lower = app.add_subcommand("lowerbound", "exhaustive and LP refutation of r-bit simulation");
    lower->add_option("--ma", o.ma)->required();
    lower->add_option("--mb", o.mb)->required();
    lower->add_option("--bits", o.bits)->required();
    lower->add_option("--out", o.out);
    lower->callback([&] { action = [&] { return cmd_lowerbound(o, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

}  // namespace bellpoly
