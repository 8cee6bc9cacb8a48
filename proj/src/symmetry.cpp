#include "bellpoly/symmetry.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "bellpoly/polyhedra.hpp"

namespace bellpoly {

namespace {

std::vector<int> iota_vector(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> p = iota_vector(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> invert(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) inv[p[k]] = static_cast<int>(k);
    return inv;
}

bool is_permutation_of_range(const std::vector<int>& p, int n) {
    if (p.size() != static_cast<std::size_t>(n)) return false;
    std::vector<bool> seen(n, false);
    for (int x : p) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

void require_fits(const LocalSymmetry& g, const Scenario& sc) {
    bool ok = is_permutation_of_range(g.alice_inputs, sc.ma) && is_permutation_of_range(g.bob_inputs, sc.mb) &&
              g.alice_outputs.size() == static_cast<std::size_t>(sc.ma) &&
              g.bob_outputs.size() == static_cast<std::size_t>(sc.mb);
    for (std::size_t k = 0; ok && k < g.alice_outputs.size(); ++k) ok = is_permutation_of_range(g.alice_outputs[k], sc.ka);
    for (std::size_t k = 0; ok && k < g.bob_outputs.size(); ++k) ok = is_permutation_of_range(g.bob_outputs[k], sc.kb);
    if (!ok) throw std::invalid_argument("symmetry does not fit the scenario");
}

// Calls fn for every tuple (perms[d0], perms[d1], ...) of `slots` entries.
template <typename Fn>
void for_each_tuple(const std::vector<std::vector<int>>& perms, int slots, Fn&& fn) {
    std::vector<std::size_t> digit(slots, 0);
    std::vector<std::vector<int>> tuple(slots);
    while (true) {
        for (int s = 0; s < slots; ++s) tuple[s] = perms[digit[s]];
        fn(tuple);
        int s = slots - 1;
        while (s >= 0 && ++digit[s] == perms.size()) {
            digit[s] = 0;
            --s;
        }
        if (s < 0) return;
    }
}

Integer to_exact_integer(const Rational& r) {
    if (r.get_den() != 1) throw std::logic_error("chart map is not integral");
    return r.get_num();
}

}  // namespace

LocalSymmetry identity_symmetry(const Scenario& sc) {
    sc.validate();
    LocalSymmetry g;
    g.alice_inputs = iota_vector(sc.ma);
    g.bob_inputs = iota_vector(sc.mb);
    g.alice_outputs.assign(sc.ma, iota_vector(sc.ka));
    g.bob_outputs.assign(sc.mb, iota_vector(sc.kb));
    return g;
}

LocalSymmetry compose(const LocalSymmetry& g, const LocalSymmetry& h) {
    LocalSymmetry c;
    const std::size_t ma = g.alice_inputs.size();
    const std::size_t mb = g.bob_inputs.size();
    c.alice_inputs.resize(ma);
    c.bob_inputs.resize(mb);
    c.alice_outputs.resize(ma);
    c.bob_outputs.resize(mb);
    for (std::size_t i = 0; i < ma; ++i) c.alice_inputs[i] = h.alice_inputs[g.alice_inputs[i]];
    for (std::size_t j = 0; j < mb; ++j) c.bob_inputs[j] = h.bob_inputs[g.bob_inputs[j]];
    // c_out[h_in[k]] = h_out[h_in[k]] o g_out[k]
    for (std::size_t k = 0; k < ma; ++k) {
        const int target = h.alice_inputs[k];
        const auto& outer = h.alice_outputs[target];
        const auto& inner = g.alice_outputs[k];
        std::vector<int> perm(inner.size());
        for (std::size_t a = 0; a < inner.size(); ++a) perm[a] = outer[inner[a]];
        c.alice_outputs[target] = std::move(perm);
    }
    for (std::size_t k = 0; k < mb; ++k) {
        const int target = h.bob_inputs[k];
        const auto& outer = h.bob_outputs[target];
        const auto& inner = g.bob_outputs[k];
        std::vector<int> perm(inner.size());
        for (std::size_t b = 0; b < inner.size(); ++b) perm[b] = outer[inner[b]];
        c.bob_outputs[target] = std::move(perm);
    }
    return c;
}

LocalSymmetry inverse(const LocalSymmetry& g) {
    LocalSymmetry h;
    h.alice_inputs = invert(g.alice_inputs);
    h.bob_inputs = invert(g.bob_inputs);
    h.alice_outputs.resize(g.alice_outputs.size());
    h.bob_outputs.resize(g.bob_outputs.size());
    for (std::size_t k = 0; k < g.alice_inputs.size(); ++k) h.alice_outputs[k] = invert(g.alice_outputs[g.alice_inputs[k]]);
    for (std::size_t k = 0; k < g.bob_inputs.size(); ++k) h.bob_outputs[k] = invert(g.bob_outputs[g.bob_inputs[k]]);
    return h;
}

std::vector<LocalSymmetry> symmetry_group(const Scenario& sc) {
    sc.validate();
    const auto pa = all_permutations(sc.ma);
    const auto pb = all_permutations(sc.mb);
    const auto oa = all_permutations(sc.ka);
    const auto ob = all_permutations(sc.kb);
    std::vector<LocalSymmetry> out;
    for (const auto& a_in : pa) {
        for (const auto& b_in : pb) {
            for_each_tuple(oa, sc.ma, [&](const std::vector<std::vector<int>>& a_out) {
                for_each_tuple(ob, sc.mb, [&](const std::vector<std::vector<int>>& b_out) {
                    out.push_back(LocalSymmetry{a_in, b_in, a_out, b_out});
                });
            });
        }
    }
    return out;
}

CorrelationTable act_on_table(const LocalSymmetry& g, const CorrelationTable& t) {
    const Scenario& sc = t.scenario();
    require_fits(g, sc);
    CorrelationTable out(sc);
    for (int i = 0; i < sc.ma; ++i) {
        const int si = g.alice_inputs[i];
        for (int j = 0; j < sc.mb; ++j) {
            const int sj = g.bob_inputs[j];
            for (int a = 0; a < sc.ka; ++a)
                for (int b = 0; b < sc.kb; ++b)
                    out.at(a, b, i, j) = t.at(g.alice_outputs[si][a], g.bob_outputs[sj][b], si, sj);
        }
    }
    return out;
}

InequalityAction::AffineMap InequalityAction::chart_map(const LocalSymmetry& g, const Scenario& sc, Space space) {
    // x -> project(g^-1 . lift(x)); inequalities pull back through it.
    const LocalSymmetry h = inverse(g);
    const std::size_t dim = reduced_dimension(space, sc.ma, sc.mb);
    auto image = [&](const RationalVector& x) {
        return project_linear(space, act_on_table(h, lift_affine(space, sc, x)));
    };
    AffineMap map;
    const RationalVector base = image(RationalVector(dim));
    for (const auto& v : base) map.offset.push_back(to_exact_integer(v));
    map.columns.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        RationalVector e(dim);
        e[k] = 1;
        const RationalVector col = image(e);
        for (std::size_t r = 0; r < dim; ++r) map.columns[k].push_back(to_exact_integer(col[r] - base[r]));
    }
    return map;
}

InequalityAction::InequalityAction(const Scenario& sc, Space space)
    : scenario_(sc), space_(space), group_(symmetry_group(sc)) {
    maps_.reserve(group_.size());
    for (const auto& g : group_) maps_.push_back(chart_map(g, sc, space));
}

namespace {

LinearInequality pull_back(const std::vector<IntegerVector>& columns, const IntegerVector& offset,
                           const LinearInequality& q, const std::vector<LinearEquation>& equations) {
    const std::size_t dim = offset.size();
    if (q.coeffs.size() != dim) throw std::invalid_argument("inequality dimension does not match the chart");
    IntegerVector coeffs(dim);
    Integer bound = q.bound;
    for (std::size_t r = 0; r < dim; ++r) {
        if (q.coeffs[r] != 0) bound -= q.coeffs[r] * offset[r];
    }
    for (std::size_t k = 0; k < dim; ++k) {
        Integer s = 0;
        for (std::size_t r = 0; r < dim; ++r) {
            if (q.coeffs[r] != 0 && columns[k][r] != 0) s += q.coeffs[r] * columns[k][r];
        }
        coeffs[k] = std::move(s);
    }
    LinearInequality out = LinearInequality::make(std::move(coeffs), std::move(bound));
    return equations.empty() ? out : reduce_modulo(out, equations);
}

}  // namespace

LinearInequality InequalityAction::apply(std::size_t element, const LinearInequality& q,
                                         const std::vector<LinearEquation>& equations) const {
    const AffineMap& m = maps_.at(element);
    return pull_back(m.columns, m.offset, q, equations);
}

LinearInequality InequalityAction::apply(const LocalSymmetry& g, const LinearInequality& q,
                                         const std::vector<LinearEquation>& equations) const {
    require_fits(g, scenario_);
    const AffineMap m = chart_map(g, scenario_, space_);
    return pull_back(m.columns, m.offset, q, equations);
}

RationalVector InequalityAction::map_point(std::size_t element, const RationalVector& x) const {
    const AffineMap& m = maps_.at(element);
    if (x.size() != m.offset.size()) throw std::invalid_argument("point dimension does not match the chart");
    RationalVector out(x.size());
    for (std::size_t r = 0; r < x.size(); ++r) out[r] = m.offset[r];
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == 0) continue;
        for (std::size_t r = 0; r < x.size(); ++r) {
            if (m.columns[k][r] != 0) out[r] += x[k] * m.columns[k][r];
        }
    }
    return out;
}

bool InequalityAction::stabilizes(const std::vector<RationalVector>& points) const {
    std::vector<RationalVector> sorted = points;
    std::sort(sorted.begin(), sorted.end(), coords_less);
    for (std::size_t g = 0; g < maps_.size(); ++g) {
        for (const auto& p : sorted) {
            if (!std::binary_search(sorted.begin(), sorted.end(), map_point(g, p), coords_less)) return false;
        }
    }
    return true;
}

InequalityAction::Orbit InequalityAction::orbit(const LinearInequality& q,
                                                const std::vector<LinearEquation>& equations) const {
    Orbit o;
    o.images.reserve(maps_.size());
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        o.images.push_back(apply(k, q, equations));
        if (o.images[k] < o.images[o.min_element]) o.min_element = k;
    }
    return o;
}

LinearInequality act_on_inequality(const LocalSymmetry& g, const LinearInequality& q, Space space,
                                   const Scenario& sc, const std::vector<LinearEquation>& equations) {
    require_fits(g, sc);
    const auto m = InequalityAction::chart_map(g, sc, space);
    return pull_back(m.columns, m.offset, q, equations);
}

LinearInequality canonical_inequality(const LinearInequality& q, const Scenario& sc, Space space,
                                      const std::vector<LinearEquation>& equations) {
    const InequalityAction action(sc, space);
    const auto o = action.orbit(q, equations);
    return o.images[o.min_element];
}

std::vector<LinearInequality> positivity_family(const Scenario& sc, Space space,
                                                const std::vector<LinearEquation>& equations) {
    const std::size_t dim = reduced_dimension(space, sc.ma, sc.mb);
    const CorrelationTable base = lift_affine(space, sc, RationalVector(dim));
    std::vector<CorrelationTable> units;
    for (std::size_t k = 0; k < dim; ++k) {
        RationalVector e(dim);
        e[k] = 1;
        units.push_back(lift_affine(space, sc, e));
    }
    std::vector<LinearInequality> out;
    for (std::size_t entry = 0; entry < base.entries().size(); ++entry) {
        // p = w . x + w0 >= 0  <=>  -w . x <= w0
        IntegerVector coeffs(dim);
        bool any = false;
        for (std::size_t k = 0; k < dim; ++k) {
            coeffs[k] = -to_exact_integer(units[k].entries()[entry] - base.entries()[entry]);
            any = any || coeffs[k] != 0;
        }
        if (!any) continue;
        LinearInequality q = LinearInequality::make(std::move(coeffs), to_exact_integer(base.entries()[entry]));
        bool reducible = true;
        if (!equations.empty()) {
            try {
                q = reduce_modulo(q, equations);
            } catch (const std::invalid_argument&) {
                reducible = false;  // constant on the affine hull
            }
        }
        if (reducible) out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<InequalityClass> partition_into_classes(const std::vector<LinearInequality>& inequalities,
                                                    const Scenario& sc, Space space,
                                                    const std::vector<LinearEquation>& equations) {
    return partition_into_classes(inequalities, InequalityAction(sc, space), equations);
}

std::vector<InequalityClass> partition_into_classes(const std::vector<LinearInequality>& inequalities,
                                                    const InequalityAction& action,
                                                    const std::vector<LinearEquation>& equations) {
    std::map<LinearInequality, std::vector<std::size_t>> by_form;
    std::vector<LinearInequality> forms;
    forms.reserve(inequalities.size());
    for (std::size_t k = 0; k < inequalities.size(); ++k) {
        forms.push_back(equations.empty() ? LinearInequality::make(inequalities[k].coeffs, inequalities[k].bound)
                                          : reduce_modulo(inequalities[k], equations));
        by_form[forms.back()].push_back(k);
    }

    std::map<LinearInequality, bool> trivial_forms;
    for (const auto& p : positivity_family(action.scenario(), action.space(), equations)) {
        const auto o = action.orbit(p, equations);
        trivial_forms[o.images[o.min_element]] = true;
    }

    const auto& group = action.group();
    std::vector<bool> assigned(inequalities.size(), false);
    std::vector<InequalityClass> classes;
    for (std::size_t k = 0; k < inequalities.size(); ++k) {
        if (assigned[k]) continue;
        const auto o = action.orbit(forms[k], equations);
        InequalityClass cls;
        cls.representative = o.images[o.min_element];
        cls.trivial = trivial_forms.count(cls.representative) != 0;
        std::map<LinearInequality, std::size_t> distinct;
        for (std::size_t g = 0; g < o.images.size(); ++g) distinct.emplace(o.images[g], g);
        cls.orbit_size = distinct.size();
        // images[g] = g . q_k, representative = gmin . q_k, so
        // (gmin o g^-1) maps images[g] to the representative.
        const LocalSymmetry& gmin = group[o.min_element];
        for (const auto& [form, g] : distinct) {
            const auto it = by_form.find(form);
            if (it == by_form.end()) continue;
            const LocalSymmetry witness = compose(gmin, inverse(group[g]));
            for (auto member : it->second) {
                if (assigned[member]) continue;
                assigned[member] = true;
                cls.members.push_back(member);
                cls.witnesses.push_back(witness);
            }
        }
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const InequalityClass& a, const InequalityClass& b) { return a.representative < b.representative; });
    return classes;
}

namespace {

using Face = std::vector<std::uint32_t>;  // sorted point indices

struct FaceFacet {
    LinearInequality inequality;
    Face tight;
};

// Recursive adjacency decomposition. A face is named by the points it
// contains. Facets of a large face with a nontrivial stabilizer are found
// orbit by orbit, computing ridges recursively; small faces go to the double
// description. Results are cached per orbit of faces under the whole group.
class Decomposition {
public:
    Decomposition(std::vector<RationalVector> points, const InequalityAction& action,
                  std::vector<LinearEquation> equations)
        : points_(std::move(points)), action_(action), equations_(std::move(equations)) {
        dimension_ = points_.empty() ? 0 : points_.front().size();
        for (const auto& p : points_)
            for (const auto& x : p) scale_ = lcm(scale_, Integer(x.get_den()));
        for (const auto& p : points_) {
            IntegerVector v;
            for (const auto& x : p) v.push_back(Integer(x * scale_));
            scaled_.push_back(std::move(v));
        }
        const std::size_t n = points_.size();
        for (std::size_t e = 0; e < action_.group().size(); ++e) {
            // map_point applies g^-1; inequalities move with g.
            std::vector<std::uint32_t> forward(n);
            for (std::size_t k = 0; k < n; ++k) {
                const RationalVector image = action_.map_point(e, points_[k]);
                const auto it = std::lower_bound(points_.begin(), points_.end(), image, coords_less);
                if (it == points_.end() || *it != image) {
                    throw std::invalid_argument("point set is not invariant under the action");
                }
                forward[static_cast<std::size_t>(it - points_.begin())] = static_cast<std::uint32_t>(k);
            }
            perms_.push_back(std::move(forward));
        }
        inverses_.resize(perms_.size());
        for (std::size_t e = 0; e < perms_.size(); ++e) {
            std::vector<std::uint32_t> inv(n);
            for (std::size_t k = 0; k < n; ++k) inv[perms_[e][k]] = static_cast<std::uint32_t>(k);
            const auto it = std::find(perms_.begin(), perms_.end(), inv);
            if (it == perms_.end()) throw std::logic_error("group is not closed under inverses");
            inverses_[e] = static_cast<std::size_t>(it - perms_.begin());
        }
        starts_ = positivity_family(action_.scenario(), action_.space(), equations_);
    }

    std::function<void(std::size_t, std::size_t, std::size_t)> progress;

    [[nodiscard]] Face all_points() const {
        Face f(points_.size());
        std::iota(f.begin(), f.end(), 0U);
        return f;
    }

    std::vector<FaceFacet> facets(const Face& face, std::size_t depth) {
        const auto [key, element] = canonical(face, all_elements());
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, compute(key, depth)).first;
        if (key == face) return it->second;
        const std::size_t back = inverses_[element];
        std::vector<FaceFacet> out;
        out.reserve(it->second.size());
        for (const auto& f : it->second) out.push_back({action_.apply(back, f.inequality, equations_), image(back, f.tight)});
        return out;
    }

private:
    // Faces with at most this many points go straight to the double description.
    static constexpr std::size_t kDirectPoints = 100;

    [[nodiscard]] std::vector<std::size_t> all_elements() const {
        std::vector<std::size_t> out(perms_.size());
        std::iota(out.begin(), out.end(), 0);
        return out;
    }

    [[nodiscard]] Face image(std::size_t element, const Face& face) const {
        Face out;
        out.reserve(face.size());
        for (auto k : face) out.push_back(perms_[element][k]);
        std::sort(out.begin(), out.end());
        return out;
    }

    [[nodiscard]] std::pair<Face, std::size_t> canonical(const Face& face, const std::vector<std::size_t>& group) const {
        Face best = face;
        std::size_t arg = group.front();
        bool first = true;
        for (auto e : group) {
            Face im = image(e, face);
            if (first || im < best) {
                best = std::move(im);
                arg = e;
                first = false;
            }
        }
        return {best, arg};
    }

    [[nodiscard]] std::vector<std::size_t> stabilizer(const Face& face) const {
        std::vector<std::size_t> out;
        for (std::size_t e = 0; e < perms_.size(); ++e) {
            bool fixes = true;
            for (auto k : face) {
                if (!std::binary_search(face.begin(), face.end(), perms_[e][k])) {
                    fixes = false;
                    break;
                }
            }
            if (fixes) out.push_back(e);
        }
        return out;
    }

    // Slack of q at point k, times the common denominator.
    [[nodiscard]] Integer slack(const LinearInequality& q, std::uint32_t k) const {
        Integer s = q.bound * scale_;
        const IntegerVector& x = scaled_[k];
        for (std::size_t c = 0; c < dimension_; ++c) {
            if (q.coeffs[c] != 0 && x[c] != 0) s -= q.coeffs[c] * x[c];
        }
        return s;
    }

    [[nodiscard]] Face tight_on(const LinearInequality& q, const Face& face) const {
        Face out;
        for (auto k : face) {
            const int s = sgn(slack(q, k));
            if (s < 0) throw std::logic_error("inequality violated on a face");
            if (s == 0) out.push_back(k);
        }
        return out;
    }

    [[nodiscard]] std::vector<RationalVector> coordinates(const Face& face) const {
        std::vector<RationalVector> out;
        out.reserve(face.size());
        for (auto k : face) out.push_back(points_[k]);
        return out;
    }

    [[nodiscard]] std::size_t face_dimension(const Face& face) const {
        return affine_dimension(VRep{dimension_, coordinates(face)});
    }

    // Neighbour of the facet a.x <= b across the ridge {a.x = b, c.x = d}:
    // (c - mu a).x <= d - mu b with mu = min over points off the facet of
    // (d - c.v) / (b - a.v).
    [[nodiscard]] LinearInequality rotate(const LinearInequality& facet, const LinearInequality& ridge,
                                          const Face& face) const {
        Integer num;
        Integer den;
        for (auto k : face) {
            Integer off = slack(facet, k);
            if (sgn(off) == 0) continue;
            Integer over = slack(ridge, k);
            if (sgn(den) == 0 || over * den < num * off) {
                num = std::move(over);
                den = std::move(off);
            }
        }
        if (sgn(den) == 0) throw std::logic_error("facet contains every point");
        IntegerVector coeffs(dimension_);
        for (std::size_t c = 0; c < dimension_; ++c) coeffs[c] = den * ridge.coeffs[c] - num * facet.coeffs[c];
        return LinearInequality::make(std::move(coeffs), den * ridge.bound - num * facet.bound);
    }

    std::vector<FaceFacet> direct(const Face& face) const {
        std::vector<FaceFacet> out;
        for (auto& q : facets_from_vertices(VRep{dimension_, coordinates(face)}).inequalities) {
            Face t = tight_on(q, face);
            out.push_back({std::move(q), std::move(t)});
        }
        return out;
    }

    std::vector<FaceFacet> compute(const Face& face, std::size_t depth) {
        const std::size_t dim = face_dimension(face);
        if (dim < 2 || face.size() <= kDirectPoints) return direct(face);
        const std::vector<std::size_t> group = stabilizer(face);
        if (group.size() == 1) return direct(face);

        std::optional<FaceFacet> start;
        for (const auto& q : starts_) {
            Face t = tight_on(q, face);
            if (t.size() < face.size() && !t.empty() && face_dimension(t) + 1 == dim) {
                start = FaceFacet{q, std::move(t)};
                break;
            }
        }
        if (!start) return direct(face);

        std::map<Face, LinearInequality> known;
        std::vector<Face> queue;
        auto discover = [&](const FaceFacet& f) {
            auto [key, element] = canonical(f.tight, group);
            if (known.count(key) != 0) return;
            known.emplace(key, action_.apply(element, f.inequality, equations_));
            queue.push_back(std::move(key));
        };
        discover(*start);
        std::size_t processed = 0;
        while (!queue.empty()) {
            const Face rep = queue.back();
            queue.pop_back();
            const LinearInequality facet = known.at(rep);
            for (const auto& ridge : facets(rep, depth + 1)) {
                LinearInequality q = rotate(facet, ridge.inequality, face);
                Face t = tight_on(q, face);
                discover(FaceFacet{std::move(q), std::move(t)});
            }
            if (depth == 0 && progress) progress(++processed, known.size(), rep.size());
        }

        std::map<Face, LinearInequality> all;
        for (const auto& [rep, q] : known) {
            for (auto e : group) {
                Face im = image(e, rep);
                if (all.count(im) == 0) all.emplace(std::move(im), action_.apply(e, q, equations_));
            }
        }
        std::vector<FaceFacet> out;
        out.reserve(all.size());
        for (auto& [t, q] : all) out.push_back({std::move(q), t});
        return out;
    }

    std::vector<RationalVector> points_;
    const InequalityAction& action_;
    std::vector<LinearEquation> equations_;
    std::size_t dimension_ = 0;
    Integer scale_ = 1;
    std::vector<IntegerVector> scaled_;
    std::vector<std::vector<std::uint32_t>> perms_;  // perms_[e] maps tight sets of q to those of apply(e, q)
    std::vector<std::size_t> inverses_;
    std::vector<LinearInequality> starts_;
    std::map<Face, std::vector<FaceFacet>> cache_;
};

}  // namespace

HRep facets_up_to_symmetry(const VRep& v, const InequalityAction& action, const HullOptions& options,
                           std::vector<LinearInequality>* representatives) {
    v.validate();
    if (v.points.empty()) throw std::invalid_argument("hull of an empty point set");
    if (v.dimension != reduced_dimension(action.space(), action.scenario().ma, action.scenario().mb)) {
        throw std::invalid_argument("point set does not live in the chart of the action");
    }
    std::vector<RationalVector> points = v.points;
    std::sort(points.begin(), points.end(), coords_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const AffineHull hull = affine_hull(VRep{v.dimension, points});

    Decomposition decomposition(points, action, hull.equations);
    decomposition.progress = options.progress;
    HRep out;
    out.dimension = v.dimension;
    out.equations = hull.equations;
    std::set<LinearInequality> all;
    for (const auto& f : decomposition.facets(decomposition.all_points(), 0)) {
        all.insert(reduce_modulo(f.inequality, hull.equations));
    }
    out.inequalities.assign(all.begin(), all.end());
    if (representatives) {
        std::set<LinearInequality> reps;
        std::set<LinearInequality> covered;
        for (const auto& q : out.inequalities) {
            if (covered.count(q) != 0) continue;
            auto o = action.orbit(q, hull.equations);
            reps.insert(o.images[o.min_element]);
            for (auto& image : o.images) covered.insert(std::move(image));
        }
        representatives->assign(reps.begin(), reps.end());
    }
    return out;
}

}  // namespace bellpoly
