#include "bellpoly/strategies.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace bellpoly {

namespace {

int ceil_log2(long long n) {
    int bits = 0;
    while ((1LL << bits) < n) ++bits;
    return bits;
}

int alphabet_cap(int bits, int inputs) {
    if (bits >= 30) return inputs;
    return std::min(1 << bits, inputs);
}

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

bool in_range(const std::vector<int>& values, int limit) {
    return std::all_of(values.begin(), values.end(), [limit](int v) { return v >= 0 && v < limit; });
}

bool table_in_range(const std::vector<std::vector<int>>& rows, std::size_t count, std::size_t width, int limit) {
    if (rows.size() != count) return false;
    return std::all_of(rows.begin(), rows.end(),
                       [&](const std::vector<int>& row) { return row.size() == width && in_range(row, limit); });
}

// Calls fn(digits) for every vector of `length` digits in [0, base), with
// the last digit varying fastest.
void for_each_assignment(std::size_t length, int base, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> digits(length, 0);
    while (true) {
        fn(digits);
        std::size_t k = length;
        while (k > 0) {
            --k;
            if (++digits[k] < base) break;
            digits[k] = 0;
            if (k == 0) return;
        }
        if (length == 0) return;
    }
}

// A deterministic table packed as one (a * kb + b) byte per (i, j) slice.
using Response = std::vector<std::uint8_t>;

CorrelationTable unpack(const Scenario& sc, const Response& response) {
    CorrelationTable t(sc);
    for (int i = 0; i < sc.ma; ++i) {
        for (int j = 0; j < sc.mb; ++j) {
            const int cell = response[static_cast<std::size_t>(i) * sc.mb + j];
            t.at(cell / sc.kb, cell % sc.kb, i, j) = 1;
        }
    }
    return t;
}

std::vector<CorrelationTable> unpack_sorted(const Scenario& sc, std::vector<Response> responses) {
    std::sort(responses.begin(), responses.end());
    responses.erase(std::unique(responses.begin(), responses.end()), responses.end());
    std::vector<CorrelationTable> tables;
    tables.reserve(responses.size());
    for (const auto& r : responses) tables.push_back(unpack(sc, r));
    return tables;
}

// Alice-to-Bob responses; the bob_to_alice case is built on the swapped scenario.
std::vector<Response> one_way_responses(const Scenario& sc, int r_bits) {
    std::vector<Response> responses;
    const int cap = alphabet_cap(r_bits, sc.ma);
    for (const Grouping& g : enumerate_groupings(sc.ma, cap)) {
        const std::vector<int> kappa = g.labels();
        const auto blocks = g.blocks.size();
        for_each_assignment(sc.ma, sc.ka, [&](const std::vector<int>& alpha) {
            for_each_assignment(sc.mb * blocks, sc.kb, [&](const std::vector<int>& beta) {
                Response r(static_cast<std::size_t>(sc.ma) * sc.mb);
                for (int i = 0; i < sc.ma; ++i)
                    for (int j = 0; j < sc.mb; ++j)
                        r[i * sc.mb + j] = static_cast<std::uint8_t>(alpha[i] * sc.kb + beta[j * blocks + kappa[i]]);
                responses.push_back(std::move(r));
            });
        });
    }
    return responses;
}

}  // namespace

int FixedCcStrategy::bit_cost() const { return ceil_log2(messages); }

void validate_strategy(const Scenario& sc, const Strategy& s) {
    sc.validate();
    if (const auto* lsr = std::get_if<LsrStrategy>(&s)) {
        require(lsr->alpha.size() == static_cast<std::size_t>(sc.ma) && in_range(lsr->alpha, sc.ka),
                "LSR alpha does not fit the scenario");
        require(lsr->beta.size() == static_cast<std::size_t>(sc.mb) && in_range(lsr->beta, sc.kb),
                "LSR beta does not fit the scenario");
    } else if (const auto* fixed = std::get_if<FixedCcStrategy>(&s)) {
        const bool ab = fixed->direction == Direction::alice_to_bob;
        const int sender_inputs = ab ? sc.ma : sc.mb;
        const int receiver_inputs = ab ? sc.mb : sc.ma;
        require(fixed->messages >= 1, "message alphabet must be nonempty");
        require(fixed->kappa.size() == static_cast<std::size_t>(sender_inputs) &&
                    in_range(fixed->kappa, fixed->messages),
                "kappa does not fit the sender's inputs");
        require(fixed->sender_output.size() == static_cast<std::size_t>(sender_inputs) &&
                    in_range(fixed->sender_output, ab ? sc.ka : sc.kb),
                "sender output map does not fit");
        require(table_in_range(fixed->receiver_output, receiver_inputs, fixed->messages, ab ? sc.kb : sc.ka),
                "receiver output map does not fit");
    } else {
        const auto& bidir = std::get<BidirCcStrategy>(s);
        require(bidir.s_bits >= 0 && bidir.s_bits <= bidir.r_bits && bidir.r_bits < 30, "need 0 <= s <= r");
        const int to_bob = 1 << bidir.s_bits;
        const int to_alice = 1 << (bidir.r_bits - bidir.s_bits);
        require(bidir.kappa.size() == static_cast<std::size_t>(sc.ma) && in_range(bidir.kappa, to_bob),
                "kappa does not fit");
        require(bidir.sigma.size() == static_cast<std::size_t>(sc.mb) && in_range(bidir.sigma, to_alice),
                "sigma does not fit");
        require(table_in_range(bidir.alice_output, sc.ma, to_alice, sc.ka), "Alice's output map does not fit");
        require(table_in_range(bidir.bob_output, sc.mb, to_bob, sc.kb), "Bob's output map does not fit");
    }
}

CorrelationTable strategy_to_table(const Scenario& sc, const Strategy& s) {
    validate_strategy(sc, s);
    CorrelationTable t(sc);
    for (int i = 0; i < sc.ma; ++i) {
        for (int j = 0; j < sc.mb; ++j) {
            int a = 0;
            int b = 0;
            if (const auto* lsr = std::get_if<LsrStrategy>(&s)) {
                a = lsr->alpha[i];
                b = lsr->beta[j];
            } else if (const auto* fixed = std::get_if<FixedCcStrategy>(&s)) {
                if (fixed->direction == Direction::alice_to_bob) {
                    a = fixed->sender_output[i];
                    b = fixed->receiver_output[j][fixed->kappa[i]];
                } else {
                    b = fixed->sender_output[j];
                    a = fixed->receiver_output[i][fixed->kappa[j]];
                }
            } else {
                const auto& bidir = std::get<BidirCcStrategy>(s);
                a = bidir.alice_output[i][bidir.sigma[j]];
                b = bidir.bob_output[j][bidir.kappa[i]];
            }
            t.at(a, b, i, j) = 1;
        }
    }
    return t;
}

CorrelationTable ensemble_to_table(const StrategyEnsemble& e) {
    Rational total = 0;
    for (const auto& [w, s] : e.entries) {
        if (sgn(w) <= 0) throw std::invalid_argument("ensemble weights must be positive");
        total += w;
    }
    if (total != 1) throw std::invalid_argument("ensemble weights sum to " + to_string(total) + ", not 1");
    CorrelationTable out(e.scenario);
    for (const auto& [w, s] : e.entries) {
        const CorrelationTable t = strategy_to_table(e.scenario, s);
        for (std::size_t k = 0; k < t.entries().size(); ++k) {
            if (t.entries()[k] != 0) {
                out.entry(k) += w * t.entries()[k];
            }
        }
    }
    return out;
}

std::vector<int> Grouping::labels() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    std::vector<int> label(n, -1);
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (int x : blocks[k]) label[x] = static_cast<int>(k);
    return label;
}

Integer stirling_second_kind(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling arguments must be >= 0");
    if (k > n) return 0;
    // row[k] holds S(m, k) for the current m.
    std::vector<Integer> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int c = std::min(m, k); c >= 1; --c) row[c] = c * row[c] + row[c - 1];
        row[0] = 0;
    }
    return row[k];
}

std::vector<Grouping> enumerate_groupings(int m, int max_blocks) {
    if (m < 1 || max_blocks < 1) throw std::invalid_argument("groupings need m >= 1 and max_blocks >= 1");
    std::vector<Grouping> out;
    const int top = std::min(max_blocks, m);
    for (int blocks = 1; blocks <= top; ++blocks) {
        // Restricted growth strings rgs[0] = 0, rgs[x] <= 1 + max(rgs[0..x-1]).
        std::vector<int> rgs(m, 0);
        std::function<void(int, int)> extend = [&](int pos, int used) {
            if (pos == m) {
                if (used != blocks) return;
                Grouping g;
                g.blocks.resize(blocks);
                for (int x = 0; x < m; ++x) g.blocks[rgs[x]].push_back(x);
                out.push_back(std::move(g));
                return;
            }
            if (used + (m - pos) < blocks) return;
            for (int label = 0; label <= used && label < blocks; ++label) {
                rgs[pos] = label;
                extend(pos + 1, std::max(used, label + 1));
            }
        };
        rgs[0] = 0;
        extend(1, 1);
    }
    return out;
}

std::vector<CorrelationTable> enumerate_lsr_vertices(const Scenario& sc) {
    sc.validate();
    std::vector<CorrelationTable> out;
    for_each_assignment(sc.ma, sc.ka, [&](const std::vector<int>& alpha) {
        for_each_assignment(sc.mb, sc.kb, [&](const std::vector<int>& beta) {
            out.push_back(strategy_to_table(sc, LsrStrategy{alpha, beta}));
        });
    });
    return out;
}

std::vector<CorrelationTable> enumerate_fixed_cc_tables(const Scenario& sc, Direction direction, int r_bits) {
    sc.validate();
    if (r_bits < 0) throw std::invalid_argument("bit budget must be >= 0");
    if (direction == Direction::alice_to_bob) {
        return unpack_sorted(sc, one_way_responses(sc, r_bits));
    }
    std::vector<CorrelationTable> swapped = unpack_sorted(sc.swapped(), one_way_responses(sc.swapped(), r_bits));
    std::vector<CorrelationTable> out;
    out.reserve(swapped.size());
    for (const auto& t : swapped) out.push_back(swap_parties(t));
    std::sort(out.begin(), out.end(),
              [](const CorrelationTable& x, const CorrelationTable& y) { return coords_less(x.entries(), y.entries()); });
    return out;
}

std::vector<ReducedPoint> project_all(Space space, const std::vector<CorrelationTable>& tables) {
    std::vector<ReducedPoint> out;
    out.reserve(tables.size());
    for (const auto& t : tables) out.push_back(project(space, t));
    std::sort(out.begin(), out.end(),
              [](const ReducedPoint& x, const ReducedPoint& y) { return coords_less(x.coords, y.coords); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ReducedPoint> enumerate_fixed_cc_vertices(const Scenario& sc, Direction direction, int r_bits) {
    if (!sc.binary_outputs()) throw std::invalid_argument("vertex enumeration requires two outputs per party");
    if (direction == Direction::alice_to_bob) {
        return project_all(Space::fixed, enumerate_fixed_cc_tables(sc, direction, r_bits));
    }
    return project_all(Space::fixed, enumerate_fixed_cc_tables(sc.swapped(), Direction::alice_to_bob, r_bits));
}

std::vector<BidirCcStrategy> enumerate_bidir_strategies(const Scenario& sc, int r_bits, int s_bits) {
    sc.validate();
    if (s_bits < 0 || s_bits > r_bits) throw std::invalid_argument("need 0 <= s <= r");
    std::vector<BidirCcStrategy> out;
    const auto kappas = enumerate_groupings(sc.ma, alphabet_cap(s_bits, sc.ma));
    const auto sigmas = enumerate_groupings(sc.mb, alphabet_cap(r_bits - s_bits, sc.mb));
    const int to_bob = r_bits < 30 ? 1 << s_bits : 0;
    const int to_alice = r_bits < 30 ? 1 << (r_bits - s_bits) : 0;
    if (r_bits >= 30) throw std::invalid_argument("bit budget too large to enumerate");
    for (const auto& kg : kappas) {
        const std::vector<int> kappa = kg.labels();
        const auto kb_blocks = kg.blocks.size();
        for (const auto& sg : sigmas) {
            const std::vector<int> sigma = sg.labels();
            const auto sb_blocks = sg.blocks.size();
            for_each_assignment(sc.ma * sb_blocks, sc.ka, [&](const std::vector<int>& alpha) {
                for_each_assignment(sc.mb * kb_blocks, sc.kb, [&](const std::vector<int>& beta) {
                    BidirCcStrategy s;
                    s.s_bits = s_bits;
                    s.r_bits = r_bits;
                    s.kappa = kappa;
                    s.sigma = sigma;
                    // Unused message slots (beyond the grouping's block count) output 0.
                    s.alice_output.assign(sc.ma, std::vector<int>(to_alice, 0));
                    s.bob_output.assign(sc.mb, std::vector<int>(to_bob, 0));
                    for (int i = 0; i < sc.ma; ++i)
                        for (std::size_t m = 0; m < sb_blocks; ++m) s.alice_output[i][m] = alpha[i * sb_blocks + m];
                    for (int j = 0; j < sc.mb; ++j)
                        for (std::size_t m = 0; m < kb_blocks; ++m) s.bob_output[j][m] = beta[j * kb_blocks + m];
                    out.push_back(std::move(s));
                });
            });
        }
    }
    return out;
}

std::vector<ReducedPoint> enumerate_bidir_cc_vertices(const Scenario& sc, int r_bits) {
    if (!sc.binary_outputs()) throw std::invalid_argument("vertex enumeration requires two outputs per party");
    if (r_bits < 0) throw std::invalid_argument("bit budget must be >= 0");
    std::vector<Response> responses;
    for (int s = 0; s <= r_bits; ++s) {
        for (const auto& strat : enumerate_bidir_strategies(sc, r_bits, s)) {
            Response r(static_cast<std::size_t>(sc.ma) * sc.mb);
            for (int i = 0; i < sc.ma; ++i)
                for (int j = 0; j < sc.mb; ++j)
                    r[i * sc.mb + j] = static_cast<std::uint8_t>(strat.alice_output[i][strat.sigma[j]] * sc.kb +
                                                                 strat.bob_output[j][strat.kappa[i]]);
            responses.push_back(std::move(r));
        }
    }
    std::vector<ReducedPoint> all = project_all(Space::bidir, unpack_sorted(sc, std::move(responses)));
    std::vector<RationalVector> one_way;
    for (const auto& t : enumerate_fixed_cc_tables(sc, Direction::alice_to_bob, r_bits)) {
        one_way.push_back(project_bidir(t).coords);
    }
    std::sort(one_way.begin(), one_way.end(), coords_less);
    std::stable_partition(all.begin(), all.end(), [&](const ReducedPoint& p) {
        return std::binary_search(one_way.begin(), one_way.end(), p.coords, coords_less);
    });
    return all;
}

}  // namespace bellpoly
