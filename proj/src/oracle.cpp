#include "ratnp/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>

namespace ratnp::examples {

OracleBox OracleBox::parse(const std::string& spec) {
    auto to_int = [&](const std::string& part) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != part.size() || part.empty() || v < 1 || v > 200)
            throw std::invalid_argument("NP_ORACLE_BOX: expected N or A,B with 1 <= N <= 200, got '" + spec + "'");
        return static_cast<Int>(v);
    };
    OracleBox box;
    const auto comma = spec.find(',');
    if (comma == std::string::npos) {
        box.a_max = box.b_max = to_int(spec);
    } else {
        box.a_max = to_int(spec.substr(0, comma));
        box.b_max = to_int(spec.substr(comma + 1));
    }
    return box;
}

OracleBox OracleBox::from_env() {
    const char* env = std::getenv("NP_ORACLE_BOX");
    if (!env || !*env) return {};
    return parse(env);
}

DivisorClass CurveWitness::as_class(const Surface& s) const {
    std::vector<Int> c;
    c.push_back(a);
    if (s->base() == BaseSurface::Hirzebruch) c.push_back(b);
    for (Int mi : m) c.push_back(-mi);
    return {s, std::move(c)};
}

bool CurveWitness::operator<(const CurveWitness& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return m < o.m;
}

bool CurveWitness::operator==(const CurveWitness& o) const { return a == o.a && b == o.b && m == o.m; }

namespace {

struct Best {
    std::optional<Int> value;
    CurveWitness witness;
    std::size_t examined = 0;

    void offer(Int v, const CurveWitness& w) {
        ++examined;
        if (!value || v < *value || (v == *value && w < witness)) {
            value = v;
            witness = w;
        }
    }
    void merge(const Best& o) {
        examined += o.examined;
        if (!o.value) return;
        const std::size_t keep = examined;
        offer(*o.value, o.witness);
        examined = keep;
    }
};

struct Target {
    Surface s;
    std::vector<Int> base;  // coefficients on the base basis
    std::vector<Int> w;     // weights: target = pi^*base - sum w_i E_i
    int l = 0;

    Int base_pair(Int a, Int b) const {
        const std::vector<Int> d = s->base_rank() == 1 ? std::vector<Int>{a} : std::vector<Int>{a, b};
        Int total = 0;
        for (int i = 0; i < s->base_rank(); ++i)
            for (int j = 0; j < s->base_rank(); ++j)
                total += base[static_cast<std::size_t>(i)] * s->gram(i, j) * d[static_cast<std::size_t>(j)];
        return total;
    }
    Int weighted(const std::vector<Int>& m) const {
        Int t = 0;
        for (int i = 0; i < l; ++i) t += w[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i)];
        return t;
    }
};

/// Largest sum of w_i m_i over positions [from, l) with 0 <= m_i <= cap and
/// sum m_i <= budget.
Int greedy_fill(const std::vector<Int>& w, std::size_t from, Int cap, Int budget) {
    std::vector<Int> pos;
    for (std::size_t i = from; i < w.size(); ++i)
        if (w[i] > 0) pos.push_back(w[i]);
    std::sort(pos.begin(), pos.end(), std::greater<>());
    Int total = 0;
    for (Int wi : pos) {
        if (budget <= 0) break;
        const Int take = std::min(cap, budget);
        total += wi * take;
        budget -= take;
    }
    return total;
}

/// Lexicographically smallest m maximizing sum w_i m_i under the box and
/// budget constraints. Returns (maximum, m).
std::pair<Int, std::vector<Int>> best_fill(const std::vector<Int>& w, Int cap, Int budget) {
    const Int target = greedy_fill(w, 0, cap, budget);
    std::vector<Int> m(w.size(), 0);
    Int gained = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (Int v = 0; v <= std::min(cap, budget); ++v) {
            if (gained + w[i] * v + greedy_fill(w, i + 1, cap, budget - v) == target) {
                m[i] = v;
                gained += w[i] * v;
                budget -= v;
                break;
            }
        }
    }
    return {target, m};
}

void offer_exceptionals(const Target& t, Best& best) {
    for (int i = 0; i < t.l; ++i) {
        CurveWitness wit{0, 0, std::vector<Int>(static_cast<std::size_t>(t.l), 0), "exceptional"};
        wit.m[static_cast<std::size_t>(i)] = -1;
        best.offer(t.w[static_cast<std::size_t>(i)], wit);
    }
}

void offer_filled(const Target& t, Best& best, Int a, Int b, Int cap, Int budget, const char* kind) {
    auto [gain, m] = best_fill(t.w, cap, budget);
    best.offer(t.base_pair(a, b) - gain, CurveWitness{a, b, std::move(m), kind});
}

template <class RowFn>
Best run_rows(Int rows, unsigned threads, RowFn row) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<Int>(threads, std::max<Int>(rows, 1)));
    std::vector<Best> partial(threads);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (Int r = 1 + t; r <= rows; r += threads) row(r, partial[t]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Best total;
    for (const auto& p : partial) total.merge(p);
    return total;
}

Best ruled_search(const Target& t, const OracleBox& box, unsigned threads) {
    const auto& s = t.s;
    const Int e = s->e();
    if (box.a_max < 2 || box.b_max < e + 2)
        throw std::invalid_argument("oracle box too small to contain C = 2C0 + (e+2)f: need a_max >= 2, b_max >= " +
                                    std::to_string(e + 2));
    const auto& cfg = s->config();
    const Int l = t.l;
    const Int ruling_pts = std::min<Int>(l, cfg.distinct_fibers ? 1 : 2);

    Best best;
    offer_exceptionals(t, best);
    offer_filled(t, best, 0, 1, 1, ruling_pts, "fiber");
    if (e >= 1) {
        const Int pts = cfg.away_from_min_section ? 0 : std::min<Int>(l, std::max<Int>(0, 2 - e));
        offer_filled(t, best, 1, 0, 1, pts, "min-section");
    } else {
        offer_filled(t, best, 1, 0, 1, ruling_pts, "ruling");
    }
    {
        std::vector<Int> m(static_cast<std::size_t>(l), 1);
        best.offer(t.base_pair(2, e + 2) - t.weighted(m), CurveWitness{2, e + 2, m, "C"});
    }

    Best rows = run_rows(box.a_max, threads, [&](Int a, Best& out) {
        for (Int b = std::max<Int>(1, a * e); b <= box.b_max; ++b)
            offer_filled(t, out, a, b, a, a * (2 - e) + 2 * b, "curve");
    });
    best.merge(rows);
    return best;
}

struct PlaneLimits {
    Int cap, sum_max, genus_max, pair_max;
    bool cubic_double_rule;
};

Best plane_search(const Target& t, const OracleBox& box, unsigned threads, bool pencil) {
    if (box.a_max < 3) throw std::invalid_argument("oracle box too small to contain a plane cubic: need a_max >= 3");
    Best best;
    offer_exceptionals(t, best);
    if (pencil) {
        std::vector<Int> m(static_cast<std::size_t>(t.l), 1);
        best.offer(t.base_pair(3, 0) - t.weighted(m), CurveWitness{3, 0, m, "pencil-member"});
    }

    // Points with equal weight are interchangeable, so enumerate multisets.
    std::map<Int, std::vector<int>> by_weight;
    for (int i = 0; i < t.l; ++i) by_weight[t.w[static_cast<std::size_t>(i)]].push_back(i);
    std::vector<std::vector<int>> groups;
    for (auto& [wv, idx] : by_weight) groups.push_back(idx);

    Best rows = run_rows(box.a_max, threads, [&](Int a, Best& out) {
        PlaneLimits lim{};
        if (a <= 2) {
            lim = {1, a == 1 ? 2 : 5, 0, a == 1 ? 2 : 2, false};
        } else {
            lim = {a - 1, pencil ? 3 * a - 1 : 3 * a, (a - 1) * (a - 2), a, !pencil && a == 3};
        }
        if (t.l == 0) {
            out.offer(t.base_pair(a, 0), CurveWitness{a, 0, {}, "curve"});
            return;
        }
        std::vector<Int> m(static_cast<std::size_t>(t.l), 0);
        const Int base = t.base_pair(a, 0);
        // DFS over groups, each filled with a non-increasing sequence.
        struct State {
            Int sum, genus, top1, top2;
        };
        auto push_top = [](State st, Int v) {
            if (v > st.top1) {
                st.top2 = st.top1;
                st.top1 = v;
            } else if (v > st.top2) {
                st.top2 = v;
            }
            return st;
        };
        std::function<void(std::size_t, std::size_t, Int, State)> dfs = [&](std::size_t g, std::size_t k, Int hi,
                                                                              State st) {
            if (g == groups.size()) {
                if (lim.cubic_double_rule && st.top1 == 2 && st.sum > 8) return;
                if (t.l >= 2 && st.top1 + st.top2 > lim.pair_max) return;
                out.offer(base - t.weighted(m), CurveWitness{a, 0, m, "curve"});
                return;
            }
            const auto& idx = groups[g];
            if (k == idx.size()) {
                dfs(g + 1, 0, lim.cap, st);
                return;
            }
            // Values are chosen non-increasing and written ascending into the
            // group's positions, which yields the lexicographically least
            // arrangement of the multiset.
            const std::size_t slot = idx.size() - 1 - k;
            for (Int v = 0; v <= hi; ++v) {
                State next = push_top(st, v);
                next.sum += v;
                next.genus += v * (v - 1);
                if (next.sum > lim.sum_max || next.genus > lim.genus_max) break;
                m[static_cast<std::size_t>(idx[slot])] = v;
                dfs(g, k + 1, v, next);
            }
            m[static_cast<std::size_t>(idx[slot])] = 0;
        };
        dfs(0, 0, lim.cap, State{0, 0, 0, 0});
    });
    best.merge(rows);
    return best;
}

}  // namespace

OracleResult brute_force_min(const DivisorClass& target, const OracleBox& box, unsigned threads) {
    const auto& s = target.surface();
    Target t{s, {}, {}, s->points()};
    for (int i = 0; i < s->base_rank(); ++i) t.base.push_back(target[i]);
    for (int i = 0; i < t.l; ++i) t.w.push_back(-target[s->base_rank() + i]);

    Best best;
    switch (curve_model_for(s)) {
        case CurveModel::RuledOnCurve: best = ruled_search(t, box, threads); break;
        case CurveModel::Plane:
        case CurveModel::DelPezzo: best = plane_search(t, box, threads, false); break;
        case CurveModel::CubicPencil: best = plane_search(t, box, threads, true); break;
        case CurveModel::Unmodeled:
            throw std::invalid_argument("oracle: no admissible-curve model for " + s->describe() +
                                        " (configuration flags missing)");
    }
    if (!best.value) throw std::logic_error("oracle: empty search space");
    return OracleResult{*best.value, best.witness, self_intersection(target), best.examined};
}

OracleResult brute_force_ample_oracle(const ExampleFamily& ex, const OracleBox& box, unsigned threads) {
    return brute_force_min(ex.A, box, threads);
}

OracleResult brute_force_ample_oracle(const ExampleFamily& ex) {
    return brute_force_ample_oracle(ex, OracleBox::from_env());
}

}  // namespace ratnp::examples
