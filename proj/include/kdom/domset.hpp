#pragma once

// Distance-k dominating set selection: every vertex v learns its k-ball,
// computes q_v = |N^k[v]|, learns q_w for every w in the ball, and selects
// the (q, id)-lexicographic maximum. The union of selections is returned.
//
// The distributed execution takes exactly 2k rounds on the engine: k rounds
// of adjacency flooding, then k rounds of q flooding. A centralized twin of
// the same selection rule is provided for agreement checks, plus a variant
// that solves components of diameter < 4k exactly (each vertex gathers its
// whole component, which is cheap there, and runs the oracle locally).

#include "kdom/exact_oracle.hpp"
#include "kdom/local_runtime.hpp"
#include "kdom/structural.hpp"

namespace kdom {

struct DomSetRun {
    std::map<VertexId, VertexId> chosen;      // v -> w_v
    VertexSet selected;                       // D = range of chosen
    std::map<VertexId, long long> ball_size;  // v -> |N^k[v]|
    int rounds = 0;
    long long messages = 0;
};

namespace detail {

struct DomSetProgram {
    struct Record {
        VertexId id;
        std::vector<VertexId> nbrs;
    };
    struct QRecord {
        VertexId id;
        long long q;
    };
    struct Message {
        std::vector<Record> records;
        std::vector<QRecord> qs;
    };
    struct Output {
        VertexId w;
        long long q;
    };
    struct State {
        VertexId self;
        int round = 0;
        std::map<VertexId, std::vector<VertexId>> records;
        std::map<VertexId, long long> qs;
        VertexSet ball;
    };

    int k;

    State init(VertexId self, const std::vector<VertexId>& nbrs) const {
        State st;
        st.self = self;
        st.records.emplace(self, nbrs);
        return st;
    }

    Step<Message, Output> on_round(State& st, const Inbox<Message>& inbox) const {
        Step<Message, Output> step;
        Message fresh;
        for (const auto& [sender, msg] : inbox) {
            for (const auto& rec : msg.records)
                if (st.records.emplace(rec.id, rec.nbrs).second) fresh.records.push_back(rec);
            for (const auto& qr : msg.qs)
                if (st.qs.emplace(qr.id, qr.q).second) fresh.qs.push_back(qr);
        }
        if (st.round == 0) fresh.records.push_back({st.self, st.records.at(st.self)});
        if (st.round == k) {
            // Ball complete; announce q_v.
            std::map<VertexId, int> dist;
            dist.emplace(st.self, 0);
            std::deque<VertexId> queue{st.self};
            while (!queue.empty()) {
                VertexId u = queue.front();
                queue.pop_front();
                st.ball.insert(u);
                if (dist.at(u) == k) continue;
                auto rec = st.records.find(u);
                if (rec == st.records.end()) continue;
                for (VertexId w : rec->second)
                    if (dist.emplace(w, dist.at(u) + 1).second) queue.push_back(w);
            }
            long long q = static_cast<long long>(st.ball.size());
            st.qs.emplace(st.self, q);
            fresh.qs.push_back({st.self, q});
        }
        if (st.round == 2 * k) {
            long long best_q = -1;
            VertexId best = -1;
            for (VertexId u : st.ball) {
                long long qu = st.qs.at(u);
                if (qu > best_q || (qu == best_q && u > best)) {
                    best_q = qu;
                    best = u;
                }
            }
            step.halt = true;
            step.output = Output{best, st.qs.at(st.self)};
        } else if (!fresh.records.empty() || !fresh.qs.empty()) {
            step.send.broadcast = std::move(fresh);
        }
        ++st.round;
        return step;
    }
};

inline DomSetRun collect_domset_trace(const ExecutionTrace<DomSetProgram::Output>& trace) {
    DomSetRun run;
    run.rounds = trace.rounds_executed;
    run.messages = trace.message_count;
    for (const auto& [v, out] : trace.outputs) {
        run.chosen.emplace(v, out.w);
        run.ball_size.emplace(v, out.q);
        run.selected.insert(out.w);
    }
    return run;
}

}  // namespace detail

// Algorithm: per-vertex (q, id)-maximal selection over k-balls, executed on
// the round-synchronous engine in 2k rounds.
inline DomSetRun domset(const Graph& g, int k, ExecPolicy policy = {}) {
    if (k < 1) throw std::invalid_argument("domset: k must be at least 1");
    if (g.order() == 0) throw std::invalid_argument("domset: empty graph");
    detail::DomSetProgram program{k};
    return detail::collect_domset_trace(run(g, program, 10 * (k + 1), policy));
}

// Same selection rule computed directly from the global view; must agree
// with the engine execution exactly. Reported rounds are the schedule
// length of the distributed run.
inline DomSetRun domset_centralized(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("domset: k must be at least 1");
    if (g.order() == 0) throw std::invalid_argument("domset: empty graph");
    DomSetRun run;
    run.rounds = 2 * k;
    std::vector<VertexSet> balls(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) {
        balls[static_cast<std::size_t>(i)] = k_ball(g, g.id_at(i), k);
        run.ball_size.emplace(g.id_at(i),
                              static_cast<long long>(balls[static_cast<std::size_t>(i)].size()));
    }
    for (int i = 0; i < g.order(); ++i) {
        VertexId best = -1;
        long long best_q = -1;
        for (VertexId u : balls[static_cast<std::size_t>(i)]) {
            long long qu = run.ball_size.at(u);
            if (qu > best_q || (qu == best_q && u > best)) {
                best_q = qu;
                best = u;
            }
        }
        run.chosen.emplace(g.id_at(i), best);
        run.selected.insert(best);
    }
    return run;
}

namespace detail {

// Gather-the-whole-component program for components of diameter < 4k: each
// vertex floods adjacency records until its view is closed under adjacency,
// then runs the exact solver on the gathered component and reports its own
// nearest solution vertex (max id on ties). The deterministic solver makes
// every vertex compute the same optimum.
struct ComponentSolveProgram {
    using Record = DomSetProgram::Record;
    using Message = std::vector<Record>;
    using Output = DomSetProgram::Output;

    struct State {
        VertexId self;
        std::map<VertexId, std::vector<VertexId>> records;
        std::size_t known_ids = 0;
    };

    int k;
    long long node_budget;

    State init(VertexId self, const std::vector<VertexId>& nbrs) const {
        State st;
        st.self = self;
        st.records.emplace(self, nbrs);
        return st;
    }

    static bool view_closed(const State& st) {
        for (const auto& [v, nbrs] : st.records)
            for (VertexId w : nbrs)
                if (!st.records.count(w)) return false;
        return true;
    }

    Step<Message, Output> on_round(State& st, const Inbox<Message>& inbox) const {
        Step<Message, Output> step;
        Message fresh;
        for (const auto& [sender, recs] : inbox)
            for (const auto& rec : recs)
                if (st.records.emplace(rec.id, rec.nbrs).second) fresh.push_back(rec);
        if (st.known_ids == 0) fresh.push_back({st.self, st.records.at(st.self)});
        st.known_ids = st.records.size();
        if (view_closed(st)) {
            // Final relay: vertices behind this one may still need the
            // records that arrived this round.
            if (!fresh.empty()) step.send.broadcast = std::move(fresh);
            std::vector<VertexId> verts;
            std::vector<Edge> edges;
            for (const auto& [v, nbrs] : st.records) {
                verts.push_back(v);
                for (VertexId w : nbrs)
                    if (w > v) edges.emplace_back(v, w);
            }
            Graph comp = Graph::make(verts, edges);
            OptimalCertificate cert = gamma_k_exact(comp, k, node_budget);
            std::map<VertexId, int> dist = bfs_distances(comp, st.self);
            VertexId best = -1;
            int best_d = -1;
            for (VertexId d : cert.optimum) {
                int dd = dist.at(d);
                if (best_d < 0 || dd < best_d || (dd == best_d && d > best)) {
                    best_d = dd;
                    best = d;
                }
            }
            step.halt = true;
            step.output = Output{best, static_cast<long long>(k_ball(comp, st.self, k).size())};
        } else if (!fresh.empty()) {
            step.send.broadcast = std::move(fresh);
        }
        return step;
    }
};

}  // namespace detail

// Pipeline entry point: components whose diameter is at least 4k run the
// selection program; smaller components are solved exactly in-engine (their
// diameter bounds the gather time, so this stays O(k) rounds). Reported
// rounds are the maximum over components.
inline DomSetRun domset_with_component_solve(const Graph& g, int k, ExecPolicy policy = {},
                                             long long oracle_budget = 20'000'000) {
    if (k < 1) throw std::invalid_argument("domset: k must be at least 1");
    if (g.order() == 0) throw std::invalid_argument("domset: empty graph");
    DomSetRun merged;
    for (const VertexSet& comp : components(g)) {
        Graph sub = induced_subgraph(g, comp);
        DomSetRun part;
        if (*diameter(sub) >= 4 * k) {
            part = domset(sub, k, policy);
        } else {
            detail::ComponentSolveProgram program{k, oracle_budget};
            part = detail::collect_domset_trace(run(sub, program, 4 * k + 1, policy));
        }
        merged.rounds = std::max(merged.rounds, part.rounds);
        merged.messages += part.messages;
        merged.chosen.insert(part.chosen.begin(), part.chosen.end());
        merged.ball_size.insert(part.ball_size.begin(), part.ball_size.end());
        merged.selected.insert(part.selected.begin(), part.selected.end());
    }
    return merged;
}

struct RatioReport {
    std::size_t selected_size = 0;
    std::size_t optimum_size = 0;
    double ratio = 0.0;
    long double log10_delta_bound = 0.0L;
    bool selected_valid = false;
    bool within_delta = false;
};

// Compares a run against a verified optimal distance-k dominating set and
// reports the approximation ratio together with the closed-form delta(t,k)
// ceiling.
inline RatioReport verify_constant_factor(const Graph& g, int k, int t, const DomSetRun& run,
                                   const VertexSet& optimum) {
    if (!is_distance_k_dominating(g, optimum, k))
        throw std::invalid_argument("verify_constant_factor: optimum is not a distance-k dominating set");
    RatioReport report;
    report.selected_size = run.selected.size();
    report.optimum_size = optimum.size();
    report.ratio = static_cast<double>(run.selected.size()) / static_cast<double>(optimum.size());
    report.selected_valid = is_distance_k_dominating(g, run.selected, k);
    report.log10_delta_bound = log10_delta(k, t);
    report.within_delta = within_log10_bound(static_cast<long double>(report.ratio),
                                             report.log10_delta_bound);
    return report;
}

}  // namespace kdom
