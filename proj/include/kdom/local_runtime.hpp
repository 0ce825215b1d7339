#pragma once

// Deterministic round-synchronous LOCAL-model execution engine. Each vertex
// runs a copy of a NodeProgram; per round every active node consumes the
// messages its neighbors sent in the previous round and emits messages,
// an optional halt, and an optional output. Messages are arbitrary values
// and are counted, never size-restricted.
//
// Initial knowledge of a node is its own id and its sorted neighbor id
// list. A node's state after r rounds is therefore a function of the
// subgraph induced on its r-ball, which the tests assert directly.
//
// Node steps may be evaluated sequentially (ascending id), in parallel, or
// in a seeded shuffled order; programs must not be able to tell the
// difference, and all three modes produce identical traces.

#include <future>
#include <thread>

#include "kdom/generators.hpp"
#include "kdom/graph.hpp"

namespace kdom {

template <class Msg>
using Inbox = std::map<VertexId, Msg>;

template <class Msg>
struct Outgoing {
    std::optional<Msg> broadcast;   // sent to every neighbor
    std::map<VertexId, Msg> to;     // per-neighbor messages (override broadcast)
};

template <class Msg, class Out>
struct Step {
    Outgoing<Msg> send;
    bool halt = false;
    std::optional<Out> output;
};

template <class P>
concept NodeProgram = requires(const P& p, typename P::State& st,
                               const Inbox<typename P::Message>& inbox, VertexId v,
                               const std::vector<VertexId>& nbrs) {
    { p.init(v, nbrs) } -> std::same_as<typename P::State>;
    { p.on_round(st, inbox) } -> std::same_as<Step<typename P::Message, typename P::Output>>;
};

template <class Out>
struct ExecutionTrace {
    int rounds_executed = 0;  // round index at which the last node halted
    std::map<VertexId, Out> outputs;
    long long message_count = 0;
};

template <class Out>
struct RoundLimitExceeded : std::runtime_error {
    ExecutionTrace<Out> partial;
    std::vector<VertexId> unhalted;

    RoundLimitExceeded(ExecutionTrace<Out> trace, std::vector<VertexId> pending)
        : std::runtime_error("local runtime: round limit reached with " +
                             std::to_string(pending.size()) + " nodes still running"),
          partial(std::move(trace)), unhalted(std::move(pending)) {}
};

struct ExecPolicy {
    enum class Mode { sequential, parallel, shuffled };
    Mode mode = Mode::sequential;
    std::uint64_t shuffle_seed = 0;
    unsigned threads = 4;
};

template <NodeProgram P>
ExecutionTrace<typename P::Output> run(const Graph& g, const P& program, int max_rounds,
                                       ExecPolicy policy = {}) {
    using State = typename P::State;
    using Msg = typename P::Message;
    using Out = typename P::Output;
    if (max_rounds < 0) throw std::invalid_argument("run: negative round limit");

    const int n = g.order();
    std::vector<State> states;
    states.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) states.push_back(program.init(g.id_at(i), g.neighbors(g.id_at(i))));

    std::vector<char> halted(static_cast<std::size_t>(n), 0);
    std::vector<Inbox<Msg>> inboxes(static_cast<std::size_t>(n));
    ExecutionTrace<Out> trace;
    int remaining = n;

    for (int round = 0; remaining > 0 && round <= max_rounds; ++round) {
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(remaining));
        for (int i = 0; i < n; ++i)
            if (!halted[static_cast<std::size_t>(i)]) order.push_back(i);
        if (policy.mode == ExecPolicy::Mode::shuffled) {
            SplitMix64 rng(policy.shuffle_seed + static_cast<std::uint64_t>(round));
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng.below(i)]);
        }

        std::vector<std::optional<Step<Msg, Out>>> steps(static_cast<std::size_t>(n));
        auto eval_range = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t j = lo; j < hi; ++j) {
                int i = order[j];
                steps[static_cast<std::size_t>(i)] =
                    program.on_round(states[static_cast<std::size_t>(i)],
                                     inboxes[static_cast<std::size_t>(i)]);
            }
        };
        if (policy.mode == ExecPolicy::Mode::parallel && order.size() > 1) {
            unsigned workers = std::max(1u, policy.threads);
            std::size_t chunk = (order.size() + workers - 1) / workers;
            std::vector<std::future<void>> futures;
            for (std::size_t lo = 0; lo < order.size(); lo += chunk)
                futures.push_back(std::async(std::launch::async, eval_range, lo,
                                             std::min(lo + chunk, order.size())));
            for (auto& f : futures) f.get();
        } else {
            eval_range(0, order.size());
        }

        // Merge phase: deliveries and halts applied in ascending id order.
        std::vector<Inbox<Msg>> next(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (!steps[static_cast<std::size_t>(i)]) continue;
            Step<Msg, Out>& step = *steps[static_cast<std::size_t>(i)];
            VertexId self = g.id_at(i);
            if (step.send.broadcast) {
                for (int w : g.neighbors_by_index(i)) {
                    next[static_cast<std::size_t>(w)].insert_or_assign(self, *step.send.broadcast);
                    ++trace.message_count;
                }
            }
            for (auto& [target, msg] : step.send.to) {
                if (!g.has_edge(self, target))
                    throw std::invalid_argument("local runtime: message to non-neighbor");
                next[static_cast<std::size_t>(g.index_of(target))].insert_or_assign(self,
                                                                                    std::move(msg));
                ++trace.message_count;
            }
            if (step.halt) {
                halted[static_cast<std::size_t>(i)] = 1;
                --remaining;
                trace.rounds_executed = round;
                if (step.output) trace.outputs.emplace(self, std::move(*step.output));
            }
        }
        inboxes = std::move(next);
    }

    if (remaining > 0) {
        std::vector<VertexId> pending;
        for (int i = 0; i < n; ++i)
            if (!halted[static_cast<std::size_t>(i)]) pending.push_back(g.id_at(i));
        trace.rounds_executed = max_rounds;
        throw RoundLimitExceeded<Out>(std::move(trace), std::move(pending));
    }
    return trace;
}

namespace detail {

// Flood-and-collect: every node floods (id, adjacency) records for k rounds
// and halts with the subgraph induced on the vertices it has seen within
// distance k.
struct GatherProgram {
    struct Record {
        VertexId id;
        std::vector<VertexId> nbrs;
    };
    using Message = std::vector<Record>;
    using Output = Graph;

    struct State {
        VertexId self;
        int round = 0;
        std::map<VertexId, std::vector<VertexId>> records;
    };

    int k;

    State init(VertexId self, const std::vector<VertexId>& nbrs) const {
        State st;
        st.self = self;
        st.records.emplace(self, nbrs);
        return st;
    }

    static Graph ball_view(const State& st, int radius) {
        // BFS over collected records; ids without a record are outside the
        // gathered view and get dropped.
        std::map<VertexId, int> dist;
        dist.emplace(st.self, 0);
        std::deque<VertexId> queue{st.self};
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            auto rec = st.records.find(u);
            if (rec == st.records.end() || dist.at(u) == radius) continue;
            for (VertexId w : rec->second)
                if (dist.emplace(w, dist.at(u) + 1).second) queue.push_back(w);
        }
        std::vector<VertexId> verts;
        for (const auto& [v, d] : dist)
            if (st.records.count(v)) verts.push_back(v);
        std::vector<Edge> edges;
        for (VertexId v : verts)
            for (VertexId w : st.records.at(v))
                if (w > v && dist.count(w) && st.records.count(w)) edges.emplace_back(v, w);
        return Graph::make(verts, edges);
    }

    Step<Message, Output> on_round(State& st, const Inbox<Message>& inbox) const {
        Step<Message, Output> step;
        Message fresh;
        for (const auto& [sender, recs] : inbox)
            for (const auto& rec : recs)
                if (st.records.emplace(rec.id, rec.nbrs).second) fresh.push_back(rec);
        if (st.round == 0) {
            fresh.push_back({st.self, st.records.at(st.self)});
        }
        if (st.round == k) {
            step.halt = true;
            step.output = ball_view(st, k);
        } else if (!fresh.empty()) {
            step.send.broadcast = std::move(fresh);
        }
        ++st.round;
        return step;
    }
};

}  // namespace detail

// Runs the k-round flood-and-collect program; each vertex's output is the
// subgraph induced on N^k[v].
inline std::map<VertexId, Graph> gather_k_hop(const Graph& g, int k, ExecPolicy policy = {}) {
    if (k < 0) throw std::invalid_argument("gather_k_hop: negative radius");
    detail::GatherProgram program{k};
    auto trace = run(g, program, 10 * (k + 1), policy);
    return trace.outputs;
}

}  // namespace kdom
