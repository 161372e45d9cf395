#include "sizeramsey/dfs.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "sizeramsey/errors.hpp"

namespace ramsey {

DfsResult dfs_grow(const Graph& g, const VertexSet& alive, const DfsOptions& opts) {
    const std::size_t nv = g.vertex_count();
    if (alive.universe_size() != nv)
        throw InvalidArgument("vertex mask universe does not match the graph");
    if (alive.cardinality() == 0) throw InvalidArgument("live vertex set is empty");
    if (opts.start && (*opts.start >= nv || !alive.contains(*opts.start)))
        throw InvalidArgument("start vertex is not in the live set");

    DfsResult res{DfsStop::exhausted, Path{}, Path{}, alive, VertexSet(nv), 0};
    VertexSet& u = res.u_set;
    VertexSet& w = res.w_set;
    Path& p = res.final_path;

    // Per-vertex resume position into the arc list. Vertices never return
    // to U, so arcs skipped once stay unusable for the rest of the walk.
    std::vector<std::uint32_t> cursor(nv, 0);
    Vertex restart_scan = 0; // min(U) never decreases
    bool first_root = true;

    const auto notify = [&]() {
        ++res.steps;
        if (opts.observer) opts.observer(DfsState{g, alive, p, u, w, res.steps});
    };

    while (true) {
        if (p.vertices.empty()) {
            Vertex root = 0;
            bool found = false;
            if (first_root && opts.start) {
                root = *opts.start;
                found = true;
            } else {
                while (restart_scan < nv && !u.contains(restart_scan)) ++restart_scan;
                if (restart_scan < nv) {
                    root = restart_scan;
                    found = true;
                }
            }
            first_root = false;
            if (!found) break; // U exhausted with nothing on the path
            u.erase(root);
            p.vertices.push_back(root);
            notify();
        } else {
            const Vertex head = p.vertices.back();
            const auto arcs = g.neighbours(head);
            std::uint32_t& pos = cursor[head];
            while (pos < arcs.size() && !u.contains(arcs[pos].to)) ++pos;
            if (pos < arcs.size()) {
                const Vertex next = arcs[pos].to;
                u.erase(next);
                p.vertices.push_back(next);
                p.edge_indices.push_back(arcs[pos].edge);
                notify();
            } else {
                p.vertices.pop_back();
                if (!p.edge_indices.empty()) p.edge_indices.pop_back();
                w.insert(head);
                notify();
                if (w.cardinality() == opts.stop_dead) {
                    res.stop = DfsStop::dead_target;
                    return res;
                }
                continue;
            }
        }
        if (p.vertices.size() > res.longest.vertices.size()) res.longest = p;
        if (p.vertices.size() == opts.stop_path) {
            res.stop = DfsStop::path_target;
            return res;
        }
    }
    res.stop = DfsStop::exhausted;
    return res;
}

namespace {

std::size_t pigeonhole_threshold(std::size_t colour_edges, std::uint32_t phase_count) {
    if (colour_edges == 0) return 1;
    return (colour_edges + phase_count - 1) / phase_count;
}

} // namespace

DfsCertificate phase_run(const Graph& g, const Colouring& c, std::uint32_t colour,
                         std::uint32_t n, std::uint32_t phase_count,
                         const DfsObserver& observer) {
    if (c.size() != g.edge_count())
        throw InvalidArgument("colouring length does not match the graph's edge count");
    if (colour >= c.colour_count()) throw InvalidArgument("colour index out of range");
    if (n == 0) throw InvalidArgument("path vertex count n must be at least 1");
    if (phase_count == 0) throw InvalidArgument("phase count must be at least 1");

    const MonoSubgraph mono = monochromatic_subgraph(g, c, colour);
    const Graph& live_graph = mono.graph;
    const std::size_t nv = live_graph.vertex_count();

    DfsCertificate cert;
    cert.colour = colour;
    cert.colour_edge_count = live_graph.edge_count();
    cert.pigeonhole_threshold = pigeonhole_threshold(cert.colour_edge_count, phase_count);
    cert.n = n;
    cert.phase_count = phase_count;

    VertexSet alive(nv);
    for (std::size_t v = 0; v < nv; ++v) alive.insert(static_cast<Vertex>(v));
    std::vector<bool> edge_collected(live_graph.edge_count(), false);

    DfsOptions grow_opts;
    grow_opts.stop_path = n;
    grow_opts.stop_dead = n;
    grow_opts.observer = observer;

    for (std::uint32_t phase = 1; alive.cardinality() > 0; ++phase) {
        DfsResult run = dfs_grow(live_graph, alive, grow_opts);
        if (run.stop == DfsStop::path_target) {
            Path found = std::move(run.final_path);
            for (EdgeIndex& e : found.edge_indices) e = mono.original_edge[e];
            cert.outcome = DfsOutcome::path_found;
            cert.path = std::move(found);
            return cert;
        }

        PhaseRecord rec;
        rec.index = phase;
        rec.s = std::move(run.w_set);
        rec.t = VertexSet(nv);
        for (Vertex v : run.final_path.vertices) rec.t.insert(v);
        rec.partial = rec.s.cardinality() < n;
        // Live edges incident to the dead set. An edge to a vertex killed
        // in an earlier phase was collected back then, so the seen bitmap
        // alone filters both duplicates and stale arcs.
        for (Vertex v : rec.s.to_vector()) {
            for (const auto& arc : live_graph.neighbours(v)) {
                if (edge_collected[arc.edge]) continue;
                edge_collected[arc.edge] = true;
                rec.f_edges.push_back(mono.original_edge[arc.edge]);
            }
        }
        rec.f_count = rec.f_edges.size();
        for (Vertex v : rec.s.to_vector()) alive.erase(v);
        cert.phase_log.push_back(std::move(rec));
    }

    const PhaseRecord* best = nullptr;
    for (const PhaseRecord& rec : cert.phase_log)
        if (!best || rec.f_count > best->f_count) best = &rec;
    if (best && best->f_count >= cert.pigeonhole_threshold) {
        cert.outcome = DfsOutcome::witness_found;
        cert.witness_phase = *best;
    } else {
        cert.outcome = DfsOutcome::budget_ok_contradiction;
    }
    return cert;
}

DfsCertificate find_monochromatic_path(const Graph& g, const Colouring& c, std::uint32_t n,
                                       const FindPathOptions& opts) {
    if (c.size() != g.edge_count())
        throw InvalidArgument("colouring length does not match the graph's edge count");
    const std::uint32_t r = c.colour_count();
    const std::uint32_t phases = 7 * r;

    const std::vector<std::size_t> sizes = c.class_sizes();
    std::vector<std::uint32_t> order(r);
    for (std::uint32_t i = 0; i < r; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return sizes[a] > sizes[b]; });

    DfsCertificate majority = phase_run(g, c, order[0], n, phases, opts.observer);
    if (majority.outcome == DfsOutcome::path_found || !opts.try_all_colours) return majority;
    for (std::uint32_t k = 1; k < r; ++k) {
        DfsCertificate cert = phase_run(g, c, order[k], n, phases, opts.observer);
        if (cert.outcome == DfsOutcome::path_found) return cert;
    }
    return majority;
}

ChainReport check_contradiction_chain(const DfsCertificate& cert, const RamseyParams& params,
                                      std::size_t total_edges) {
    if (cert.outcome == DfsOutcome::path_found)
        throw InvalidArgument(
            "certificate found a path early, so its phase log does not cover the colour class");

    ChainReport rep;
    rep.edges_over_r = static_cast<double>(total_edges) / static_cast<double>(params.r);
    rep.colour_edges = cert.colour_edge_count;
    for (const PhaseRecord& rec : cert.phase_log) {
        rep.f_sum += rec.f_count;
        rep.f_max = std::max(rep.f_max, rec.f_count);
    }
    const double log_r = std::log(static_cast<double>(params.r));
    const double nd = static_cast<double>(params.n);
    rep.phase_budget = 70.0 * log_r * nd;
    rep.budget_total = static_cast<double>(params.phase_count) * rep.phase_budget;
    rep.regime_lower_over_r = 500.0 * log_r * static_cast<double>(params.r) * nd;

    rep.majority_holds = rep.edges_over_r <= static_cast<double>(rep.colour_edges);
    rep.partition_holds = rep.f_sum == rep.colour_edges;
    rep.within_phase_budget = static_cast<double>(rep.f_max) < rep.phase_budget;
    rep.pigeonhole_holds =
        static_cast<double>(rep.f_max) >=
        static_cast<double>(rep.colour_edges) / static_cast<double>(cert.phase_count);
    rep.constants_hold = rep.budget_total < rep.regime_lower_over_r;
    rep.chain_closes = rep.regime_lower_over_r < rep.edges_over_r;
    return rep;
}

} // namespace ramsey
