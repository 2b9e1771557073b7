#include "foamho/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace foamho {

std::string Surface::name() const {
    switch (kind) {
        case SurfaceKind::Disk: return "disk";
        case SurfaceKind::Annulus: return "annulus";
        case SurfaceKind::Torus: return "torus";
    }
    return "?";
}

StateMask state_from_ordinal(int n, std::uint64_t ordinal) {
    StateMask m = 0;
    for (int c = 0; c < n; ++c)
        if ((ordinal >> (n - 1 - c)) & 1u) m |= (StateMask{1} << c);
    return m;
}

std::uint64_t ordinal_from_state(int n, StateMask m) {
    std::uint64_t t = 0;
    for (int c = 0; c < n; ++c)
        if ((m >> c) & 1u) t |= (std::uint64_t{1} << (n - 1 - c));
    return t;
}

int Diagram::edge_slot(int edge_id) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), edge_id,
                               [](const Edge& e, int id) { return e.id < id; });
    if (it == edges.end() || it->id != edge_id) return -1;
    return static_cast<int>(it - edges.begin());
}

const Edge& Diagram::edge_by_id(int edge_id) const {
    int s = edge_slot(edge_id);
    if (s < 0) throw InternalError("unknown edge id");
    return edges[s];
}

int CircleSet::pos_of_id(int id) const {
    for (size_t k = 0; k < circles.size(); ++k)
        if (circles[k].id == id) return static_cast<int>(k);
    return -1;
}

int CircleSet::pos_containing_end(int end_index) const {
    for (size_t k = 0; k < circles.size(); ++k)
        for (int e : circles[k].ends)
            if (e == end_index) return static_cast<int>(k);
    return -1;
}

const Circle& CircleSet::by_id(int id) const {
    int p = pos_of_id(id);
    if (p < 0) throw InternalError("unknown circle id");
    return circles[static_cast<size_t>(p)];
}

std::pair<H1, int> positive_orientation(const H1& cls) {
    for (int x : cls) {
        if (x > 0) return {cls, 1};
        if (x < 0) {
            H1 neg(cls.size());
            for (size_t k = 0; k < cls.size(); ++k) neg[k] = -cls[k];
            return {neg, -1};
        }
    }
    throw std::invalid_argument("positive_orientation: zero class");
}

namespace {

void add_to(H1& acc, const H1& v, int sign) {
    for (size_t k = 0; k < acc.size(); ++k) acc[k] += sign * v[k];
}

struct LineScanner {
    std::string_view text;
    size_t pos = 0;
    int line_no = 0;

    bool next(std::string& out) {
        while (pos < text.size()) {
            size_t nl = text.find('\n', pos);
            std::string_view raw = text.substr(
                pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = (nl == std::string_view::npos) ? text.size() : nl + 1;
            ++line_no;
            size_t hash = raw.find('#');
            if (hash != std::string_view::npos) raw = raw.substr(0, hash);
            size_t a = raw.find_first_not_of(" \t\r");
            if (a == std::string_view::npos) continue;
            size_t b = raw.find_last_not_of(" \t\r");
            out.assign(raw.substr(a, b - a + 1));
            return true;
        }
        return false;
    }
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& tok, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        fail(line, "expected integer, got '" + tok + "'");
    return v;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

// Parses an optional "h1 v1 [v2]" tail; pads with zeros to the surface rank.
H1 parse_h1(const std::vector<std::string>& tok, size_t from, int rank, int line) {
    H1 v(static_cast<size_t>(rank), 0);
    if (from >= tok.size()) return v;
    if (tok[from] != "h1") fail(line, "expected 'h1', got '" + tok[from] + "'");
    size_t count = tok.size() - from - 1;
    if (count > static_cast<size_t>(rank))
        fail(line, "h1 vector longer than surface rank " + std::to_string(rank));
    for (size_t k = 0; k < count; ++k)
        v[k] = parse_int(tok[from + 1 + k], line);
    return v;
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
    Diagram d;
    LineScanner sc{text};
    std::string line;
    bool have_surface = false;
    std::set<int> edge_ids, crossing_ids, loop_ids;
    std::vector<std::pair<Crossing, int>> pending_crossings;  // with line numbers

    while (sc.next(line)) {
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "surface") {
            if (have_surface) fail(sc.line_no, "duplicate surface line");
            if (tok.size() != 2) fail(sc.line_no, "surface line needs one argument");
            if (tok[1] == "disk") d.surface.kind = SurfaceKind::Disk;
            else if (tok[1] == "annulus") d.surface.kind = SurfaceKind::Annulus;
            else if (tok[1] == "torus") d.surface.kind = SurfaceKind::Torus;
            else fail(sc.line_no, "unknown surface '" + tok[1] + "'");
            have_surface = true;
        } else if (tok[0] == "edge") {
            if (!have_surface) fail(sc.line_no, "surface must be declared first");
            if (tok.size() < 2) fail(sc.line_no, "edge line needs an id");
            int id = parse_int(tok[1], sc.line_no);
            if (!edge_ids.insert(id).second)
                fail(sc.line_no, "duplicate edge id " + std::to_string(id));
            d.edges.push_back({id, parse_h1(tok, 2, d.surface.h1_rank(), sc.line_no)});
        } else if (tok[0] == "crossing") {
            if (!have_surface) fail(sc.line_no, "surface must be declared first");
            if (tok.size() != 6) fail(sc.line_no, "crossing line needs an id and 4 ports");
            Crossing c;
            c.id = parse_int(tok[1], sc.line_no);
            if (!crossing_ids.insert(c.id).second)
                fail(sc.line_no, "duplicate crossing id " + std::to_string(c.id));
            for (int k = 0; k < 4; ++k) {
                const std::string& t = tok[static_cast<size_t>(2 + k)];
                size_t dot = t.find('.');
                if (dot == std::string::npos)
                    fail(sc.line_no, "port must look like <edge>.<0|1>, got '" + t + "'");
                c.ports[static_cast<size_t>(k)].edge =
                    parse_int(t.substr(0, dot), sc.line_no);
                int end = parse_int(t.substr(dot + 1), sc.line_no);
                if (end != 0 && end != 1) fail(sc.line_no, "port end must be 0 or 1");
                c.ports[static_cast<size_t>(k)].end = end;
            }
            pending_crossings.push_back({c, sc.line_no});
        } else if (tok[0] == "loop") {
            if (!have_surface) fail(sc.line_no, "surface must be declared first");
            if (tok.size() < 2) fail(sc.line_no, "loop line needs an id");
            int id = parse_int(tok[1], sc.line_no);
            if (!loop_ids.insert(id).second)
                fail(sc.line_no, "duplicate loop id " + std::to_string(id));
            d.loops.push_back({id, parse_h1(tok, 2, d.surface.h1_rank(), sc.line_no)});
        } else {
            fail(sc.line_no, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!have_surface) throw ParseError("missing surface line");

    std::sort(d.edges.begin(), d.edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });

    // Incidence: every edge end must be referenced by exactly one port.
    std::vector<int> uses(2 * d.edges.size(), 0);
    for (auto& [c, line_no] : pending_crossings) {
        for (const EdgeEnd& p : c.ports) {
            int slot = d.edge_slot(p.edge);
            if (slot < 0)
                fail(line_no, "crossing " + std::to_string(c.id) +
                                  " references undeclared edge " + std::to_string(p.edge));
            ++uses[static_cast<size_t>(2 * slot + p.end)];
        }
        d.crossings.push_back(c);
    }
    for (size_t k = 0; k < uses.size(); ++k) {
        if (uses[k] != 1)
            throw ParseError("edge " + std::to_string(d.edges[k / 2].id) + " end " +
                             std::to_string(k % 2) + " used " + std::to_string(uses[k]) +
                             " times (must be exactly 1)");
    }
    if (d.n() > 32) throw ParseError("more than 32 crossings are not supported");
    return d;
}

std::string serialize_diagram(const Diagram& d) {
    std::ostringstream out;
    out << "surface " << d.surface.name() << "\n";
    auto h1_tail = [&](const H1& v) {
        std::string s;
        if (!v.empty()) {
            s = " h1";
            for (int x : v) s += " " + std::to_string(x);
        }
        return s;
    };
    for (const Edge& e : d.edges) out << "edge " << e.id << h1_tail(e.h1) << "\n";
    for (const Crossing& c : d.crossings) {
        out << "crossing " << c.id;
        for (const EdgeEnd& p : c.ports) out << " " << p.edge << "." << p.end;
        out << "\n";
    }
    for (const FreeLoop& l : d.loops) out << "loop " << l.id << h1_tail(l.h1) << "\n";
    return out.str();
}

namespace {

// Port pairing of a smoothing: Positive joins ports (0,1) and (2,3),
// Negative joins (0,3) and (1,2).
int paired_port(Smoothing sm, int port) {
    if (sm == Smoothing::Positive) return port ^ 1;
    return 3 - port;
}

}  // namespace

CircleSet resolve_state(const Diagram& d, StateMask s) {
    const size_t num_ends = 2 * d.edges.size();
    // end index -> (crossing position, port)
    std::vector<std::pair<int, int>> at(num_ends, {-1, -1});
    for (int c = 0; c < d.n(); ++c)
        for (int k = 0; k < 4; ++k)
            at[static_cast<size_t>(d.end_index(d.crossings[static_cast<size_t>(c)]
                                                   .ports[static_cast<size_t>(k)]))] = {c, k};

    CircleSet cs;
    std::vector<bool> visited(num_ends, false);
    const int rank = d.surface.h1_rank();

    for (size_t start = 0; start < num_ends; ++start) {
        if (visited[start]) continue;
        Circle circ;
        circ.cls.assign(static_cast<size_t>(rank), 0);
        size_t cur = start;
        do {
            visited[cur] = true;
            circ.ends.push_back(static_cast<int>(cur));
            int slot = static_cast<int>(cur / 2);
            int end = static_cast<int>(cur % 2);
            add_to(circ.cls, d.edges[static_cast<size_t>(slot)].h1, end == 0 ? 1 : -1);
            size_t other = static_cast<size_t>(2 * slot + (1 - end));
            visited[other] = true;
            circ.ends.push_back(static_cast<int>(other));
            auto [cpos, port] = at[other];
            if (cpos < 0) throw InternalError("edge end not attached to a crossing");
            int q = paired_port(smoothing_at(s, cpos), port);
            cur = static_cast<size_t>(d.end_index(
                d.crossings[static_cast<size_t>(cpos)].ports[static_cast<size_t>(q)]));
        } while (cur != start);
        std::sort(circ.ends.begin(), circ.ends.end());
        circ.id = circ.ends.front();
        if (is_zero(circ.cls)) {
            circ.essential = false;
        } else {
            circ.essential = true;
            std::tie(circ.canon, circ.sign) = positive_orientation(circ.cls);
        }
        cs.circles.push_back(std::move(circ));
    }

    for (size_t k = 0; k < d.loops.size(); ++k) {
        Circle circ;
        circ.id = d.loop_circle_id(static_cast<int>(k));
        circ.cls = d.loops[k].h1;
        circ.cls.resize(static_cast<size_t>(rank), 0);
        if (is_zero(circ.cls)) {
            circ.essential = false;
        } else {
            circ.essential = true;
            std::tie(circ.canon, circ.sign) = positive_orientation(circ.cls);
        }
        cs.circles.push_back(std::move(circ));
    }

    std::sort(cs.circles.begin(), cs.circles.end(),
              [](const Circle& a, const Circle& b) { return a.id < b.id; });
    return cs;
}

Transition classify_transition(const Diagram& d, StateMask s, int p) {
    CircleSet before = resolve_state(d, s);
    CircleSet after = resolve_state(d, s ^ (StateMask{1} << p));

    auto ids_at_crossing = [&](const CircleSet& cs) {
        std::vector<int> ids;
        for (const EdgeEnd& port : d.crossings[static_cast<size_t>(p)].ports) {
            int pos = cs.pos_containing_end(d.end_index(port));
            if (pos < 0) throw InternalError("crossing port not on any circle");
            int id = cs.circles[static_cast<size_t>(pos)].id;
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
        }
        std::sort(ids.begin(), ids.end());
        return ids;
    };

    Transition t;
    t.from = ids_at_crossing(before);
    t.to = ids_at_crossing(after);
    if (t.from.size() == 2 && t.to.size() == 1) t.kind = Transition::Merge;
    else if (t.from.size() == 1 && t.to.size() == 2) t.kind = Transition::Split;
    else if (t.from.size() == 1 && t.to.size() == 1) t.kind = Transition::SelfGlue;
    else throw InternalError("impossible circle change at a crossing");
    return t;
}

SmoothedDiagram smooth_crossing(const Diagram& d, int p, Smoothing sm) {
    if (p < 0 || p >= d.n()) throw std::invalid_argument("no such crossing");
    SmoothedDiagram out;
    out.removed_crossing = p;
    out.smoothing = sm;
    out.diagram.surface = d.surface;

    const Crossing& cr = d.crossings[static_cast<size_t>(p)];
    // Gluing partner among the removed crossing's edge ends, by end index.
    std::map<int, int> glued;
    for (int k = 0; k < 4; ++k) {
        int q = paired_port(sm, k);
        glued[d.end_index(cr.ports[static_cast<size_t>(k)])] =
            d.end_index(cr.ports[static_cast<size_t>(q)]);
    }

    // Where every other edge end is anchored.
    std::map<int, std::pair<int, int>> anchored;  // end index -> (crossing pos, port)
    for (int c = 0; c < d.n(); ++c) {
        if (c == p) continue;
        for (int k = 0; k < 4; ++k)
            anchored[d.end_index(d.crossings[static_cast<size_t>(c)]
                                     .ports[static_cast<size_t>(k)])] = {c, k};
    }

    auto other_end = [](int end_index) { return end_index ^ 1; };
    auto edge_of = [&](int end_index) { return d.edges[static_cast<size_t>(end_index / 2)].id; };

    // Walk from an anchored end through the gluings until the next anchor,
    // collecting the traversed original edges with directions.
    auto walk = [&](int start_end, std::vector<std::pair<int, bool>>& parts) -> int {
        int cur = start_end;
        while (true) {
            bool forward = (cur % 2 == 0);  // entering at the tail
            parts.push_back({edge_of(cur), forward});
            int exit = other_end(cur);
            auto g = glued.find(exit);
            if (g == glued.end()) return exit;  // anchored terminal
            cur = g->second;
        }
    };

    std::set<int> consumed_ends;  // original ends swallowed into chains
    struct Chain {
        std::vector<std::pair<int, bool>> parts;
        int start_end, final_end;
    };
    std::vector<Chain> chains;
    for (auto& [end, loc] : anchored) {
        if (consumed_ends.count(end)) continue;
        Chain ch;
        ch.start_end = end;
        ch.final_end = walk(end, ch.parts);
        // Mark both terminals and interior glued ends as consumed.
        consumed_ends.insert(end);
        consumed_ends.insert(ch.final_end);
        for (auto& [eid, fwd] : ch.parts) {
            int slot = d.edge_slot(eid);
            consumed_ends.insert(2 * slot);
            consumed_ends.insert(2 * slot + 1);
        }
        // Each open chain is found from both terminals; keep the one whose
        // start has the smaller end index.
        if (ch.final_end < ch.start_end) continue;
        chains.push_back(std::move(ch));
    }

    const int rank = d.surface.h1_rank();
    std::map<int, std::pair<int, int>> new_end_location;  // new end index placeholder
    // Build new edges; id = smallest original edge id in the chain.
    std::map<int, int> end_to_new_edge;  // original terminal end -> new edge id
    std::map<int, int> end_is_tail;      // original terminal end -> 0/1 (new end)
    for (const Chain& ch : chains) {
        int id = ch.parts.front().first;
        for (auto& [eid, fwd] : ch.parts) id = std::min(id, eid);
        H1 h(static_cast<size_t>(rank), 0);
        for (auto& [eid, fwd] : ch.parts) add_to(h, d.edge_by_id(eid).h1, fwd ? 1 : -1);
        out.diagram.edges.push_back({id, h});
        out.edge_parts[id] = ch.parts;
        end_to_new_edge[ch.start_end] = id;
        end_is_tail[ch.start_end] = 0;
        end_to_new_edge[ch.final_end] = id;
        end_is_tail[ch.final_end] = 1;
    }
    std::sort(out.diagram.edges.begin(), out.diagram.edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });

    // Closed chains through the removed crossing become free loops.
    int max_loop_id = -1;
    for (const FreeLoop& l : d.loops) max_loop_id = std::max(max_loop_id, l.id);
    std::vector<std::pair<int, std::pair<H1, std::pair<int, bool>>>> closed;  // (min edge id, ...)
    {
        std::set<int> seen;
        for (auto& [end, partner] : glued) {
            if (consumed_ends.count(end) || seen.count(end)) continue;
            // Trace the closed cycle starting along this glued end's edge.
            int cur = end;
            H1 h(static_cast<size_t>(rank), 0);
            int min_edge = edge_of(end);
            int min_end = end;
            std::pair<int, bool> rep{edge_of(end), end % 2 == 0};
            do {
                seen.insert(cur);
                bool forward = (cur % 2 == 0);
                if (cur < min_end) {
                    min_end = cur;
                    rep = {edge_of(cur), forward};
                }
                min_edge = std::min(min_edge, edge_of(cur));
                add_to(h, d.edge_by_id(edge_of(cur)).h1, forward ? 1 : -1);
                int exit = other_end(cur);
                seen.insert(exit);
                cur = glued.at(exit);
            } while (cur != end);
            closed.push_back({min_edge, {h, rep}});
        }
    }
    std::sort(closed.begin(), closed.end());
    for (const FreeLoop& l : d.loops) out.diagram.loops.push_back(l);
    for (auto& [min_edge, rest] : closed) {
        int id = ++max_loop_id;
        out.diagram.loops.push_back({id, rest.first});
        out.new_loop_rep[id] = rest.second;
    }
    for (const FreeLoop& l : d.loops) out.loop_origin[l.id] = l.id;

    // Remaining crossings keep their relative order; ports are remapped.
    for (int c = 0; c < d.n(); ++c) {
        if (c == p) continue;
        Crossing nc;
        nc.id = d.crossings[static_cast<size_t>(c)].id;
        for (int k = 0; k < 4; ++k) {
            int end = d.end_index(d.crossings[static_cast<size_t>(c)].ports[static_cast<size_t>(k)]);
            auto it = end_to_new_edge.find(end);
            if (it == end_to_new_edge.end())
                throw InternalError("anchored end missing from chain map");
            nc.ports[static_cast<size_t>(k)] = {it->second, end_is_tail.at(end)};
        }
        out.diagram.crossings.push_back(nc);
    }
    return out;
}

}  // namespace foamho
