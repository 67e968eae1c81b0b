#include "twobridge/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace twobridge {

// ---------------------------------------------------------------------------
// LinkDiagram

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::vector<std::vector<int>> components)
    : crossings_(std::move(crossings)), components_(std::move(components))
{
    const std::size_t n_edges = 2 * crossings_.size();
    head_.assign(n_edges, Incidence{-1, -1});
    tail_.assign(n_edges, Incidence{-1, -1});

    for (std::size_t c = 0; c < crossings_.size(); ++c) {
        const Crossing& x = crossings_[c];
        if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("diagram: crossing sign must be +1 or -1");
        if (x.id != static_cast<int>(c)) throw std::invalid_argument("diagram: crossing ids must be 0..c-1 in order");
        for (int slot = 0; slot < 4; ++slot) {
            const int e = x.ports[static_cast<std::size_t>(slot)];
            if (e < 0 || static_cast<std::size_t>(e) >= n_edges)
                throw std::invalid_argument("diagram: edge label out of range");
            const bool incoming = slot == 0 || slot == x.over_in_slot();
            auto& slot_ref = incoming ? head_[static_cast<std::size_t>(e)] : tail_[static_cast<std::size_t>(e)];
            if (slot_ref.crossing != -1) throw std::invalid_argument("diagram: edge used twice on one side");
            slot_ref = Incidence{static_cast<int>(c), slot};
        }
    }

    std::vector<char> seen(n_edges, 0);
    for (const auto& comp : components_) {
        if (comp.empty()) throw std::invalid_argument("diagram: empty component");
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const int e = comp[i];
            if (e < 0 || static_cast<std::size_t>(e) >= n_edges || seen[static_cast<std::size_t>(e)])
                throw std::invalid_argument("diagram: component edge invalid or repeated");
            seen[static_cast<std::size_t>(e)] = 1;
            const int next = comp[(i + 1) % comp.size()];
            const Incidence h = head_[static_cast<std::size_t>(e)];
            const Incidence t = tail_[static_cast<std::size_t>(next)];
            if (h.crossing != t.crossing || (h.slot + 2) % 4 != t.slot)
                throw std::invalid_argument("diagram: component does not follow its strand");
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(n_edges))
        throw std::invalid_argument("diagram: components do not cover all edges");

    // Connectivity over crossings.
    std::vector<int> root(crossings_.size());
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int a) { return root[a] == a ? a : root[a] = find(root[a]); };
    for (std::size_t e = 0; e < n_edges; ++e) root[find(head_[e].crossing)] = find(tail_[e].crossing);
    for (std::size_t c = 1; c < crossings_.size(); ++c)
        if (find(static_cast<int>(c)) != find(0)) throw std::invalid_argument("diagram: not connected");
}

int LinkDiagram::writhe() const
{
    int w = 0;
    for (const auto& x : crossings_) w += x.sign;
    return w;
}

// ---------------------------------------------------------------------------
// Plat layout builder.
//
// Strands run upward through positions 0..n-1. A letter crosses positions
// gen and gen+1; "left_over" means the strand entering bottom-left passes
// over. Each position has a virtual endpoint at the bottom and at the top;
// closure arcs join endpoints pairwise.

namespace {

struct Letter {
    int gen;
    bool left_over;
    int group;
};

struct End {
    bool top;
    int pos;
};

class PlatBuilder {
public:
    PlatBuilder(int positions, std::vector<Letter> word) : n_(positions), word_(std::move(word)) {}

    void close(End a, End b) { closure_.emplace_back(a, b); }

    // +1: the strand just above the bottom of `pos` runs upward; -1 downward.
    void orient(int pos, int dir) { hints_.emplace_back(pos, dir); }

    LinkDiagram build();

private:
    int port(int c, int slot) const { return 4 * c + slot; }
    int bottom(int pos) const { return 4 * crossings() + pos; }
    int top(int pos) const { return 4 * crossings() + n_ + pos; }
    int crossings() const { return static_cast<int>(word_.size()); }
    bool is_port(int node) const { return node < 4 * crossings(); }
    static int opposite(int p) { return (p & ~3) | ((p + 2) & 3); }

    void link(int a, int b)
    {
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }

    // Follows the arc from `from` (a port, or a virtual node entered from
    // `prev`) until the next port; marks virtual nodes on the way.
    int walk(int prev, int node)
    {
        while (!is_port(node)) {
            visited_virtual_[static_cast<std::size_t>(node - 4 * crossings())] = 1;
            const auto& nb = adj_[static_cast<std::size_t>(node)];
            if (nb.size() != 2) throw std::logic_error("plat builder: dangling endpoint");
            const int next = nb[0] == prev ? nb[1] : nb[0];
            prev = node;
            node = next;
        }
        return node;
    }

    int n_;
    std::vector<Letter> word_;
    std::vector<std::pair<End, End>> closure_;
    std::vector<std::pair<int, int>> hints_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> visited_virtual_;
};

LinkDiagram PlatBuilder::build()
{
    const int c_count = crossings();
    adj_.assign(static_cast<std::size_t>(4 * c_count + 2 * n_), {});
    visited_virtual_.assign(static_cast<std::size_t>(2 * n_), 0);

    // Builder slot numbering is counterclockwise with the under strand on
    // slots 0 and 2.
    std::vector<int> dangling(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) dangling[static_cast<std::size_t>(k)] = bottom(k);
    std::vector<int> first_port(static_cast<std::size_t>(n_), -1);
    for (int c = 0; c < c_count; ++c) {
        const Letter& l = word_[static_cast<std::size_t>(c)];
        if (l.gen < 0 || l.gen + 1 >= n_) throw std::logic_error("plat builder: generator out of range");
        int bl, br, tl, tr;
        if (l.left_over) {
            br = 0, tr = 1, tl = 2, bl = 3;
        } else {
            bl = 0, br = 1, tr = 2, tl = 3;
        }
        auto& left = dangling[static_cast<std::size_t>(l.gen)];
        auto& right = dangling[static_cast<std::size_t>(l.gen + 1)];
        link(left, port(c, bl));
        link(right, port(c, br));
        left = port(c, tl);
        right = port(c, tr);
    }
    for (int k = 0; k < n_; ++k) link(dangling[static_cast<std::size_t>(k)], top(k));
    for (const auto& [a, b] : closure_) link(a.top ? top(a.pos) : bottom(a.pos), b.top ? top(b.pos) : bottom(b.pos));

    std::vector<int> partner(static_cast<std::size_t>(4 * c_count), -1);
    for (int p = 0; p < 4 * c_count; ++p) {
        if (adj_[static_cast<std::size_t>(p)].size() != 1) throw std::logic_error("plat builder: port degree");
        partner[static_cast<std::size_t>(p)] = walk(p, adj_[static_cast<std::size_t>(p)][0]);
    }
    if (std::find(visited_virtual_.begin(), visited_virtual_.end(), 0) != visited_virtual_.end())
        throw std::logic_error("plat builder: closure leaves a crossingless component");

    // Orientation: 0 unknown, 1 entered, 2 exited.
    std::vector<int> state(static_cast<std::size_t>(4 * c_count), 0);
    std::vector<int> seeds;
    auto orient_from = [&](int entered) {
        int q = entered;
        do {
            auto& s_in = state[static_cast<std::size_t>(q)];
            auto& s_out = state[static_cast<std::size_t>(opposite(q))];
            if (s_in == 2 || s_out == 1) throw std::logic_error("plat builder: inconsistent orientation");
            s_in = 1;
            s_out = 2;
            q = partner[static_cast<std::size_t>(opposite(q))];
        } while (q != entered);
    };
    for (const auto& [pos, dir] : hints_) {
        const int b = bottom(pos);
        const auto& nb = adj_[static_cast<std::size_t>(b)];
        // The first neighbour of a bottom endpoint is its vertical one.
        const int first = walk(b, nb[0]);
        const int entered = dir > 0 ? first : opposite(first);
        if (state[static_cast<std::size_t>(entered)] == 1) continue;
        orient_from(entered);
        seeds.push_back(entered);
    }
    for (int p = 0; p < 4 * c_count; ++p) {
        if (state[static_cast<std::size_t>(p)] != 0) continue;
        orient_from(p);
        seeds.push_back(p);
    }

    // Edge labels along each component: the edge entering the j-th
    // visited port of a component gets label base + j.
    std::vector<int> label(static_cast<std::size_t>(4 * c_count), -1);
    std::vector<std::vector<int>> components;
    int base = 0;
    for (int seed : seeds) {
        std::vector<int> entered_ports;
        int q = seed;
        do {
            entered_ports.push_back(q);
            q = partner[static_cast<std::size_t>(opposite(q))];
        } while (q != seed);
        const int len = static_cast<int>(entered_ports.size());
        std::vector<int> comp;
        for (int j = 0; j < len; ++j) {
            label[static_cast<std::size_t>(entered_ports[static_cast<std::size_t>(j)])] = base + j;
            label[static_cast<std::size_t>(opposite(entered_ports[static_cast<std::size_t>(j)]))] =
                base + (j + 1) % len;
            comp.push_back(base + j);
        }
        components.push_back(std::move(comp));
        base += len;
    }

    std::vector<Crossing> out;
    out.reserve(static_cast<std::size_t>(c_count));
    int region = 0;
    for (int c = 0; c < c_count; ++c) {
        const Letter& l = word_[static_cast<std::size_t>(c)];
        if (c > 0) {
            const Letter& prev = word_[static_cast<std::size_t>(c - 1)];
            if (prev.gen != l.gen || prev.group != l.group || prev.left_over != l.left_over) ++region;
        }
        const int u = state[static_cast<std::size_t>(port(c, 0))] == 1 ? 0 : 2;
        Crossing x;
        x.id = c;
        x.twist_region = region;
        x.group = l.group;
        for (int k = 0; k < 4; ++k) x.ports[static_cast<std::size_t>(k)] = label[static_cast<std::size_t>(port(c, (u + k) % 4))];
        const bool over_in_at_3 = state[static_cast<std::size_t>(port(c, (u + 3) % 4))] == 1;
        x.sign = over_in_at_3 ? 1 : -1;
        out.push_back(x);
    }
    return LinkDiagram(std::move(out), std::move(components));
}

void append_power(std::vector<Letter>& word, int gen, const Integer& exponent, int group)
{
    const std::size_t count = to_count(abs(exponent));
    word.insert(word.end(), count, Letter{gen, exponent > 0, group});
}

}  // namespace

LinkDiagram build_standard(const RegCF& cf)
{
    if (!cf.odd_length()) throw std::invalid_argument("build_standard: even-length regular continued fraction");
    std::vector<Letter> word;
    const auto& c = cf.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int group = static_cast<int>(i) + 1;
        // Sign choice makes 3/2 = [1,1,1] the right-handed trefoil.
        if (i % 2 == 0)
            append_power(word, 1, -c[i], group);
        else
            append_power(word, 0, c[i], group);
    }
    PlatBuilder b(4, std::move(word));
    b.close({false, 0}, {false, 1});
    b.close({false, 2}, {false, 3});
    b.close({true, 0}, {true, 1});
    b.close({true, 2}, {true, 3});
    return b.build();
}

LinkDiagram build_murasugi(const MurasugiBlocks& mb)
{
    std::vector<Letter> word;
    const auto& blocks = mb.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const int group = static_cast<int>(i) + 1;
        const auto& n = blocks[i];
        if (i % 2 == 0) {
            append_power(word, 0, 1 - 2 * n[0], group);
            for (std::size_t j = 1; j < n.size(); ++j) {
                append_power(word, 1, 1, group);
                append_power(word, 0, 2 - 2 * n[j], group);
            }
            append_power(word, 0, -1, group);
        } else {
            append_power(word, 1, 2 * n[0] - 1, group);
            for (std::size_t j = 1; j < n.size(); ++j) {
                append_power(word, 0, -1, group);
                append_power(word, 1, 2 * n[j] - 2, group);
            }
            append_power(word, 1, 1, group);
        }
    }
    PlatBuilder b(3, std::move(word));
    if (blocks.size() % 2 == 1) {
        b.close({true, 0}, {false, 0});  // around the left
        b.close({true, 1}, {true, 2});
        b.close({false, 1}, {false, 2});
    } else {
        b.close({true, 0}, {true, 1});
        b.close({false, 1}, {false, 2});
        b.close({true, 2}, {false, 0});  // around the right and underneath
    }
    // Every level of the stack carries the pattern (up, down, up).
    b.orient(0, 1);
    b.orient(1, -1);
    b.orient(2, 1);
    return b.build();
}

LinkDiagram mirror(const LinkDiagram& d)
{
    std::vector<Crossing> out = d.crossings();
    for (auto& x : out) {
        const int o = x.over_in_slot();
        std::array<int, 4> ports{};
        for (int k = 0; k < 4; ++k) ports[static_cast<std::size_t>(k)] = x.ports[static_cast<std::size_t>((o + k) % 4)];
        x.ports = ports;
        x.sign = -x.sign;
    }
    return LinkDiagram(std::move(out), d.components());
}

// ---------------------------------------------------------------------------
// Seifert's algorithm

std::vector<int> seifert_circles(const LinkDiagram& d)
{
    const int n_edges = d.edge_count();
    // Smoothing: incoming under -> outgoing over, incoming over -> outgoing under.
    auto next = [&](int e) {
        const auto h = d.head(e);
        const Crossing& x = d.crossings()[static_cast<std::size_t>(h.crossing)];
        return h.slot == 0 ? x.ports[static_cast<std::size_t>(x.over_out_slot())] : x.ports[2];
    };
    std::vector<int> circle(static_cast<std::size_t>(n_edges), -1);
    int count = 0;
    for (int e = 0; e < n_edges; ++e) {
        if (circle[static_cast<std::size_t>(e)] != -1) continue;
        int f = e;
        do {
            circle[static_cast<std::size_t>(f)] = count;
            f = next(f);
        } while (f != e);
        ++count;
    }
    return circle;
}

SeifertGraph seifert_graph(const LinkDiagram& d)
{
    const auto circle = seifert_circles(d);
    SeifertGraph g;
    g.vertex_count = circle.empty() ? 0 : *std::max_element(circle.begin(), circle.end()) + 1;
    for (const auto& x : d.crossings()) {
        const int u = circle[static_cast<std::size_t>(x.ports[0])];
        const int v = circle[static_cast<std::size_t>(x.ports[static_cast<std::size_t>(x.over_in_slot())])];
        if (u == v) throw std::logic_error("seifert_graph: both smoothing arcs on one circle");
        g.edges.push_back(SeifertEdge{std::min(u, v), std::max(u, v), x.sign, x.id});
    }
    return g;
}

bool is_alternating(const LinkDiagram& d)
{
    for (const auto& comp : d.components()) {
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const bool under = d.head(comp[i]).slot == 0;
            const bool next_under = d.head(comp[(i + 1) % comp.size()]).slot == 0;
            if (under == next_under) return false;
        }
    }
    return true;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(const SeifertGraph& g)
{
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.vertex_count));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, static_cast<int>(i));
        adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, static_cast<int>(i));
    }
    return adj;
}

struct Blocks {
    std::vector<int> block_of_edge;
    std::vector<char> bridge;
};

// Lowlink DFS keyed on edge ids so parallel edges close cycles.
Blocks decompose(const SeifertGraph& g)
{
    const auto adj = adjacency(g);
    const std::size_t n = static_cast<std::size_t>(g.vertex_count);
    Blocks out{std::vector<int>(g.edges.size(), -1), std::vector<char>(g.edges.size(), 0)};
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    int timer = 0;
    int blocks = 0;

    struct Frame {
        int v;
        int via_edge;
        std::size_t next;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{static_cast<int>(root), -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = adj[static_cast<std::size_t>(f.v)];
            if (f.next < nb.size()) {
                const auto [w, eid] = nb[f.next++];
                if (eid == f.via_edge) continue;
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    edge_stack.push_back(eid);
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    stack.push_back({w, eid, 0});
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.push_back(eid);
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            const int parent = stack.back().v;
            low[static_cast<std::size_t>(parent)] =
                std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done.v)]);
            if (low[static_cast<std::size_t>(done.v)] > disc[static_cast<std::size_t>(parent)])
                out.bridge[static_cast<std::size_t>(done.via_edge)] = 1;
            if (low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(parent)]) {
                int eid;
                do {
                    eid = edge_stack.back();
                    edge_stack.pop_back();
                    out.block_of_edge[static_cast<std::size_t>(eid)] = blocks;
                } while (eid != done.via_edge);
                ++blocks;
            }
        }
    }
    return out;
}

}  // namespace

bool SeifertGraph::is_connected() const
{
    if (vertex_count == 0) return false;
    const auto adj = adjacency(*this);
    std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
    std::vector<int> todo{0};
    seen[0] = 1;
    int reached = 1;
    while (!todo.empty()) {
        const int v = todo.back();
        todo.pop_back();
        for (const auto& [w, eid] : adj[static_cast<std::size_t>(v)]) {
            (void)eid;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                todo.push_back(w);
            }
        }
    }
    return reached == vertex_count;
}

bool is_reduced(const SeifertGraph& g)
{
    if (!g.is_connected()) throw std::invalid_argument("is_reduced: graph is not connected");
    const Blocks b = decompose(g);
    return std::none_of(b.bridge.begin(), b.bridge.end(), [](char c) { return c != 0; });
}

TreeSigns spanning_tree_signs(const SeifertGraph& g)
{
    if (!g.is_connected()) throw std::invalid_argument("spanning_tree_signs: graph is not connected");
    const auto adj = adjacency(g);
    TreeSigns out;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count), 0);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = 1;
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop();
        for (const auto& [w, eid] : adj[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            (g.edges[static_cast<std::size_t>(eid)].sign > 0 ? out.d_plus : out.d_minus) += 1;
            todo.push(w);
        }
    }

    const Blocks b = decompose(g);
    std::vector<int> block_sign;
    out.choice_independent = true;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const std::size_t blk = static_cast<std::size_t>(b.block_of_edge[i]);
        if (blk >= block_sign.size()) block_sign.resize(blk + 1, 0);
        int& s = block_sign[blk];
        if (s == 0)
            s = g.edges[i].sign;
        else if (s != g.edges[i].sign)
            out.choice_independent = false;
    }
    return out;
}

std::pair<SeifertGraph, DiagramStats> seifert_data(const LinkDiagram& d)
{
    SeifertGraph g = seifert_graph(d);
    const TreeSigns ts = spanning_tree_signs(g);
    DiagramStats st;
    st.s = g.vertex_count;
    st.w = d.writhe();
    st.d_plus = ts.d_plus;
    st.d_minus = ts.d_minus;
    st.reduced = is_reduced(g);
    st.tree_choice_independent = ts.choice_independent;
    return {std::move(g), std::move(st)};
}

// ---------------------------------------------------------------------------
// SVG

std::string render_svg(const RegCF& cf)
{
    if (!cf.odd_length()) throw std::invalid_argument("render_svg: even-length regular continued fraction");
    constexpr int kBox = 60, kGap = 30, kRow = 40, kMargin = 40;
    const auto& c = cf.coeffs();
    const int n = static_cast<int>(c.size());
    const int width = 2 * kMargin + n * (kBox + kGap) + kGap;
    const int height = 2 * kMargin + 3 * kRow;
    auto y_of = [&](int row) { return kMargin + row * kRow; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
    const int x0 = kMargin, x1 = width - kMargin;
    for (int row = 0; row < 4; ++row)
        os << "<line x1=\"" << x0 << "\" y1=\"" << y_of(row) << "\" x2=\"" << x1 << "\" y2=\"" << y_of(row)
           << "\"/>\n";
    // End caps join strands 0-1 and 2-3 on both sides.
    for (int pair = 0; pair < 2; ++pair) {
        const int ya = y_of(2 * pair), yb = y_of(2 * pair + 1);
        os << "<path d=\"M " << x0 << ' ' << ya << " A " << kRow / 2 << ' ' << kRow / 2 << " 0 0 0 " << x0 << ' '
           << yb << "\"/>\n";
        os << "<path d=\"M " << x1 << ' ' << ya << " A " << kRow / 2 << ' ' << kRow / 2 << " 0 0 1 " << x1 << ' '
           << yb << "\"/>\n";
    }
    os << "</g>\n<g font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">\n";
    for (int i = 0; i < n; ++i) {
        // Odd boxes twist strands 1-2, even boxes strands 0-1.
        const int row = i % 2 == 0 ? 1 : 0;
        const int x = kMargin + kGap + i * (kBox + kGap);
        const int y = y_of(row) - 8;
        const std::string label = (i % 2 == 0 ? "" : "-") + c[static_cast<std::size_t>(i)].str();
        os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kBox << "\" height=\"" << kRow + 16
           << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << x + kBox / 2 << "\" y=\"" << y + (kRow + 16) / 2 + 6 << "\">" << label << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace twobridge
