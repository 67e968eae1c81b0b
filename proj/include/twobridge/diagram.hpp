#pragma once

// Oriented link diagrams for two-bridge links, Seifert's algorithm and
// the signed Seifert graph.
//
// A diagram is stored PD-style: 2c oriented edges labelled 0..2c-1 and,
// per crossing, the four incident edge labels listed counterclockwise
// starting from the incoming under-edge. The sign is +1 when the over
// strand enters at ports[3], -1 when it enters at ports[1].

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "twobridge/contfrac.hpp"

namespace twobridge {

struct Crossing {
    int id = 0;
    int sign = 0;
    int twist_region = 0;
    // 1-based twist box (standard diagram) or tangle index (Murasugi diagram).
    int group = 0;
    std::array<int, 4> ports{};

    int over_in_slot() const noexcept { return sign > 0 ? 3 : 1; }
    int over_out_slot() const noexcept { return sign > 0 ? 1 : 3; }
};

class LinkDiagram {
public:
    struct Incidence {
        int crossing;
        int slot;
    };

    /// Validates the PD structure: every edge label appears once as an
    /// incoming and once as an outgoing port, components list every edge
    /// once in traversal order, and the diagram is connected.
    LinkDiagram(std::vector<Crossing> crossings, std::vector<std::vector<int>> components);

    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    const std::vector<std::vector<int>>& components() const noexcept { return components_; }
    std::size_t crossing_count() const noexcept { return crossings_.size(); }
    std::size_t component_count() const noexcept { return components_.size(); }
    int edge_count() const noexcept { return static_cast<int>(head_.size()); }
    int writhe() const;

    /// Where edge e enters / leaves a crossing.
    Incidence head(int e) const { return head_.at(static_cast<std::size_t>(e)); }
    Incidence tail(int e) const { return tail_.at(static_cast<std::size_t>(e)); }

private:
    std::vector<Crossing> crossings_;
    std::vector<std::vector<int>> components_;
    std::vector<Incidence> head_;
    std::vector<Incidence> tail_;
};

struct SeifertEdge {
    int u;
    int v;
    int sign;
    int crossing;
};

/// Signed multigraph: one vertex per Seifert circle, one edge per crossing.
struct SeifertGraph {
    int vertex_count = 0;
    std::vector<SeifertEdge> edges;

    bool is_connected() const;
};

struct TreeSigns {
    int d_plus = 0;
    int d_minus = 0;
    // Every biconnected block of the graph is sign-pure, so every spanning
    // tree gives the same (d_plus, d_minus).
    bool choice_independent = false;
};

struct DiagramStats {
    Integer s;
    Integer w;
    Integer d_plus;
    Integer d_minus;
    bool reduced = false;
    bool tree_choice_independent = false;

    friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

/// Four-plat with twist boxes c1, -c2, c3, ..., c_{2m+1}; requires odd length.
LinkDiagram build_standard(const RegCF& cf);

/// Three-strand tangles T_1..T_t stacked and closed (the closure depends
/// on the parity of t). Odd tangles are positive, even tangles negative.
///   odd i:  s1^(1-2n_{i,1}) prod_{j>=2} (s2 s1^(2-2n_{i,j})) s1^-1
///   even i: s2^(2n_{i,1}-1) prod_{j>=2} (s1^-1 s2^(2n_{i,j}-2)) s2
LinkDiagram build_murasugi(const MurasugiBlocks& mb);

/// Crossing change at every crossing.
LinkDiagram mirror(const LinkDiagram& d);

/// Circle index for every edge; circles numbered by their smallest edge.
std::vector<int> seifert_circles(const LinkDiagram& d);
SeifertGraph seifert_graph(const LinkDiagram& d);

bool is_alternating(const LinkDiagram& d);

/// No edge whose removal disconnects the graph. Parallel edges are never cut edges.
bool is_reduced(const SeifertGraph& g);

/// Breadth-first spanning tree from vertex 0.
TreeSigns spanning_tree_signs(const SeifertGraph& g);

std::pair<SeifertGraph, DiagramStats> seifert_data(const LinkDiagram& d);

/// Box layout of the four-plat for a regular expansion, as SVG.
std::string render_svg(const RegCF& cf);

}  // namespace twobridge
