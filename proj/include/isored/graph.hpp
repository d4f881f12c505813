#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isored/matrix.hpp"

namespace isored {

// Sorted set of vertex indices.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> indices);
    VertexSet(std::initializer_list<int> indices) : VertexSet(std::vector<int>(indices)) {}

    const std::vector<int>& indices() const { return v_; }
    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    bool contains(int u) const;
    bool contains_all(const VertexSet& other) const;

    // Members of 0..n-1 not in this set, in increasing order.
    VertexSet complement(int n) const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.v_ == b.v_; }
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.v_ < b.v_; }

    // Comma-separated list, e.g. "0,2,5".
    static VertexSet parse(const std::string& text);
    std::string to_string() const;

  private:
    std::vector<int> v_;
};

// Weighted digraph.  Undirected graphs store each edge in both directions
// (a loop once), so weight(u,v) = weight(v,u) holds for them by
// construction.  Absent edge ⇔ zero weight; zero-weight edges are never
// stored.  Input graphs carry constant weights; reduced graphs carry
// general 𝕎 weights.
class WGraph {
  public:
    WGraph() = default;
    WGraph(int n, bool directed);

    int size() const { return n_; }
    bool directed() const { return directed_; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(int u, std::string label);

    // Setting a zero weight removes the edge.
    void set_edge(int u, int v, const RationalFunction& w);
    RationalFunction weight(int u, int v) const;
    bool has_edge(int u, int v) const;

    // Stored arcs in (u,v)-sorted order; undirected graphs report both
    // directions of each edge.
    const std::map<std::pair<int, int>, RationalFunction>& arcs() const { return edges_; }

    RfMatrix adjacency() const;
    // True when every weight is a constant rational.
    bool constant_weights() const;
    QMatrix adjacency_constant() const;

  private:
    void check_vertex(int u) const;

    int n_ = 0;
    bool directed_ = false;
    std::map<std::pair<int, int>, RationalFunction> edges_;
    std::vector<std::string> labels_;
};

// Graph of a square 𝕎-matrix: arc (i,j) for every nonzero entry.
WGraph graph_of(const RfMatrix& m, bool directed = true);

// Edge-list text format:
//   first non-comment line   "directed n" or "undirected n"
//   edge lines               "u v"  or  "u v w"   (w integer or "p/q")
//   comments                 from '#' to end of line
// Undirected files list each edge once; loops are "u u [w]".
WGraph parse_graph(const std::string& text);
WGraph load_graph(const std::string& path);
std::string write_graph(const WGraph& g);

// True iff every cycle of g other than a loop meets S, i.e. the induced
// subgraph on the complement of S has no non-loop directed cycle.
// Raises EmptySet for empty S.
bool is_base_set(const WGraph& g, const VertexSet& S);

// Removes the rows and columns of S; raises DeletingAll when S is everything.
RfMatrix delete_vertices(const RfMatrix& m, const VertexSet& S);
QMatrix delete_vertices(const QMatrix& m, const VertexSet& S);

// Exact characteristic polynomial det(M − λI); degree n with leading
// coefficient (−1)^n, computed by the Faddeev–LeVerrier recurrence.
Polynomial charpoly(const QMatrix& m);
// Convenience overload for constant 𝕎-matrices; raises NonConstantEntries.
Polynomial charpoly(const RfMatrix& m);

}  // namespace isored
