#pragma once

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "rsos/model.hpp"
#include "rsos/qseries.hpp"

namespace rsos {

// post-segment ends at height c
struct PostSeg {
    int c = 0;
    friend bool operator==(const PostSeg&, const PostSeg&) = default;
};

// e=0: pre-segment SE (arrives from a+1); f=0: post-segment NE (leaves towards b+1)
struct Wings {
    int e = 0;
    int f = 0;
    friend bool operator==(const Wings&, const Wings&) = default;
};

using Boundary = std::variant<PostSeg, Wings>;

struct Path {
    ModelShape model;
    std::vector<int> heights;
    Boundary boundary;

    int L() const { return static_cast<int>(heights.size()) - 1; }
    int a() const { return heights.front(); }
    int b() const { return heights.back(); }
    bool has_wings() const { return std::holds_alternative<Wings>(boundary); }
    // throw std::logic_error when the boundary is of the other kind
    int e() const;
    int f() const;
    int c() const;

    friend bool operator==(const Path&, const Path&) = default;
};

// throws std::invalid_argument naming the violated invariant
void validate(const Path& h);
Path make_path(const ModelShape& m, std::vector<int> heights, Boundary bd);

enum class Shape { StraightUp, StraightDown, PeakUp, PeakDown };

struct VertexInfo {
    Shape shape = Shape::StraightUp;
    // parity of the band holding the outgoing segment; empty when that band is outside the grid
    std::optional<bool> odd;
    bool scoring = false;
};

// PeakUp is a local maximum, PeakDown a local minimum.
// Vertex 0 of a PostSeg path has no incoming segment: std::invalid_argument.
VertexInfo classify_vertex(const Path& h, int i);
std::vector<int> scoring_vertices(const Path& h);

long weight_wt(const Path& h);
long weight_wtilde(const Path& h);

struct Column {
    int a = 0;  // non-scoring vertices
    int b = 0;  // scoring vertices
    int w() const { return a + b; }
    friend bool operator==(const Column&, const Column&) = default;
};

struct StrikingSequence {
    std::vector<Column> columns;
    int e = 0;
    int f = 0;
    int d = 0;
    friend bool operator==(const StrikingSequence&, const StrikingSequence&) = default;
};

struct PathStats {
    int m = 0;
    int alpha = 0;
    int beta = 0;
    int pi = 0;
    int d = 0;
};

StrikingSequence striking_sequence(const Path& h);
long weight_from_striking(const StrikingSequence& ss);
// rebuilds the heights from the line lengths, d and the start height
std::vector<int> rebuild_heights(const StrikingSequence& ss, int a);
PathStats path_stats(const Path& h);

// closed form of beta for paths from a to b
int beta_closed_form(const ModelShape& m, int a, int b, int e, int f);

std::vector<Path> enumerate(const ModelShape& m, int a, int b, const Boundary& bd, int L,
                            const std::set<int>& required = {});
// number of height sequences from a to b of length L, by step-count recursion only
Int count_paths_oracle(const ModelShape& m, int a, int b, int L);

QuarterPoly chi(const ModelShape& m, int a, int b, int c, int L);
QuarterPoly chi_restricted(const ModelShape& m, int a, int b, int c, int L, const std::set<int>& required);
QuarterPoly chi_tilde(const ModelShape& m, int a, int b, int e, int f, int L, std::optional<int> mm = std::nullopt);
// throws std::invalid_argument for a non-interfacial member of S
QuarterPoly chi_tilde_restricted(const ModelShape& m, int a, int b, int e, int f, int L, std::optional<int> mm,
                                 const std::set<int>& S);

// all restricted generating functions chi_tilde(L, m){S} for m = 0..L+1, in one enumeration
std::vector<QuarterPoly> chi_tilde_by_m(const ModelShape& m, int a, int b, int e, int f, int L,
                                        const std::set<int>& S = {});

}  // namespace rsos
