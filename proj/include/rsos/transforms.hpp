#pragma once

#include <set>
#include <string>
#include <vector>

#include "rsos/paths.hpp"
#include "rsos/qseries.hpp"

namespace rsos {

// One step of an audit trace. kind is "move", "edge-move", "relabel", their "reverse-" forms, or "insert".
struct MoveRecord {
    int from = 0;  // leftmost vertex of the scoring pair (or insertion point)
    std::string kind;
    friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

struct TransformResult {
    Path path;
    std::vector<MoveRecord> trace;
};

// All transforms take and return paths with wings. Preconditions throw std::invalid_argument.

// (p,p') -> (p,p'+p); undefined for L = 0 with e != f
Path b1(const Path& h);
// needs p' > 2p and delta_{a,e} = 0 in the path's own model
Path b2(const Path& h, int k);
// moves the k inserted particles of a b2 image; lambda non-increasing with at most k parts, lambda_1 <= m
TransformResult b3(const Path& h, int k, const std::vector<int>& lambda);
TransformResult b_transform(const Path& h, int k, const std::vector<int>& lambda);
// (p,p') -> (p'-p,p') on identical heights
Path d_transform(const Path& h);
// d_transform then b_transform; needs 2p < p' for the input model
TransformResult bd_transform(const Path& h, int k, const std::vector<int>& lambda);

// one particle move on the scoring pair at (v, v+1); forward needs S,S,N at v..v+2, reverse needs N,S,S at v-1..v+1.
// Returns false when no deformation qualifies; throws std::logic_error if more than one does.
bool particle_move(Path& h, int v, bool forward);

enum class Direction { B, BD };

struct Decomposition {
    Path path;  // preimage: in (p, p'-p) for B, in (p'-2p, p'-p) for BD
    int k = 0;
    std::vector<int> lambda;
    std::vector<MoveRecord> trace;
};

// needs p' > 2p and delta_{a,e} = delta_{b,f} = 0
Decomposition decompose(const Path& h, Direction dir = Direction::B);

Path extend_left(const Path& h);
Path extend_right(const Path& h);
Path truncate_left(const Path& h);
Path truncate_right(const Path& h);

struct BijectionReport {
    bool pass = false;
    QuarterPoly lhs;
    QuarterPoly rhs;
    std::string message;
};

// S must be interfacial in (p,p') and avoid a and b
BijectionReport verify_b_bijection(int p, int pp, int a, int b, int e, int f, int m0, int m1,
                                   const std::set<int>& S = {});
// needs p < p' < 2p; S as above
BijectionReport verify_bd_bijection(int p, int pp, int a, int b, int e, int f, int m0, int m1,
                                    const std::set<int>& S = {});

}  // namespace rsos
