#pragma once

#include <map>
#include <string>
#include <vector>

#include "wordint/matching.hpp"
#include "wordint/word.hpp"

namespace wordint {

// Occurrence of a generator inside the word tuple.
struct Interval {
    int word;  // index into the tuple
    int pos;   // letter position within that word
    int sign;  // +1 for x, -1 for x^-1
};

// Scan data for one generator x: its 2L intervals in tuple scan order.
struct GeneratorData {
    int gen = 0;
    int L = 0;
    std::vector<Interval> intervals;
};

// Per-generator interval tables for a word tuple. Throws InternalError if some
// generator has an odd occurrence count (no matchings exist then).
std::map<int, GeneratorData> interval_tables(const std::vector<Word>& words);
// Same, but without the even-count requirement (for zero-integral detection).
std::map<int, GeneratorData> interval_tables_unchecked(const std::vector<Word>& words);

// A matching system: for each generator x, the chain m_{x,0}, ..., m_{x,kappa_x}
// of matchings of its 2L_x intervals (kappa_x = chains[x].size() - 1 >= 0).
struct MatchingSystem {
    std::map<int, std::vector<Matching>> chains;
};

enum class FaceKind { TypeO, Rectangle };

// One closed boundary walk of a 2-cell, as a sequence of directed edge usages.
struct Face {
    FaceKind kind = FaceKind::TypeO;
    int gen = 0;    // for rectangles: the generator x of the type-(x, level) disc
    int level = 0;  // for rectangles: the level t (between m_{x,t} and m_{x,t+1})
    // (edge id, direction) pairs; direction 0 = tail->head as stored, 1 = reversed.
    std::vector<std::pair<int, int>> walk;
};

struct SurfaceComponent {
    int chi = 0;
    bool orientable = true;
    int boundary_circles = 0;
    int genus = 0;  // orientable genus g, or non-orientable genus (number of RP^2s)
    std::string topo_name;  // "Sigma_{g,b}" or "P_{g,b}"
    std::vector<int> words;  // tuple indices of the boundary circles
    bool has_negative_cell = false;  // used by signed builds
};

struct SurfaceDiagram {
    int vertices = 0;
    int edges = 0;
    std::vector<Face> faces;
    int type_o_discs = 0;
    int chi = 0;                    // V - E + F
    int chi_closed_form = 0;        // -sum L_x + #o - sum rho; must equal chi
    std::vector<SurfaceComponent> components;
    bool orientable = true;  // all components orientable

    // Internal tables kept for the sign machinery (see surface.cpp for layout).
    struct Node {
        int gen, interval, level, word;
    };
    std::vector<Node> nodes;
    struct Edge {
        bool is_arc;
        int tail, head;
        int gen = 0, level = 0;     // for arcs
        bool segment = false;       // boundary edge inside an interval
    };
    std::vector<Edge> edge_list;
    std::vector<int> node_component;  // component index per node
    std::vector<int> face_component;  // component index per face
};

// Build the closed-up surface Sigma_m for the tuple and matching system, tracing
// all 2-cells, verifying the Euler characteristic closed form, and computing
// orientability, components, and topological names.
SurfaceDiagram build_surface(const std::vector<Word>& words, const MatchingSystem& m);

// Only the number of type-o discs (fast path for large enumerations).
int count_type_o_discs(const std::vector<Word>& words, const MatchingSystem& m);

// Signed variant: eps[i] in {+1,-1} per face of the unsigned diagram. Each -1 cell
// connect-sums an RP^2: chi drops by one and the component becomes non-orientable.
SurfaceDiagram signed_build(const std::vector<Word>& words, const MatchingSystem& m,
                            const std::vector<int>& eps);

// Delta(m) for a kappa == 1 system (Sp integrand sign): propagates index signs
// around each type-o disc from a per-disc seed, flipping across non-orientable
// arcs, and multiplies the per-arc contributions. Verifies seed independence.
int delta_sign(const std::vector<Word>& words, const MatchingSystem& m);

// Xi(w; m) = (-1)^{#o} (-1)^{sum L_x} Delta(m) prod_x sign(sigma_{m_x,0}^{-1}
// sigma_{m_x,1}); must equal (-1)^{#words}. Returns true iff it does.
bool xi_check(const std::vector<Word>& words, const MatchingSystem& m);

}  // namespace wordint
