#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtl/core/matrix.hpp"

namespace qtl::plumbing {

struct PlumbingGraph {
    std::vector<long> weights;
    std::vector<std::pair<int, int>> edges;

    int size() const { return static_cast<int>(weights.size()); }
    std::vector<int> degrees() const;
};

// Validates tree structure; throws Error with code cycle / disconnected / duplicate_edge / self_loop.
PlumbingGraph make_graph(std::vector<long> weights, std::vector<std::pair<int, int>> edges);

// Accepts inline JSON (first non-blank character '{') or a path to a JSON file.
PlumbingGraph parse_plumbing(std::string_view document_or_path);
PlumbingGraph parse_plumbing_json(std::string_view json_text);
std::string to_json(const PlumbingGraph& g);

class LinkingData {
public:
    explicit LinkingData(const PlumbingGraph& g);

    const PlumbingGraph& graph() const { return graph_; }
    const IntegerMatrixData& B() const { return b_; }
    const std::vector<int>& delta() const { return delta_; }
    const Integer& trace() const { return trace_; }
    Integer abs_det() const { return abs(b_.determinant()); }
    int size() const { return graph_.size(); }

    // Smith-form coordinates: y = U x lives in Z^V with the lattice B Z^V becoming D Z^V.
    std::vector<Integer> smith_coordinates(const std::vector<Integer>& x) const;
    std::vector<Integer> from_smith_coordinates(const std::vector<Integer>& y) const;
    // Elements of H_1 = Z^V / B Z^V, one canonical vector per class.
    std::vector<std::vector<Integer>> homology_elements() const;

private:
    PlumbingGraph graph_;
    IntegerMatrixData b_;
    IntMatrix u_inverse_;
    std::vector<int> delta_;
    Integer trace_;
};

IntMatrix linking_matrix(const PlumbingGraph& g);
// Throws DefinitenessError if B is not negative definite.
LinkingData linking_data(const PlumbingGraph& g);

struct SpincClass {
    std::vector<Integer> representative;  // in delta + 2 Z^V
    std::vector<Integer> key;             // reduced Smith coordinates, defines the order
    int stabilizer_order = 1;             // 2 iff the class is fixed by negation
    int index = 0;                        // position in spinc_classes()
};

std::vector<SpincClass> spinc_classes(const LinkingData& L);
// Reduce an arbitrary l in delta + 2Z^V to its canonical class representative.
SpincClass canonical_class(const LinkingData& L, const std::vector<Integer>& l);
// Index into spinc_classes() of the class of -b.
int negation_index(const LinkingData& L, const std::vector<SpincClass>& classes, int b);

struct Orbit {
    SpincClass representative;
    int size = 1;
    std::vector<int> members;  // indices into the class list
};
std::vector<Orbit> pm_orbit_representatives(const LinkingData& L, const std::vector<SpincClass>& classes);

}  // namespace qtl::plumbing
