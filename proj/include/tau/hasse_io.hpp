#pragma once

#include <string>
#include <vector>

#include "tau/tautilt.hpp"

namespace tau {

// Serializable view of a Hasse quiver: numeric invariants only.
struct HasseSummary {
    std::size_t algebra_dim = 0;
    std::vector<std::size_t> simple_dims;
    struct Vertex {
        std::size_t id;
        std::vector<long> g_vector;
        std::vector<std::size_t> m_dims, p_dims;
    };
    struct Arrow {
        std::size_t from, to;
        std::vector<std::size_t> label_dim_vector;
    };
    std::vector<Vertex> vertices;
    std::vector<Arrow> arrows;
};

HasseSummary summarize(const HasseQuiver& q, const Algebra& a);
std::string to_json(const HasseSummary& s);
HasseSummary summary_from_json(const std::string& text);
std::string to_dot(const HasseSummary& s, const std::string& name);
// Isomorphic as labeled quivers, matching vertices by g-vector.
bool same_labeled_quiver(const HasseSummary& a, const HasseSummary& b);

}  // namespace tau
