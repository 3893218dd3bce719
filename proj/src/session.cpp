#include "leavitt/session.hpp"

namespace leavitt {

std::vector<int> Session::special_table(const Graph& g, SpecialEdgePolicy policy) {
    std::vector<int> t(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& out = g.out_edges(v);
        if (out.empty()) continue;
        t[static_cast<std::size_t>(v)] =
            policy == SpecialEdgePolicy::LastDeclared ? out.back() : out.front();
    }
    return t;
}

} // namespace leavitt
