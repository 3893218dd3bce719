#pragma once

#include <memory>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/scalar.hpp"

namespace leavitt {

// Which out-edge of each regular vertex is the "special" one whose ee* pair
// at the monomial seam gets rewritten by oriented CK2.
enum class SpecialEdgePolicy { LastDeclared, FirstDeclared };

/// A computation session: graph + coefficient field + special-edge table.
/// Read-only after construction and shareable across threads.
class Session {
public:
    Session(GraphPtr graph, Field field, SpecialEdgePolicy policy = SpecialEdgePolicy::LastDeclared)
        : graph_(std::move(graph)), field_(field), policy_(policy),
          special_(special_table(*graph_, policy)) {}

    const GraphPtr& graph() const { return graph_; }
    Field field() const { return field_; }
    SpecialEdgePolicy policy() const { return policy_; }
    int special_edge(int v) const { return special_[static_cast<std::size_t>(v)]; } // -1 at sinks
    const std::vector<int>& special_edges() const { return special_; }

    static std::vector<int> special_table(const Graph& g, SpecialEdgePolicy policy);

    friend bool operator==(const Session& a, const Session& b) {
        return *a.graph_ == *b.graph_ && a.field_ == b.field_ && a.policy_ == b.policy_;
    }

private:
    GraphPtr graph_;
    Field field_;
    SpecialEdgePolicy policy_;
    std::vector<int> special_;
};

using SessionPtr = std::shared_ptr<const Session>;

inline SessionPtr make_session(GraphPtr graph, Field field,
                               SpecialEdgePolicy policy = SpecialEdgePolicy::LastDeclared) {
    return std::make_shared<const Session>(std::move(graph), field, policy);
}

inline void check_same_session(const SessionPtr& a, const SessionPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw domain_error("values belong to different sessions");
}

} // namespace leavitt
