#include "ergopt/solver.hpp"

#include <set>
#include <sstream>

namespace ergopt {

std::string to_dot(const WeightedGraph& g, const std::vector<int>& highlight_cycle) {
    std::set<std::pair<int, int>> hot;
    for (std::size_t i = 0; i < highlight_cycle.size(); ++i) {
        hot.insert({highlight_cycle[i], highlight_cycle[(i + 1) % highlight_cycle.size()]});
    }
    std::ostringstream os;
    os << "digraph lift {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        os << "  v" << v << " [label=\"" << word_str(g.vertex_words[v]) << "\"];\n";
    }
    for (int a = 0; a < static_cast<int>(g.vertex_count()); ++a) {
        for (const auto& e : g.out[static_cast<std::size_t>(a)]) {
            os << "  v" << a << " -> v" << e.to << " [label=\"" << e.weight.str() << "\"";
            if (hot.count({a, e.to})) os << ", color=red, penwidth=2";
            os << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace ergopt
