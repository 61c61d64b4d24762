#include "holonomy/dihedral.hpp"

#include <algorithm>
#include <map>

#include "holonomy/errors.hpp"
#include "holonomy/typespace.hpp"

namespace holonomy {

ColoredGraph dihedral_graph(std::uint32_t n) {
    if (n < 3) fail(ErrorKind::Config, "dihedral demo needs n >= 3");
    ColoredGraph g(n);
    for (std::uint32_t label = 1; label + 1 <= n; ++label) {
        // label and label+1 are swapped by A when label is odd, by B when even.
        g.add_edge(label - 1, label, label % 2 == 1 ? Color::A : Color::B);
    }
    g.freeze();
    return g;
}

DihedralReport dihedral_demo(std::uint32_t n, std::uint32_t r, std::uint32_t transport_budget) {
    const ColoredGraph g = dihedral_graph(n);
    DihedralReport rep;
    rep.n = n;
    rep.r = r;
    rep.transport_budget = transport_budget;
    const auto stable = stable_region(g, n - 1, r);
    if (stable.empty() || stable.front() != 0)
        fail(ErrorKind::Config, "dihedral window too small for radius " + std::to_string(r));
    for (VertexId v : stable) rep.stable_labels.push_back(v + 1);

    const auto table = compute_types(g, r, stable);
    std::map<TypeId, std::uint64_t> classes;
    for (VertexId v : stable) ++classes[table.type_at(v, r)];
    rep.stable_types = classes.size();
    for (const auto& [t, c] : classes) rep.largest_class = std::max(rep.largest_class, c);
    rep.generic = rep.largest_class == 1;

    const TypeId alpha = table.type_at(0, r);
    rep.m_alpha_vertex1 = holonomy_radius(g, table, r, alpha, stable).m_alpha;

    const VertexId far = stable.back();
    rep.transport_from = far + 1;
    rep.transport_found = transport_check(g, table, far, r, alpha, transport_budget).found;
    return rep;
}

}  // namespace holonomy
