#pragma once

#include <cstddef>

#include "resnet/network.hpp"

namespace resnet {

// Unit-resistor families. Labels follow the usual naming: path vertices
// a1..an, cycle vertices b1..bn, K2 vertices c1 c2, hypercube vertices
// b1..b(2^k) in id order, cone apex b.

ResistorNetwork path(std::size_t n);
ResistorNetwork cycle(std::size_t n);
ResistorNetwork clique2();
/// Edgeless graph on m vertices labelled w1..wm.
ResistorNetwork empty_graph(std::size_t m);
/// K_{m,n}: x1..xm on one side, y1..yn on the other.
ResistorNetwork complete_bipartite(std::size_t m, std::size_t n);
/// Q_k = Q_{k-1} □ K2, so the binary digits of an id are its coordinates
/// and the antipode of v is v ^ (2^k - 1).
ResistorNetwork hypercube(std::size_t k);

/// G □ H with (u, x) at id u * |V(H)| + x, labelled "(lu,lx)". Edge
/// resistances are copied from the factor the edge comes from.
ResistorNetwork cartesian_product(const ResistorNetwork& g, const ResistorNetwork& h);
/// G plus an apex vertex joined to every vertex of G by resistance 1/m.
ResistorNetwork cone(const ResistorNetwork& g, std::size_t m);
/// G + H: disjoint union plus a unit resistor between every u in G and x in H.
/// H's vertices follow G's; clashing labels on the H side get an "h:" prefix.
ResistorNetwork join(const ResistorNetwork& g, const ResistorNetwork& h);

/// L_n = P_n □ K2.
ResistorNetwork ladder(std::size_t n);
/// G_n = P_n □ C4; vertex (a_i, b_j) has id 4(i-1) + (j-1).
ResistorNetwork block_tower(std::size_t n);
/// Weighted fan: cone(path(n), m). Apex id is n.
ResistorNetwork fan(std::size_t n, std::size_t m);

}  // namespace resnet
