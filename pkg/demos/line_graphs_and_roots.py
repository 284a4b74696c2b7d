"""Line graphs, the generalized construction, and root-system membership.

    python3 demos/line_graphs_and_roots.py
"""

from signedgraph import (
    adjacency_matrix,
    edge_vector,
    generalized_line_graph,
    line_adjacency_identity,
    membership_in_root_system,
    negate,
    plus_minus_kn,
    reduced_line_graph,
    root_system,
    spectrum,
    switching_isomorphic,
)


def main():
    # line graph of the all-negative 4-cycle with petals (1,2,0,0)
    edge_list = [(0, 1), (1, 2), (2, 3), (0, 3)]
    src, glg = generalized_line_graph(4, edge_list, [1, 2, 0, 0])
    red = reduced_line_graph(src).graph
    print(f"petal graph: n={src.n}, m={len(src.edges)}")
    print(f"reduced line graph: n={red.n}, m={len(red.edges)}")
    print(f"direct construction: n={glg.n}, m={len(glg.edges)}")
    phi = switching_isomorphic(red, glg)
    print(f"switching-isomorphic: {phi is not None}")

    ev = spectrum(adjacency_matrix(negate(glg)))
    print(f"eigenvalues of the negated construction: min = {min(ev):.6f} (>= -2)")

    a, rhs = line_adjacency_identity(src)
    print(f"A(line graph) == 2I - H^T H: {a == rhs}")

    # edge vectors of complete signed expansions land in classical root systems
    for n in (2, 3, 4):
        g = plus_minus_kn(n)
        vecs = [edge_vector(g, e.id) for e in g.edges]
        dn = root_system("D", n)
        print(f"+-K{n}: {len(vecs)} edge vectors, in D_{n} "
              f"({len(dn)} roots): {membership_in_root_system(vecs, dn)}")
    print(f"|E8| = {len(root_system('E8'))}")


if __name__ == "__main__":
    main()
