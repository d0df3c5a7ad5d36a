"""Shared builders for the test suite."""

from dirac_subdiv import Graph, SubdivisionCertificate


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_minus(n: int, missing: set[tuple[int, int]]) -> Graph:
    miss = {(min(u, v), max(u, v)) for u, v in missing}
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if (u, v) not in miss]
    return Graph(n, edges)


def random_gnp(n: int, p: float, rng) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def valid_base_certificate():
    """A small handmade certificate that passes every verifier check.

    Host: K_8 minus the edge {4,6}. Pattern: path 0-1-2. Branch vertices
    0, 3, 7; the path for pattern edge (0,1) is 0-1-2-3 and for (1,2) is
    3-4-5-6-7. Interiors {1,2} and {4,5,6} are disjoint and avoid branches,
    and every host vertex is covered.
    """
    host = complete_minus(8, {(4, 6)})
    pattern = path_graph(3)
    cert = SubdivisionCertificate(
        host_vertex_count=8,
        pattern=pattern,
        branch_map=(0, 3, 7),
        edge_paths={(0, 1): (0, 1, 2, 3), (1, 2): (3, 4, 5, 6, 7)},
    )
    return host, pattern, cert


def certificate_mutations():
    """Six mutations of the base certificate, one per verifier check.

    Returns a list of (check_name, mutated_certificate, allowed_extra_failures);
    each mutation must flip its named check from pass to fail, and may only
    additionally flip the listed logically entailed checks.
    """
    _, pattern, base = valid_base_certificate()

    def clone(branch=None, paths=None):
        return SubdivisionCertificate(
            host_vertex_count=base.host_vertex_count,
            pattern=pattern,
            branch_map=branch if branch is not None else base.branch_map,
            edge_paths=dict(paths if paths is not None else base.edge_paths),
        )

    muts = []
    # duplicate branch vertex; the (1,2) path then cannot end correctly
    muts.append(("branch-injective", clone(branch=(0, 3, 3)), {"endpoints"}))
    # reverse one path so its endpoints no longer match the branch map
    muts.append(("endpoints",
                 clone(paths={(0, 1): (3, 2, 1, 0),
                              (1, 2): base.edge_paths[(1, 2)]}), set()))
    # route through the missing host edge {4,6}
    muts.append(("edges-exist",
                 clone(paths={(0, 1): base.edge_paths[(0, 1)],
                              (1, 2): (3, 5, 4, 6, 7)}), set()))
    # repeat vertex 5 inside one path, still covering everything
    muts.append(("paths-simple",
                 clone(paths={(0, 1): base.edge_paths[(0, 1)],
                              (1, 2): (3, 4, 5, 6, 5, 7)}), set()))
    # vertex 2 interior to both paths
    muts.append(("interiors-disjoint",
                 clone(paths={(0, 1): base.edge_paths[(0, 1)],
                              (1, 2): (3, 2, 4, 5, 6, 7)}), set()))
    # drop vertex 6 from the second path
    muts.append(("spanning",
                 clone(paths={(0, 1): base.edge_paths[(0, 1)],
                              (1, 2): (3, 4, 5, 7)}), set()))
    return muts
