"""Hamilton x,y-paths in dense graphs.

The workhorse is rotation-extension with random restarts: grow a path from
the fixed endpoint x by random greedy extension, and when stuck, rotate the
free endpoint along chords the way dense-graph Hamiltonicity arguments do,
holding the target y in reserve until only it remains. On graphs whose
minimum degree is at least (|V|+1)/2 the path always exists, and the exact
subset dynamic program below guarantees we find it (or certify absence)
whenever the graph is small enough for that fallback.
"""

from __future__ import annotations

from .graph import Graph, bits
from .rng import make_rng, spawn_seed

EXACT_THRESHOLD = 20
BRUTE_FORCE_LIMIT = 12


def is_simple_path(g: Graph, seq) -> bool:
    """True if seq is a sequence of distinct vertices joined by edges of g."""
    if len(seq) != len(set(seq)):
        return False
    if any(not (0 <= v < g.n) for v in seq):
        return False
    return all(g.has_edge(u, v) for u, v in zip(seq, seq[1:]))


def _check_endpoints(g: Graph, x: int, y: int) -> None:
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError(f"endpoints ({x},{y}) out of range for {g.n} vertices")
    if x == y:
        raise ValueError("endpoints must be distinct")
    if g.n < 2:
        raise ValueError("need at least two vertices")


def _rotation_restart(g: Graph, x: int, y: int, rng) -> list[int] | None:
    """One restart of greedy extension + rotation. None if it stalls."""
    n = g.n
    path = [x]
    on_path = 1 << x
    endpoint_seen = {x}
    steps = 0
    cap = 4 * n * n + 16
    while steps < cap:
        steps += 1
        e = path[-1]
        if len(path) == n - 1 and g.has_edge(e, y):
            path.append(y)
            return path
        ext = [u for u in g.neighbors(e) if not (on_path >> u & 1) and u != y]
        if ext:
            u = ext[int(rng.integers(len(ext)))]
            path.append(u)
            on_path |= 1 << u
            endpoint_seen = {u}
            continue
        # rotate: chord from the free endpoint to path[i] makes path[i+1]
        # the new endpoint; prefer endpoints with many unvisited neighbors
        unvisited = g.full_mask() & ~on_path
        best = None
        emask = g.neighbor_mask(e)
        for i in range(len(path) - 2):
            if emask >> path[i] & 1:
                cand = path[i + 1]
                if cand in endpoint_seen:
                    continue
                key = (-(g.neighbor_mask(cand) & unvisited).bit_count(), cand)
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return None
        i = best[1]
        path[i + 1:] = reversed(path[i + 1:])
        endpoint_seen.add(path[-1])
    return None


def _exact_path(g: Graph, x: int, y: int) -> list[int] | None:
    """Subset DP: endpoints[mask] = bitmask of vertices v such that some
    x-path covers exactly mask and ends at v. y is kept out of the DP and
    appended at the end, halving the state space."""
    n = g.n
    ybit = 1 << y
    full = g.full_mask() & ~ybit
    endpoints = [0] * (1 << n)
    endpoints[1 << x] = 1 << x
    for mask in range(1 << n):
        ends = endpoints[mask]
        if not ends:
            continue
        for v in bits(ends):
            for u in bits(g.neighbor_mask(v) & ~mask & ~ybit):
                endpoints[mask | (1 << u)] |= 1 << u
    finals = endpoints[full] & g.neighbor_mask(y)
    if not finals:
        return None
    # walk back from the smallest admissible endpoint
    last = (finals & -finals).bit_length() - 1
    path = [y, last]
    mask = full
    while mask != 1 << x:
        prev_mask = mask & ~(1 << last)
        cands = endpoints[prev_mask] & g.neighbor_mask(last)
        last = (cands & -cands).bit_length() - 1
        path.append(last)
        mask = prev_mask
    path.reverse()
    return path


def hamilton_path_between(g: Graph, x: int, y: int, budget: int = 24,
                          seed: int = 0, exact_threshold: int = EXACT_THRESHOLD,
                          return_stats: bool = False):
    """Hamilton x,y-path of g, or None if there is none (or none was found).

    Runs up to `budget` seeded rotation-extension restarts, then falls back
    to the exact subset DP when the graph has at most exact_threshold
    vertices. Within that size the answer is definitive: None means no
    Hamilton x,y-path exists. Above it, None only means the heuristic
    failed. The search never requires a degree condition; dense inputs are
    simply where it is fast.

    With return_stats=True returns (path, stats) where stats reports the
    restarts consumed and whether the exact fallback ran.
    """
    _check_endpoints(g, x, y)
    stats = {"restarts": 0, "exact": False}
    path = None
    for attempt in range(1, budget + 1):
        stats["restarts"] = attempt
        rng = make_rng(spawn_seed(seed, 0x11, attempt))
        path = _rotation_restart(g, x, y, rng)
        if path is not None:
            break
    if path is None and g.n <= exact_threshold:
        stats["exact"] = True
        path = _exact_path(g, x, y)
    return (path, stats) if return_stats else path


def brute_force_hamilton_path(g: Graph, x: int, y: int) -> list[int] | None:
    """Exhaustive Hamilton x,y-path search for graphs on at most 12 vertices.

    Depth-first enumeration over neighbor lists with memoized dead states;
    independent of the rotation/DP machinery above so the two can check each
    other. Raises ValueError beyond the size limit.
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices")
    _check_endpoints(g, x, y)
    full = g.full_mask()
    dead: set[tuple[int, int]] = set()
    path = [x]

    def dfs(v: int, visited: int) -> bool:
        if visited == full:
            return v == y
        if (v, visited) in dead:
            return False
        for u in g.neighbors(v):
            bit = 1 << u
            if visited & bit:
                continue
            if u == y and visited | bit != full:
                continue
            path.append(u)
            if dfs(u, visited | bit):
                return True
            path.pop()
        dead.add((v, visited))
        return False

    return list(path) if dfs(x, 1 << x) else None
