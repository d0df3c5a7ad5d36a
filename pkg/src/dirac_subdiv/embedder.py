"""Spanning-subdivision embedding pipeline.

Given a host graph G on N = C*d*n vertices with minimum degree at least
(1+eps)*N/2 and a d-regular pattern H on n vertices, the pipeline builds a
template (one branch vertex per pattern vertex, one connector pair and one
block per pattern edge end), finds a Hamilton path from the branch vertex
to the connector inside every block, and glues path pairs across connector
edges into one host path per pattern edge. The result is a certificate that
is verified from scratch before being reported; a success report never
carries an unverified certificate.

Randomness is Las Vegas throughout: every stage checks its own output and
the whole pipeline retries with a fresh derived seed when any stage fails.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .certificate import SubdivisionCertificate
from .errors import PartitionError, TemplateError
from .generators import dirac_degree_bound
from .graph import Graph, induced, mask_of, min_degree, regular_degree
from .partition import block_partition, good_partition
from .hampath import hamilton_path_between
from .rng import spawn_seed
from .verifier import PathLengthStats, verify_certificate


@dataclass
class EmbedConfig:
    """Knobs for one embedding run.

    epsilon is the degree slack of the host guarantee; C the blow-up
    constant (derived from the host order when None). strict_size demands
    the host order equal C*d*n exactly; otherwise the remainder is spread
    one vertex per block and block sizes widen by one.
    """

    epsilon: float
    C: int | None = None
    seed: int = 0
    master_attempts: int = 5
    partition_attempts: int = 50
    level_attempts: int = 50
    hampath_restarts: int = 24
    exact_threshold: int = 20
    strict_size: bool = True

    def __post_init__(self):
        if not (0.0 < self.epsilon < 1.0):
            raise ValueError("epsilon must lie in (0, 1)")
        for name in ("master_attempts", "partition_attempts", "level_attempts",
                     "hampath_restarts"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")


@dataclass
class Template:
    """Branch vertices, connectors, and blocks covering the host.

    branch[i] is the branch vertex of pattern vertex i. For every pattern
    edge ij there are connectors[(i,j)] in group i and connectors[(j,i)] in
    group j joined by a host edge, and blocks[(i,j)] contains branch[i],
    connectors[(i,j)], and the private vertices the edge path will consume
    on i's side. Blocks of one group share exactly the branch vertex.
    """

    branch: tuple[int, ...]
    connectors: dict[tuple[int, int], int]
    blocks: dict[tuple[int, int], tuple[int, ...]]
    C: int
    size_window: tuple[int, int]
    stats: dict[str, int] = field(default_factory=dict)


@dataclass
class TemplateCheck:
    ok: bool
    label: str | None = None
    witness: str | None = None


@dataclass
class EmbedReport:
    success: bool
    n: int
    d: int
    C: int
    N: int
    epsilon: float
    seed: int
    master_attempts_used: int
    stage_attempts: dict[str, int]
    failures: list[str]
    failure_stage: str | None
    detail: str | None
    length_stats: PathLengthStats | None
    wall_time_s: float
    certificate: SubdivisionCertificate | None

    def summary(self) -> str:
        head = "success" if self.success else f"FAILURE at {self.failure_stage}"
        lines = [
            f"embed {head}: n={self.n} d={self.d} C={self.C} N={self.N} "
            f"epsilon={self.epsilon} seed={self.seed}",
            f"  master attempts: {self.master_attempts_used}  "
            f"stage attempts: {self.stage_attempts}",
            f"  wall time: {self.wall_time_s:.3f}s",
        ]
        if self.detail:
            lines.append(f"  detail: {self.detail}")
        if self.length_stats and not self.length_stats.empty:
            st = self.length_stats
            lines.append(
                f"  path edge-lengths: min={st.min} max={st.max} "
                f"mean={st.mean:.2f} multiset={st.multiset}")
        return "\n".join(lines)


def resolve_dimensions(g: Graph, h: Graph, cfg: EmbedConfig):
    """Derive (n, d, C, per-group extra vertices) and validate the order."""
    n = h.n
    d = regular_degree(h)
    if n < 2 or d < 1:
        raise ValueError("pattern must be d-regular with d >= 1 on n >= 2 vertices")
    N = g.n
    if cfg.strict_size:
        if cfg.C is not None:
            if N != cfg.C * d * n:
                raise ValueError(
                    f"strict sizing: host order {N} != C*d*n = {cfg.C * d * n}")
            C = cfg.C
        else:
            if N % (d * n) != 0:
                raise ValueError(
                    f"strict sizing: host order {N} not divisible by d*n = {d * n}")
            C = N // (d * n)
        extras = [0] * n
    else:
        C = cfg.C if cfg.C is not None else N // (d * n)
        r = N - C * d * n
        if r < 0 or r >= d * n:
            raise ValueError(
                f"flexible sizing: host order {N} must lie in [C*d*n, (C+1)*d*n) "
                f"for C={C}")
        base, rem = divmod(r, n)
        extras = [base + (1 if i < rem else 0) for i in range(n)]
    if C < 3:
        raise ValueError(f"blow-up constant C={C} too small; need C >= 3")
    return n, d, C, extras


def _part_order(g: Graph, part) -> list[int]:
    """Part vertices by descending degree into the part, ties by id."""
    pmask = mask_of(part)
    return sorted(part, key=lambda v: (-(g.neighbor_mask(v) & pmask).bit_count(), v))


def _select_connectors_and_branch(g: Graph, h: Graph, parts):
    """Pick one connector pair per pattern edge and one branch vertex per
    group, all distinct, greedily preferring vertices of large degree into
    their own group. Deterministic."""
    orders = [_part_order(g, p) for p in parts]
    masks = [mask_of(p) for p in parts]
    used: set[int] = set()
    connectors: dict[tuple[int, int], int] = {}
    for i, j in sorted(h.edges()):
        pick = None
        for u in orders[i]:
            if u in used:
                continue
            avail = g.neighbor_mask(u) & masks[j]
            if not avail:
                continue
            for v in orders[j]:
                if v not in used and (avail >> v & 1):
                    pick = (u, v)
                    break
            if pick:
                break
        if pick is None:
            raise TemplateError(
                f"no unused host edge left between groups {i} and {j}",
                label="connector-selection", witness=(i, j))
        connectors[(i, j)], connectors[(j, i)] = pick
        used.update(pick)
    branch = []
    for i in range(h.n):
        cand = next((v for v in orders[i] if v not in used), None)
        if cand is None:
            raise TemplateError(
                f"group {i} has no unused vertex left for a branch vertex",
                label="branch-selection", witness=i)
        branch.append(cand)
        used.add(cand)
    return tuple(branch), connectors


def build_template(g: Graph, h: Graph, cfg: EmbedConfig,
                   seed: int | None = None) -> Template:
    """Construct and self-check a template.

    Stage thresholds follow the proof chain: the whole-host partition is
    checked at (1+eps)/2 minus eps/2, and the per-group block partitions at
    that value minus eps/4. Raises PartitionError or TemplateError when a
    randomized stage exhausts its budget or a check fails, and ValueError
    when the inputs are structurally unsuitable.
    """
    n, d, C, extras = resolve_dimensions(g, h, cfg)
    N = g.n
    md = min_degree(g)
    bound = dirac_degree_bound(N, cfg.epsilon)
    if md is None or md < bound:
        raise ValueError(f"host min degree {md} below required {bound}")
    if seed is None:
        seed = cfg.seed

    alpha1 = (1.0 + cfg.epsilon) / 2.0
    delta1 = cfg.epsilon / 2.0
    tau1 = alpha1 - delta1
    sizes = None
    if any(extras):
        sizes = [C * d + e for e in extras]
    gp = good_partition(g, h, alpha1, delta1, budget=cfg.partition_attempts,
                        seed=spawn_seed(seed, 0x21), part_sizes=sizes)

    branch, connectors = _select_connectors_and_branch(g, h, gp.parts)

    blocks: dict[tuple[int, int], tuple[int, ...]] = {}
    level_attempts = 0
    for i in range(n):
        nbrs = sorted(h.neighbors(i))
        conns = [connectors[(i, j)] for j in nbrs]
        bp = block_partition(
            g, gp.parts[i], branch[i], conns,
            alpha=tau1, delta=cfg.epsilon / 4.0,
            level_budget=cfg.level_attempts,
            seed=spawn_seed(seed, 0x22, i),
            extras=extras[i] % d,
        )
        level_attempts += bp.attempts
        for k, j in enumerate(nbrs):
            blocks[(i, j)] = tuple(sorted(
                bp.blocks[k] + (branch[i], connectors[(i, j)])))

    window = (C, C + 1) if not any(extras) else (C, C + 2)
    template = Template(branch, connectors, blocks, C, window,
                        stats={"good_partition_attempts": gp.attempts,
                               "block_level_attempts": level_attempts})
    check = check_template(g, h, template)
    if not check.ok:
        raise TemplateError(
            f"template self-check failed: {check.label}: {check.witness}",
            label=check.label, witness=check.witness)
    return template


def check_template(g: Graph, h: Graph, t: Template) -> TemplateCheck:
    """Check the template properties, reporting the first violation.

    Checked in order: structural consistency (distinct branch/connector
    vertices sitting in their blocks, one block per pattern edge end), host
    cover, disjointness across groups, the within-group rule that blocks of
    one group pairwise share exactly the branch vertex, block sizes inside
    the window, the Hamiltonian-connectivity degree bound
    min degree >= (|block|+1)/2 in every block, and connector edges.
    """
    n = h.n
    expected = {(i, j) for i in range(n) for j in h.neighbors(i)}

    specials = list(t.branch) + [t.connectors.get(k) for k in sorted(expected)]
    if (len(t.branch) != n
            or set(t.connectors.keys()) != expected
            or set(t.blocks.keys()) != expected
            or None in specials
            or len(set(specials)) != len(specials)):
        return TemplateCheck(False, "structure",
                             "branch/connector vertices missing or not distinct")
    for (i, j) in sorted(expected):
        blk = set(t.blocks[(i, j)])
        if t.branch[i] not in blk or t.connectors[(i, j)] not in blk:
            return TemplateCheck(
                False, "structure",
                f"block ({i},{j}) missing its branch or connector vertex")

    cover = set()
    for blk in t.blocks.values():
        cover.update(blk)
    if cover != set(range(g.n)):
        missing = sorted(set(range(g.n)) - cover)
        extra = sorted(cover - set(range(g.n)))
        return TemplateCheck(False, "cover",
                             f"missing {missing[:5]} extra {extra[:5]}")

    group_union: dict[int, set[int]] = {}
    for i in range(n):
        group_union[i] = set()
        for j in h.neighbors(i):
            group_union[i].update(t.blocks[(i, j)])
    seen: dict[int, int] = {}
    for i in range(n):
        for v in sorted(group_union[i]):
            if v in seen:
                return TemplateCheck(
                    False, "groups-disjoint",
                    f"vertex {v} appears in groups {seen[v]} and {i}")
            seen[v] = i

    for i in range(n):
        counts: dict[int, int] = {}
        deg = len(h.neighbors(i))
        for j in h.neighbors(i):
            for v in t.blocks[(i, j)]:
                counts[v] = counts.get(v, 0) + 1
        for v, c in counts.items():
            want = deg if v == t.branch[i] else 1
            if c != want:
                return TemplateCheck(
                    False, "within-group-overlap",
                    f"vertex {v} lies in {c} blocks of group {i}, want {want}")

    lo, hi = t.size_window
    for key in sorted(expected):
        size = len(t.blocks[key])
        if not (lo <= size <= hi):
            return TemplateCheck(False, "block-size",
                                 f"block {key} has size {size}, window [{lo},{hi}]")

    for key in sorted(expected):
        blk = t.blocks[key]
        bmask = mask_of(blk)
        need = (len(blk) + 1) / 2.0
        for v in blk:
            if (g.neighbor_mask(v) & bmask).bit_count() < need:
                return TemplateCheck(
                    False, "block-min-degree",
                    f"vertex {v} has degree "
                    f"{(g.neighbor_mask(v) & bmask).bit_count()} in block {key}, "
                    f"need >= {need}")

    for (i, j) in sorted((i, j) for (i, j) in expected if i < j):
        if not g.has_edge(t.connectors[(i, j)], t.connectors[(j, i)]):
            return TemplateCheck(
                False, "connector-edge",
                f"connectors of edge ({i},{j}) not adjacent in the host")

    return TemplateCheck(True)


def glue(g: Graph, p_ij, p_ji) -> list[int]:
    """Concatenate a branch-to-connector path with the reverse of its twin.

    p_ij runs from one branch vertex to its connector, p_ji likewise on the
    other side; the two connectors must be adjacent in g and the paths
    disjoint. The result runs branch to branch with edge count
    len(p_ij) + len(p_ji) - 1.
    """
    if len(p_ij) < 2 or len(p_ji) < 2:
        raise ValueError("glue needs paths with at least two vertices each")
    overlap = set(p_ij) & set(p_ji)
    if overlap:
        raise ValueError(f"paths overlap at {sorted(overlap)[:5]}")
    if not g.has_edge(p_ij[-1], p_ji[-1]):
        raise ValueError(
            f"connector endpoints {p_ij[-1]} and {p_ji[-1]} not adjacent")
    return list(p_ij) + list(reversed(p_ji))


def _ore_diagnostic(sub: Graph) -> str:
    md = min_degree(sub)
    return (f"block min degree {md}, Hamiltonian-connectivity bound "
            f"{(sub.n + 1) / 2:.1f}")


def embed_subdivision(g: Graph, h: Graph, cfg: EmbedConfig) -> EmbedReport:
    """Run the full pipeline and return a report (with certificate on success).

    Input shape problems (non-regular pattern, order mismatch) raise
    ValueError. Everything else, including a host that simply is not dense
    enough, is reported as a failed run: the report carries the failing
    stage and per-stage attempt counts. A success report's certificate has
    been verified spanning before being returned.
    """
    t0 = time.perf_counter()
    n, d, C, extras = resolve_dimensions(g, h, cfg)
    N = g.n
    attempts = {"good_partition": 0, "block_levels": 0,
                "hampath_calls": 0, "hampath_restarts": 0}
    failures: list[str] = []

    def report(success, used, stage=None, detail=None, stats=None, cert=None):
        return EmbedReport(
            success=success, n=n, d=d, C=C, N=N, epsilon=cfg.epsilon,
            seed=cfg.seed, master_attempts_used=used, stage_attempts=attempts,
            failures=failures, failure_stage=stage, detail=detail,
            length_stats=stats, wall_time_s=time.perf_counter() - t0,
            certificate=cert)

    md = min_degree(g)
    bound = dirac_degree_bound(N, cfg.epsilon)
    if md is None or md < bound:
        return report(False, 0, stage="precondition",
                      detail=f"host min degree {md} below required {bound}")

    last_stage = None
    for master in range(1, cfg.master_attempts + 1):
        seed_a = spawn_seed(cfg.seed, 0x01, master)
        try:
            template = build_template(g, h, cfg, seed=seed_a)
        except PartitionError as e:
            if e.level is None:
                attempts["good_partition"] += e.attempts
                last_stage = "good-partition"
            else:
                attempts["block_levels"] += e.attempts
                last_stage = "block-partition"
            failures.append(f"attempt {master}: {last_stage}: {e}")
            continue
        except TemplateError as e:
            last_stage = "template"
            failures.append(f"attempt {master}: template: {e}")
            continue
        attempts["good_partition"] += template.stats["good_partition_attempts"]
        attempts["block_levels"] += template.stats["block_level_attempts"]

        half_paths: dict[tuple[int, int], list[int]] = {}
        failed_block = None
        for i in range(n):
            for j in sorted(h.neighbors(i)):
                blk = template.blocks[(i, j)]
                sub, index = induced(g, blk)
                inv = sorted(blk)
                local, stats = hamilton_path_between(
                    sub, index[template.branch[i]],
                    index[template.connectors[(i, j)]],
                    budget=cfg.hampath_restarts,
                    seed=spawn_seed(seed_a, 0x12, i, j),
                    exact_threshold=cfg.exact_threshold,
                    return_stats=True)
                attempts["hampath_calls"] += 1
                attempts["hampath_restarts"] += stats["restarts"]
                if local is None:
                    failed_block = ((i, j), _ore_diagnostic(sub))
                    break
                half_paths[(i, j)] = [inv[v] for v in local]
            if failed_block:
                break
        if failed_block:
            last_stage = "hampath"
            failures.append(
                f"attempt {master}: hampath: block {failed_block[0]}: "
                f"{failed_block[1]}")
            continue

        edge_paths = {}
        for (i, j) in sorted(h.edges()):
            edge_paths[(i, j)] = tuple(glue(g, half_paths[(i, j)],
                                            half_paths[(j, i)]))
        cert = SubdivisionCertificate(
            host_vertex_count=g.n, pattern=h,
            branch_map=template.branch, edge_paths=edge_paths)
        vr = verify_certificate(g, h, cert, require_spanning=True)
        if vr.ok:
            return report(True, master, stats=vr.length_stats, cert=cert)
        last_stage = "verification"
        failures.append(f"attempt {master}: verification: {vr.failed()}")

    return report(False, cfg.master_attempts,
                  stage=last_stage or "pipeline",
                  detail=failures[-1] if failures else "no attempt recorded")
