"""Subdivision certificates and their canonical on-disk form.

A certificate names the branch vertex for every pattern vertex and one host
path per pattern edge. It is the complete, independently checkable output
of an embedding run. Serialization is canonical JSON (sorted keys, fixed
separators, trailing newline) so identical inputs and seed produce
byte-identical files.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .graph import Graph

FORMAT_TAG = "dirac-subdiv-certificate"
FORMAT_VERSION = 1


@dataclass
class SubdivisionCertificate:
    host_vertex_count: int
    pattern: Graph
    branch_map: tuple[int, ...]
    edge_paths: dict[tuple[int, int], tuple[int, ...]]

    def paths_sorted(self) -> list[tuple[tuple[int, int], tuple[int, ...]]]:
        return sorted(self.edge_paths.items())


def certificate_to_json(cert: SubdivisionCertificate) -> str:
    doc = {
        "format": FORMAT_TAG,
        "version": FORMAT_VERSION,
        "host_vertex_count": cert.host_vertex_count,
        "pattern_vertex_count": cert.pattern.n,
        "pattern_edges": [[u, v] for u, v in cert.pattern.edges()],
        "branch_map": list(cert.branch_map),
        "edge_paths": [
            {"edge": [i, j], "vertices": list(path)}
            for (i, j), path in cert.paths_sorted()
        ],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def certificate_from_json(text: str) -> SubdivisionCertificate:
    doc = json.loads(text)
    if doc.get("format") != FORMAT_TAG:
        raise ValueError("not a subdivision certificate document")
    if doc.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported certificate version {doc.get('version')}")
    pattern = Graph(int(doc["pattern_vertex_count"]),
                    [(int(u), int(v)) for u, v in doc["pattern_edges"]])
    edge_paths = {}
    for entry in doc["edge_paths"]:
        i, j = (int(t) for t in entry["edge"])
        edge_paths[(i, j)] = tuple(int(v) for v in entry["vertices"])
    return SubdivisionCertificate(
        host_vertex_count=int(doc["host_vertex_count"]),
        pattern=pattern,
        branch_map=tuple(int(v) for v in doc["branch_map"]),
        edge_paths=edge_paths,
    )


def write_certificate(cert: SubdivisionCertificate, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(certificate_to_json(cert))


def read_certificate(path: str | os.PathLike) -> SubdivisionCertificate:
    with open(path, "r", encoding="ascii") as fh:
        return certificate_from_json(fh.read())
