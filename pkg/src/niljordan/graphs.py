"""Degeneration graph: verified contraction edges, closure, reduction, DOT.

build_graph verifies every supplied family, inserts the edges that pass,
always adds the scaling contraction onto the abelian law, and records the
failures as errata items without aborting.  The closure is the
reflexive-transitive closure of the verified edges; the DOT export draws the
transitive reduction with nodes ranked by orbit dimension.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .atlas import load_atlas
from .contractions import ContractionFamily, scaling_family, verify_edge


@dataclass(frozen=True)
class FamilySpec:
    name: str
    source: str
    target: str
    family: ContractionFamily
    label: str = "listed"  # listed | corrected | derived


@dataclass
class DegenerationGraph:
    nodes: list
    edges: list  # verified ContractionEdge records
    errata: list  # (FamilySpec, ContractionEdge) pairs that failed
    closure: dict = field(default_factory=dict)
    reduction: list = field(default_factory=list)

    def reachable_from(self, label):
        return self.closure[label]

    def sources(self):
        """Nodes with no incoming verified edge (abelian excluded)."""
        incoming = {e.target_class for e in self.edges}
        return [
            n for n in self.nodes if n not in incoming and not n.endswith("_ab")
        ]

    def is_strict_order(self):
        """The verified relation restricted to distinct classes is acyclic."""
        for u in self.nodes:
            for v in self.closure[u]:
                if v != u and u in self.closure[v]:
                    return False
        return True


def _closure(nodes, edge_pairs):
    adj = {n: set() for n in nodes}
    for u, v in edge_pairs:
        adj[u].add(v)
    closure = {}
    for start in nodes:
        seen = {start}
        stack = [start]
        while stack:
            cur = stack.pop()
            for nxt in adj[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        closure[start] = seen
    return closure


def _transitive_reduction(nodes, edge_pairs, closure):
    pairs = sorted(set(edge_pairs))
    reduced = []
    for (u, v) in pairs:
        redundant = False
        for (a, w) in pairs:
            if a == u and w != v and w != u and v in closure[w]:
                redundant = True
                break
        if not redundant:
            reduced.append((u, v))
    return reduced


def build_graph(entries, family_specs, include_scaling=True):
    """Verify the supplied families and assemble the degeneration graph.

    entries: iterable of class labels (nodes).  family_specs: FamilySpec
    records.  Per-family failures are collected, never raised.
    """
    atlas = load_atlas()
    nodes = list(entries)
    edges = []
    errata = []
    profiles = {lbl: atlas[lbl].expected_profile for lbl in nodes}
    for spec in family_specs:
        src = atlas[spec.source].tensor
        edge = verify_edge(src, spec.target, spec.family, source_profile=profiles[spec.source])
        if edge.verified:
            edges.append(edge)
        else:
            errata.append((spec, edge))
    if include_scaling:
        ab = next((n for n in nodes if n.endswith("_ab")), None)
        if ab is not None:
            for lbl in nodes:
                if lbl == ab:
                    continue
                edge = verify_edge(
                    atlas[lbl].tensor, ab, scaling_family(atlas[lbl].tensor.n),
                    source_profile=profiles[lbl],
                )
                if edge.verified:
                    edges.append(edge)
    pairs = [(e.source_class, e.target_class) for e in edges]
    closure = _closure(nodes, pairs)
    reduction = _transitive_reduction(nodes, pairs, closure)
    return DegenerationGraph(
        nodes=nodes, edges=edges, errata=errata, closure=closure, reduction=reduction
    )


def rigidity_screen(graph, entries=None):
    """Necessary rigidity evidence per class: no incoming verified edge,
    maximal orbit dimension, uniquely maximal characteristic sequence."""
    atlas = load_atlas()
    labels = list(entries) if entries is not None else list(graph.nodes)
    orbit = {lbl: atlas[lbl].expected_profile.dim_orbit for lbl in labels}
    seq = {lbl: atlas[lbl].expected_profile.char_seq for lbl in labels}
    max_orbit = max(orbit.values())
    max_seq = max(seq.values())
    seq_max_count = sum(1 for s in seq.values() if s == max_seq)
    sources = set(graph.sources())
    report = {}
    for lbl in labels:
        report[lbl] = {
            "no_incoming_edge": lbl in sources,
            "orbit_dim": orbit[lbl],
            "max_orbit": orbit[lbl] == max_orbit,
            "unique_max_char_seq": seq[lbl] == max_seq and seq_max_count == 1,
        }
    return report


def to_dot(graph, name="contractions"):
    """DOT text for the transitive reduction, ranked by orbit dimension."""
    atlas = load_atlas()
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    by_orbit = {}
    for lbl in graph.nodes:
        by_orbit.setdefault(atlas[lbl].expected_profile.dim_orbit, []).append(lbl)
    for orbit in sorted(by_orbit, reverse=True):
        group = "; ".join(f'"{lbl}"' for lbl in sorted(by_orbit[orbit]))
        lines.append(f"  {{ rank=same; {group}; }}")
    for (u, v) in graph.reduction:
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_EDGE = re.compile(r'"([^"]+)"\s*->\s*"([^"]+)"\s*;')


def parse_dot_edges(text):
    """Edge pairs from a DOT digraph produced by to_dot."""
    return sorted((m.group(1), m.group(2)) for m in _DOT_EDGE.finditer(text))
