"""Breadth-first export of the crystal graph below the highest weight element."""

import hashlib

from .rc import RiggedConfiguration, apply_f, empty_rc
from .serialize import canonical_dumps, rc_to_json


def node_id(rc: RiggedConfiguration) -> str:
    """Stable hash of the canonical serialization."""
    return hashlib.sha256(canonical_dumps(rc_to_json(rc)).encode()).hexdigest()[:16]


def node_label(rc: RiggedConfiguration) -> str:
    """Compact one-line form: parts separated by '|', rows as length:rigging."""
    return "|".join(",".join(f"{row.length}:{row.rigging}" for row in part)
                    for part in rc.parts)


def crystal_graph(n: int, depth: int):
    """Nodes (with their depths) and labeled edges of the radius-`depth` ball.

    Nodes are discovered layer by layer, each layer sorted by canonical
    serialization, so the output is deterministic.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    root = empty_rc(n)
    seen = {root: 0}
    nodes = [root]
    edges = []
    frontier = [root]
    for d in range(1, depth + 1):
        discovered = []
        for rc in frontier:
            for i in range(1, n + 1):
                nxt = apply_f(rc, i)
                edges.append((rc, i, nxt))
                if nxt not in seen:
                    seen[nxt] = d
                    discovered.append(nxt)
        discovered.sort(key=lambda r: canonical_dumps(rc_to_json(r)))
        nodes.extend(discovered)
        frontier = discovered
    return nodes, edges, seen


def to_dot(nodes, edges) -> str:
    lines = ["digraph rcinf {"]
    for rc in nodes:
        lines.append(f'  "{node_id(rc)}" [label="{node_label(rc)}"];')
    for src, i, dst in edges:
        lines.append(f'  "{node_id(src)}" -> "{node_id(dst)}" [label={i}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_jsonl(edges) -> str:
    lines = [canonical_dumps({"from": node_id(src), "to": node_id(dst), "i": i})
             for src, i, dst in edges]
    return "\n".join(lines) + ("\n" if lines else "")
