"""Gate routing: legal paths, shortest-first disjoint routing, greedy schedule.

A legal route for a gate is a simple grid path that leaves the gate's start
vertex through a vertical edge and arrives at its end vertex through a
horizontal edge. CNOT paths run from the control's vertex to the target's
vertex; T paths run from the operand's vertex to any magic-state vertex.
Mapped and magic vertices may appear only as path endpoints, and paths that
share a time step must be vertex-disjoint, endpoints included.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .architecture import Architecture, Vertex
from .circuit import Circuit, Gate, GateKind, consecutive_qubit_pairs, topological_layering
from .mapping import QubitMap

Path = tuple[Vertex, ...]


class RoutingError(ValueError):
    pass


class UnroutableGateError(RoutingError):
    """Some gate has no legal path even with the whole grid to itself."""


@dataclass(frozen=True)
class GateRoute:
    steps: int
    time: dict[int, int]     # gate index -> step, 1-based
    space: dict[int, Path]   # gate index -> path


# ---------------------------------------------------------------------------
# Shortest legal path
# ---------------------------------------------------------------------------

def shortest_legal_path(arch: Architecture, blocked: set, source: Vertex, sinks) -> Path | None:
    """Minimum-length legal path from source to some sink, or None.

    `blocked` is the set of vertices unusable as path interiors (mapped
    vertices, magic vertices, and anything consumed earlier in the step).
    Sinks are endpoint candidates and must be entered through a horizontal
    edge; they are used as given, so callers exclude consumed sinks. Only
    the first and last edges are orientation-constrained, so a plain BFS over
    interior vertices suffices; neighbor expansion is in sorted order to make
    the returned path deterministic.
    """
    sinks = set(sinks)
    if not sinks:
        return None
    goal_of: dict[Vertex, Vertex] = {}
    for t in sorted(sinks):
        for w in arch.horizontal_neighbors(t):
            if w not in goal_of:
                goal_of[w] = t

    usable = lambda v: v not in blocked and v not in arch.magic and v != source and v not in sinks
    parent: dict[Vertex, Vertex | None] = {}
    queue = deque()
    for u in sorted(arch.vertical_neighbors(source)):
        if usable(u):
            parent[u] = None
            queue.append(u)
    while queue:
        w = queue.popleft()
        if w in goal_of:
            hops = [w]
            while parent[hops[-1]] is not None:
                hops.append(parent[hops[-1]])
            return (source, *reversed(hops), goal_of[w])
        for x in sorted(arch.neighbors(w)):
            if x not in parent and usable(x):
                parent[x] = w
                queue.append(x)
    return None


# ---------------------------------------------------------------------------
# Routing requests and shortest-first
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RouteRequest:
    gate: Gate
    source: Vertex
    sinks: frozenset[Vertex]


def request_for_gate(arch: Architecture, qmap: QubitMap, gate: Gate) -> RouteRequest:
    if gate.kind is GateKind.CNOT:
        return RouteRequest(gate, qmap[gate.control], frozenset([qmap[gate.target]]))
    return RouteRequest(gate, qmap[gate.operand], frozenset(arch.magic))


def shortest_first(arch: Architecture, requests, blocked: set) -> list[tuple[Gate, Path]]:
    """Route the request with the currently shortest legal path, consume its
    vertices, repeat until nothing is routable. Ties go to the lower gate
    index. Returns the routed subset with vertex-disjoint paths."""
    remaining = sorted(requests, key=lambda r: r.gate.index)
    used: set[Vertex] = set()
    routed: list[tuple[Gate, Path]] = []
    while remaining:
        best = None
        for req in remaining:
            path = shortest_legal_path(arch, blocked | used, req.source, req.sinks - used)
            if path is not None and (best is None or len(path) < len(best[1])):
                best = (req, path)
        if best is None:
            break
        req, path = best
        used.update(path)
        routed.append((req.gate, path))
        remaining.remove(req)
    return routed


def greedy_route(arch: Architecture, circuit: Circuit, qmap: QubitMap) -> GateRoute:
    """Layer-by-layer routing: repeat shortest-first inside each topological
    layer until the layer drains, never starting a layer before the previous
    one finishes."""
    mapped = set(qmap.vertices())
    base_blocked = mapped | set(arch.magic)
    time: dict[int, int] = {}
    space: dict[int, Path] = {}
    step = 0
    for layer in topological_layering(circuit).layers:
        pending = [request_for_gate(arch, qmap, circuit.gates[i]) for i in layer]
        while pending:
            step += 1
            routed = shortest_first(arch, pending, base_blocked)
            if not routed:
                bad = pending[0].gate
                raise UnroutableGateError(
                    f"gate {bad.index} ({bad.kind.value} {' '.join(bad.qubits)}) has no legal path under this map"
                )
            done = {g.index for g, _ in routed}
            for g, path in routed:
                time[g.index] = step
                space[g.index] = path
            pending = [r for r in pending if r.gate.index not in done]
    return GateRoute(step, time, space)


# ---------------------------------------------------------------------------
# Validator: the ground truth for any solution
# ---------------------------------------------------------------------------

class Rule(Enum):
    MAP_VALIDITY = "map-validity"
    DATA_PRESERVATION = "data-preservation"
    CNOT_ROUTING = "cnot-routing"
    T_ROUTING = "t-routing"
    LOGICAL_ORDER = "logical-order"
    DISJOINT_PATHS = "disjoint-paths"


@dataclass(frozen=True)
class Violation:
    rule: Rule
    gates: tuple[int, ...]
    detail: str

    def __str__(self):
        where = f" (gates {', '.join(map(str, self.gates))})" if self.gates else ""
        return f"{self.rule.value}{where}: {self.detail}"


def validate(arch: Architecture, circuit: Circuit, qmap: QubitMap, route: GateRoute) -> list[Violation]:
    """Check every rule of a valid solution; empty list means ok."""
    out: list[Violation] = []
    bad = out.append

    seen_vertices: dict[Vertex, str] = {}
    mapping = qmap.as_dict
    for q in circuit.qubits:
        v = mapping.get(q)
        if v is None:
            bad(Violation(Rule.MAP_VALIDITY, (), f"qubit {q!r} is unmapped"))
            continue
        if not arch.in_bounds(v):
            bad(Violation(Rule.MAP_VALIDITY, (), f"qubit {q!r} mapped off-grid at {v}"))
        elif v in arch.magic:
            bad(Violation(Rule.MAP_VALIDITY, (), f"qubit {q!r} mapped onto magic vertex {v}"))
        if v in seen_vertices:
            bad(Violation(Rule.MAP_VALIDITY, (), f"qubits {seen_vertices[v]!r} and {q!r} share vertex {v}"))
        seen_vertices[v] = q
    if out:
        return out

    mapped = set(qmap.vertices())

    for g in circuit.gates:
        rule = Rule.CNOT_ROUTING if g.kind is GateKind.CNOT else Rule.T_ROUTING
        step = route.time.get(g.index)
        path = route.space.get(g.index)
        if step is None or path is None:
            bad(Violation(rule, (g.index,), "gate missing from the schedule"))
            continue
        if not 1 <= step <= route.steps:
            bad(Violation(Rule.LOGICAL_ORDER, (g.index,), f"step {step} outside 1..{route.steps}"))
        out.extend(_check_path_shape(arch, g, path, rule))
        if _path_well_formed(arch, path):
            if g.kind is GateKind.CNOT:
                if path[0] != qmap[g.control]:
                    bad(Violation(rule, (g.index,), f"path starts at {path[0]}, control is at {qmap[g.control]}"))
                if path[-1] != qmap[g.target]:
                    bad(Violation(rule, (g.index,), f"path ends at {path[-1]}, target is at {qmap[g.target]}"))
            else:
                if path[0] != qmap[g.operand]:
                    bad(Violation(rule, (g.index,), f"path starts at {path[0]}, operand is at {qmap[g.operand]}"))
                if path[-1] not in arch.magic:
                    bad(Violation(rule, (g.index,), f"path ends at {path[-1]}, not a magic vertex"))
            for v in path[1:-1]:
                if v in mapped or v in arch.magic:
                    bad(Violation(Rule.DATA_PRESERVATION, (g.index,),
                                  f"protected vertex {v} used as path interior"))

    for i, j in consecutive_qubit_pairs(circuit):
        ti, tj = route.time.get(i), route.time.get(j)
        if ti is not None and tj is not None and ti >= tj:
            bad(Violation(Rule.LOGICAL_ORDER, (i, j),
                          f"gate {j} depends on gate {i} but runs at step {tj} <= {ti}"))

    by_step: dict[int, list[int]] = {}
    for idx, step in route.time.items():
        by_step.setdefault(step, []).append(idx)
    for step, idxs in sorted(by_step.items()):
        claimed: dict[Vertex, int] = {}
        for idx in sorted(idxs):
            for v in route.space.get(idx, ()):
                if v in claimed:
                    bad(Violation(Rule.DISJOINT_PATHS, (claimed[v], idx),
                                  f"vertex {v} shared at step {step}"))
                else:
                    claimed[v] = idx
    return out


def _path_well_formed(arch: Architecture, path: Path) -> bool:
    return (
        len(path) >= 2
        and len(set(path)) == len(path)
        and all(arch.in_bounds(v) for v in path)
        and all(abs(u[0] - v[0]) + abs(u[1] - v[1]) == 1 for u, v in zip(path, path[1:]))
    )


def _check_path_shape(arch: Architecture, g: Gate, path: Path, rule: Rule) -> list[Violation]:
    out = []
    if len(path) < 3:
        out.append(Violation(rule, (g.index,), f"path has {len(path)} vertices, needs at least 3"))
        return out
    if len(set(path)) != len(path):
        out.append(Violation(rule, (g.index,), "path revisits a vertex"))
    for v in path:
        if not arch.in_bounds(v):
            out.append(Violation(rule, (g.index,), f"path vertex {v} is off-grid"))
            return out
    for u, v in zip(path, path[1:]):
        if abs(u[0] - v[0]) + abs(u[1] - v[1]) != 1:
            out.append(Violation(rule, (g.index,), f"{u} and {v} are not grid neighbors"))
            return out
    first, second = path[0], path[1]
    if abs(first[1] - second[1]) != 1:
        out.append(Violation(rule, (g.index,), f"first edge {first}->{second} is not vertical"))
    last, before = path[-1], path[-2]
    if abs(last[0] - before[0]) != 1:
        out.append(Violation(rule, (g.index,), f"last edge {before}->{last} is not horizontal"))
    return out


# ---------------------------------------------------------------------------
# JSON form: {"steps": t, "gates": [{"index": i, "step": s, "path": [[a,b],...]}]}
# ---------------------------------------------------------------------------

def route_to_json(route: GateRoute) -> str:
    gates = [
        {"index": i, "step": route.time[i], "path": [list(v) for v in route.space[i]]}
        for i in sorted(route.time)
    ]
    return json.dumps({"steps": route.steps, "gates": gates})


def route_from_json(text: str) -> GateRoute:
    data = json.loads(text)
    time = {g["index"]: g["step"] for g in data["gates"]}
    space = {g["index"]: tuple(tuple(v) for v in g["path"]) for g in data["gates"]}
    return GateRoute(data["steps"], time, space)
