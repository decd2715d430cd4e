"""Benchmark instance generators.

known_optimal builds circuits whose optimal step count equals their depth;
random_circuit gives seeded filler workloads with exact qubit count and
depth; the remaining generators are the constructive halves of the
scheduling and disjoint-path reductions (job gadgets, dependency circuit,
cycle circuit, processor-unit architectures, vertex-gadget tilings).
"""
from __future__ import annotations

import math
import random

from .architecture import Architecture, Vertex
from .circuit import Circuit, circuit_from_gates, cnot, tgate
from .mapping import QubitMap, qubit_map


class BenchError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Synthetic circuits
# ---------------------------------------------------------------------------

def known_optimal(d: int, k: int, rho: float = 1.0, seed: int = 0) -> Circuit:
    """d layers of CNOTs between a random even partition Left/Right of 2k
    qubits; density rho keeps ceil(rho*k) pairs per layer, always including
    pair 0 so the depth stays exactly d."""
    if d < 1 or k < 1:
        raise BenchError("need d >= 1 and k >= 1")
    if not 0 < rho <= 1:
        raise BenchError("density must be in (0, 1]")
    rng = random.Random(seed)
    qs = [f"q{i}" for i in range(2 * k)]
    rng.shuffle(qs)
    left, right = qs[:k], qs[k:]
    per_layer = max(1, min(k, math.ceil(rho * k - 1e-12)))
    gates = []
    for _ in range(d):
        included = {0}
        if per_layer > 1:
            included.update(rng.sample(range(1, k), per_layer - 1))
        for i in sorted(included):
            gates.append(cnot(left[i], right[i]))
    return circuit_from_gates(gates)


def random_circuit(num_qubits: int, depth: int, t_fraction: float = 0.0, seed: int = 0) -> Circuit:
    """Layered random circuit with exactly the requested qubit count and depth.

    Each layer is a fresh random disjoint pairing of all qubits; a slot turns
    into a T gate with probability t_fraction, and an odd qubit out always
    gets a T. Full per-layer coverage makes every gate depend on the layer
    above, pinning the depth.
    """
    if depth > 0 and num_qubits < 1:
        raise BenchError("positive depth needs at least one qubit")
    if not 0 <= t_fraction <= 1:
        raise BenchError("t_fraction must be in [0, 1]")
    rng = random.Random(seed)
    qs = [f"q{i}" for i in range(num_qubits)]
    gates = []
    for _ in range(depth):
        rng.shuffle(qs)
        i = 0
        while i < len(qs):
            if i == len(qs) - 1:
                gates.append(tgate(qs[i]))
                i += 1
            elif t_fraction and rng.random() < t_fraction:
                gates.append(tgate(qs[i]))
                i += 1
            else:
                gates.append(cnot(qs[i], qs[i + 1]))
                i += 2
    return circuit_from_gates(gates)


# ---------------------------------------------------------------------------
# Scheduling reduction: job gadgets, dependency circuit, cycle circuit
# ---------------------------------------------------------------------------

def _gadget_gates(job, d: int):
    if d < 0:
        raise BenchError("degree bound must be nonnegative")
    io = [f"q_{job}_{i}" for i in range(d + 1)]
    ins = [cnot(io[0], io[i]) for i in range(1, d + 1)]
    return ins + [tgate(io[0])] + list(ins)


def job_gadget(job, d: int) -> Circuit:
    """d+1 qubits; d CNOTs fanning out of the T qubit, the T gate, then the
    same d CNOTs again (2d+1 gates)."""
    return circuit_from_gates(_gadget_gates(job, d))


def _degree_bound(jobs, edges) -> int:
    out_deg = {j: 0 for j in jobs}
    in_deg = {j: 0 for j in jobs}
    for a, b in edges:
        out_deg[a] += 1
        in_deg[b] += 1
    return max([*out_deg.values(), *in_deg.values()], default=0)


def dependency_circuit(jobs, edges) -> Circuit:
    """Concatenated job gadgets plus one transition CNOT per direct
    dependency, wired so the T gates' dependency order equals the job order.

    `jobs` is an ordered list of hashable ids; `edges` are Hasse-diagram
    pairs (prerequisite, dependent). Edge endpoints get I/O qubit indices by
    partner position in `jobs`.
    """
    jobs = list(jobs)
    pos = {j: i for i, j in enumerate(jobs)}
    edges = list(edges)
    for a, b in edges:
        if a not in pos or b not in pos:
            raise BenchError(f"edge ({a}, {b}) references unknown job")
        if a == b:
            raise BenchError(f"self-dependency on job {a}")
    d = _degree_bound(jobs, edges)

    out_index: dict[tuple, int] = {}
    in_index: dict[tuple, int] = {}
    for j in jobs:
        outs = sorted((b for a, b in edges if a == j), key=pos.get)
        for i, b in enumerate(outs, start=1):
            out_index[(j, b)] = i
        ins = sorted((a for a, b in edges if b == j), key=pos.get)
        for i, a in enumerate(ins, start=1):
            in_index[(a, j)] = i

    # stable topological order; transitions into a job precede its gadget
    remaining = {j: sum(1 for a, b in edges if b == j) for j in jobs}
    ready = [j for j in jobs if remaining[j] == 0]
    topo = []
    while ready:
        j = ready.pop(0)
        topo.append(j)
        for a, b in edges:
            if a == j:
                remaining[b] -= 1
                if remaining[b] == 0 and b not in ready:
                    ready.append(b)
        ready.sort(key=pos.get)
    if len(topo) != len(jobs):
        raise BenchError("dependency edges contain a cycle")

    gates = []
    for j in topo:
        for a in sorted((a for a, b in edges if b == j), key=pos.get):
            gates.append(cnot(f"q_{a}_{out_index[(a, j)]}", f"q_{j}_{in_index[(a, j)]}"))
        gates.extend(_gadget_gates(j, d))
    return circuit_from_gates(gates)


def cycle_time_limit(d: int, k: int, t_p: int) -> int:
    return (2 * d + 1) * t_p + d * k * (t_p - 1)


def cycle_circuit(d: int, k: int, t_p: int) -> Circuit:
    """k independent two-qubit chains that hold the magic vertices busy in a
    repeating pattern, releasing them once per cycle; every gate sits on a
    dependency chain of the full time limit, so nothing can be delayed."""
    if d < 0 or k < 1 or t_p < 1:
        raise BenchError("need d >= 0, k >= 1, t_p >= 1")
    gates = []
    for c in range(k):
        a, b = f"cyc{c}_a", f"cyc{c}_b"
        for cycle in range(t_p):
            gates.extend(tgate(a) for _ in range(d))
            gates.append(cnot(a, b))
            gates.extend(tgate(a) for _ in range(d))
            if cycle < t_p - 1:
                gates.extend(tgate(a) for _ in range(d * k))
    return circuit_from_gates(gates)


def processor_unit_width(num_jobs: int) -> int:
    return 6 * num_jobs + 1


def psp_to_scmr(jobs, edges, k: int, t_p: int) -> tuple[Architecture, Circuit, int]:
    """Scheduling instance -> (architecture, circuit, time limit).

    The architecture chains k processor units (4 rows by 6|J|+1 columns,
    magic vertex in the second row from the bottom, second column from the
    right of each unit); the circuit runs the dependency circuit next to the
    cycle circuit on disjoint qubits.
    """
    jobs = list(jobs)
    if k < 1 or t_p < 1:
        raise BenchError("need k >= 1 and t_p >= 1")
    if not jobs:
        raise BenchError("need at least one job")
    d = _degree_bound(jobs, edges)
    width = processor_unit_width(len(jobs))
    magic = frozenset((u * width - 1, 2) for u in range(1, k + 1))
    arch = Architecture(4, k * width, magic)
    dep = dependency_circuit(jobs, edges)
    cyc = cycle_circuit(d, k, t_p)
    circuit = circuit_from_gates(
        [(g.kind, g.qubits) for g in dep.gates] + [(g.kind, g.qubits) for g in cyc.gates]
    )
    return arch, circuit, cycle_time_limit(d, k, t_p)


# ---------------------------------------------------------------------------
# Disjoint-path reduction: vertex gadget tiles
# ---------------------------------------------------------------------------

TILE = 5

# Local cells are (a, b) in 1..5; openings sit mid-side and line up between
# adjacent tiles. An empty tile is a plus: any crossing must use its center.
EMPTY_FREE = frozenset({
    (3, 1), (3, 2), (3, 3), (3, 4), (3, 5), (1, 3), (2, 3), (4, 3), (5, 3),
})

# A full tile maps qubits on the center and the two diagonal internal cells.
# The ring around the center splits into two arcs; pocket cells (1,2) and
# (4,5) give the internal gate a second routing, so the tile's own external
# connection can enter or leave through any side while at most one foreign
# crossing fits alongside the internal gate.
FULL_CENTER = (3, 3)
FULL_BL = (2, 2)
FULL_TR = (4, 4)
FULL_FREE = frozenset({
    (3, 1), (1, 3), (3, 5), (5, 3),          # openings
    (2, 3), (3, 2), (3, 4), (4, 3),          # inner arms
    (2, 4), (4, 2),                          # arc corners
    (1, 2), (4, 5),                          # pockets
})


def _tile_cells(kind: str):
    """(free, mapped) local cell sets for a tile kind."""
    if kind == "empty":
        return EMPTY_FREE, frozenset()
    return FULL_FREE, frozenset({FULL_CENTER, FULL_BL, FULL_TR})


def _offset(v: Vertex, cell: Vertex) -> Vertex:
    return ((v[0] - 1) * TILE + cell[0], (v[1] - 1) * TILE + cell[1])


def ndp_to_scr(dims: tuple[int, int], pairs) -> tuple[Architecture, Circuit, QubitMap]:
    """Node-disjoint-paths instance -> single-step routing instance.

    `dims` is the (cols, rows) of the pair grid; `pairs` are endpoint pairs
    of grid vertices, each vertex in at most one pair. Solvable in one time
    step exactly when the original instance has node-disjoint paths.
    """
    gw, gh = dims
    pairs = [((int(s[0]), int(s[1])), (int(t[0]), int(t[1]))) for s, t in pairs]
    used: list[Vertex] = []
    for s, t in pairs:
        for v in (s, t):
            if not (1 <= v[0] <= gw and 1 <= v[1] <= gh):
                raise BenchError(f"pair vertex {v} outside {gw}x{gh} grid")
            if v in used:
                raise BenchError(f"vertex {v} appears in more than one pair")
            used.append(v)

    magic: set[Vertex] = set()
    assignment: dict[str, Vertex] = {}
    gates = []
    for y in range(1, gh + 1):
        for x in range(1, gw + 1):
            kind = "full" if (x, y) in used else "empty"
            free, mapped = _tile_cells(kind)
            for b in range(1, TILE + 1):
                for a in range(1, TILE + 1):
                    if (a, b) not in free and (a, b) not in mapped:
                        magic.add(_offset((x, y), (a, b)))
    for i, (s, t) in enumerate(pairs):
        assignment[f"src{i}"] = _offset(s, FULL_CENTER)
        assignment[f"tar{i}"] = _offset(t, FULL_CENTER)
        gates.append(cnot(f"src{i}", f"tar{i}"))
    for v in sorted(used):
        name = f"{v[0]}_{v[1]}"
        assignment[f"tr_{name}"] = _offset(v, FULL_TR)
        assignment[f"bl_{name}"] = _offset(v, FULL_BL)
        gates.append(cnot(f"tr_{name}", f"bl_{name}"))

    arch = Architecture(gh * TILE, gw * TILE, frozenset(magic))
    return arch, circuit_from_gates(gates), qubit_map(assignment)
