"""Circuit IR: CNOT/T gate sequences with dependency analysis.

A circuit is an ordered list of gates over named qubits. Gate j depends on
gate i when i < j and the two act on a shared qubit; everything downstream
(depth, topological layers, interaction structure) derives from that relation.

Text format: one gate per statement, statements split on ';' or newline,
tokens whitespace-separated, `#` comments to end of line, case-insensitive
mnemonics `cnot <id> <id>` and `t <id>`. Qubit ids match
``[A-Za-z_][A-Za-z0-9_]*``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

# Vertex used in interaction graphs for the magic-state side of T gates.
# None can never collide with a parsed qubit id.
T_VERTEX = None

_ID_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


class GateKind(Enum):
    CNOT = "cnot"
    T = "t"


class CircuitError(ValueError):
    pass


class ParseError(CircuitError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    qubits: tuple[str, ...]  # (control, target) for CNOT, (operand,) for T
    index: int

    def __post_init__(self):
        if self.kind is GateKind.CNOT:
            if len(self.qubits) != 2:
                raise CircuitError(f"CNOT takes two qubits, got {self.qubits}")
            if self.qubits[0] == self.qubits[1]:
                raise CircuitError(f"CNOT control and target must differ, got {self.qubits[0]!r} twice")
        else:
            if len(self.qubits) != 1:
                raise CircuitError(f"T takes one qubit, got {self.qubits}")

    @property
    def control(self) -> str:
        if self.kind is not GateKind.CNOT:
            raise CircuitError("control is only defined for CNOT gates")
        return self.qubits[0]

    @property
    def target(self) -> str:
        if self.kind is not GateKind.CNOT:
            raise CircuitError("target is only defined for CNOT gates")
        return self.qubits[1]

    @property
    def operand(self) -> str:
        if self.kind is not GateKind.T:
            raise CircuitError("operand is only defined for T gates")
        return self.qubits[0]

    def shares_qubit(self, other: "Gate") -> bool:
        return bool(set(self.qubits) & set(other.qubits))


@dataclass(frozen=True)
class Circuit:
    gates: tuple[Gate, ...]
    qubits: tuple[str, ...]  # first-appearance order

    def __len__(self) -> int:
        return len(self.gates)

    @property
    def num_qubits(self) -> int:
        return len(self.qubits)


def circuit_from_gates(specs) -> Circuit:
    """Build a circuit from (kind, qubits) pairs, assigning source indices."""
    gates = []
    qubits: list[str] = []
    seen: set[str] = set()
    for i, (kind, qs) in enumerate(specs):
        gates.append(Gate(kind, tuple(qs), i))
        for q in qs:
            if q not in seen:
                seen.add(q)
                qubits.append(q)
    return Circuit(tuple(gates), tuple(qubits))


def cnot(control: str, target: str) -> tuple[GateKind, tuple[str, str]]:
    return (GateKind.CNOT, (control, target))


def tgate(operand: str) -> tuple[GateKind, tuple[str]]:
    return (GateKind.T, (operand,))


def parse_circuit(text: str, strict: bool = True) -> Circuit:
    """Parse circuit text; in lenient mode unknown one-qubit gates are dropped."""
    specs = []
    for line_no, raw_line in enumerate(text.split("\n"), start=1):
        line = raw_line.split("#", 1)[0]
        col = 1
        for stmt in line.split(";"):
            tokens = stmt.split()
            if tokens:
                specs_or_none = _parse_statement(tokens, line_no, col + stmt.index(tokens[0]), strict)
                if specs_or_none is not None:
                    specs.append(specs_or_none)
            col += len(stmt) + 1
    return circuit_from_gates(specs)


def _parse_statement(tokens, line, col, strict):
    name = tokens[0].lower()
    args = tokens[1:]
    for a in args:
        if not _ID_RE.match(a):
            raise ParseError(f"bad qubit id {a!r}", line, col)
    if name == "cnot":
        if len(args) != 2:
            raise ParseError(f"cnot takes 2 qubits, got {len(args)}", line, col)
        if args[0] == args[1]:
            raise ParseError(f"cnot operands must be distinct, got {args[0]!r} twice", line, col)
        return (GateKind.CNOT, (args[0], args[1]))
    if name == "t":
        if len(args) != 1:
            raise ParseError(f"t takes 1 qubit, got {len(args)}", line, col)
        return (GateKind.T, (args[0],))
    if not strict and len(args) == 1:
        return None  # unsupported one-qubit gate, dropped in lenient mode
    raise ParseError(f"unknown gate {tokens[0]!r}", line, col)


def serialize_circuit(circuit: Circuit) -> str:
    lines = []
    for g in circuit.gates:
        lines.append(f"{g.kind.value} {' '.join(g.qubits)};")
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# Dependency structure
# ---------------------------------------------------------------------------

def gate_depths(circuit: Circuit) -> list[int]:
    """1-based dependency depth per gate: 1 + max depth over earlier gates sharing a qubit."""
    depth_by_qubit: dict[str, int] = {}
    depths = []
    for g in circuit.gates:
        d = 1 + max((depth_by_qubit.get(q, 0) for q in g.qubits), default=0)
        depths.append(d)
        for q in g.qubits:
            depth_by_qubit[q] = d
    return depths


def gate_heights(circuit: Circuit) -> list[int]:
    """1-based height per gate: longest dependency chain starting at the gate."""
    height_by_qubit: dict[str, int] = {}
    heights = [0] * len(circuit.gates)
    for g in reversed(circuit.gates):
        h = 1 + max((height_by_qubit.get(q, 0) for q in g.qubits), default=0)
        heights[g.index] = h
        for q in g.qubits:
            height_by_qubit[q] = h
    return heights


def depth(circuit: Circuit) -> int:
    return max(gate_depths(circuit), default=0)


def consecutive_qubit_pairs(circuit: Circuit):
    """Yield (i, j) for gates adjacent in some qubit's timeline, i < j.

    Ordering these pairs orders every pair of gates sharing a qubit.
    """
    last: dict[str, int] = {}
    for g in circuit.gates:
        for q in g.qubits:
            if q in last:
                yield (last[q], g.index)
            last[q] = g.index


@dataclass(frozen=True)
class Layering:
    layers: tuple[tuple[int, ...], ...]  # gate indices, layer i = gates at depth i+1


def topological_layering(circuit: Circuit) -> Layering:
    depths = gate_depths(circuit)
    d = max(depths, default=0)
    layers: list[list[int]] = [[] for _ in range(d)]
    for g in circuit.gates:
        layers[depths[g.index] - 1].append(g.index)
    return Layering(tuple(tuple(layer) for layer in layers))


# ---------------------------------------------------------------------------
# Interaction structure (used by the structural mapper)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InteractionGraph:
    """Undirected qubit-interaction graph plus the T_VERTEX magic-state node.

    Vertices and edges are kept in first-appearance order so chain
    construction is deterministic for a fixed circuit.
    """
    vertices: tuple  # qubits in first-appearance order, then T_VERTEX
    edges: tuple     # (x, y) pairs, first-appearance order, deduplicated


def interaction_graph(circuit: Circuit) -> InteractionGraph:
    edges = []
    seen: set[frozenset] = set()
    for g in circuit.gates:
        if g.kind is GateKind.CNOT:
            e = (g.control, g.target)
        else:
            e = (T_VERTEX, g.operand)
        key = frozenset(e)
        if key not in seen:
            seen.add(key)
            edges.append(e)
    return InteractionGraph(circuit.qubits + (T_VERTEX,), tuple(edges))


@dataclass(frozen=True)
class InteractionChainSet:
    chains: tuple  # each chain a tuple of vertices; T_VERTEX only at one end


def interaction_chain_set(graph: InteractionGraph) -> InteractionChainSet:
    """Greedy single pass over edges: add an edge iff the result is still a
    disjoint set of paths with at most one T_VERTEX edge per path."""
    chains: list[list] = []
    chain_of: dict[str, int] = {}  # qubit -> chain idx
    has_t: list[bool] = []

    def endpoint_side(q):
        c = chains[chain_of[q]]
        if c[0] == q:
            return 0
        if c[-1] == q:
            return -1
        return None

    for x, y in graph.edges:
        if x is T_VERTEX or y is T_VERTEX:
            q = y if x is T_VERTEX else x
            if q not in chain_of:
                chains.append([q, T_VERTEX])
                chain_of[q] = len(chains) - 1
                has_t.append(True)
            else:
                ci = chain_of[q]
                side = endpoint_side(q)
                if side is None or has_t[ci]:
                    continue
                if side == 0:
                    chains[ci].insert(0, T_VERTEX)
                else:
                    chains[ci].append(T_VERTEX)
                has_t[ci] = True
            continue

        a, b = x, y
        in_a, in_b = a in chain_of, b in chain_of
        if not in_a and not in_b:
            chains.append([a, b])
            chain_of[a] = chain_of[b] = len(chains) - 1
            has_t.append(False)
        elif in_a != in_b:
            q_old, q_new = (a, b) if in_a else (b, a)
            ci = chain_of[q_old]
            side = endpoint_side(q_old)
            if side is None:
                continue
            if side == 0:
                chains[ci].insert(0, q_new)
            else:
                chains[ci].append(q_new)
            chain_of[q_new] = ci
        else:
            ca, cb = chain_of[a], chain_of[b]
            if ca == cb or has_t[ca] and has_t[cb]:
                continue
            sa, sb = endpoint_side(a), endpoint_side(b)
            if sa is None or sb is None:
                continue
            left = chains[ca] if sa == -1 else list(reversed(chains[ca]))
            right = chains[cb] if sb == 0 else list(reversed(chains[cb]))
            merged = left + right
            chains[ca] = merged
            chains[cb] = []
            has_t[ca] = has_t[ca] or has_t[cb]
            for v in merged:
                if v is not T_VERTEX:
                    chain_of[v] = ca

    out = [tuple(c) for c in chains if c]
    for q in graph.vertices:
        if q is not T_VERTEX and q not in chain_of:
            out.append((q,))
    return InteractionChainSet(tuple(out))
