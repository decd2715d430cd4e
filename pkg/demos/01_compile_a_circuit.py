"""Compile a small circuit end to end and draw the resulting schedule.

Builds the default bordered architecture for the circuit's qubit count,
places qubits with the structural mapper, routes with the greedy scheduler,
and then renders each time step as an ASCII grid: letters are mapped qubits,
`#` are magic-state vertices, digits show which gate's path crosses a cell.
"""
from scmr import (
    bordered_architecture,
    greedy_route,
    parse_circuit,
    struct_map,
    validate,
)

SOURCE = """
# three interacting qubits plus one bystander
t q0;
cnot q0 q1;
cnot q1 q2;
t q2;
cnot q2 q3;
"""


def render_step(arch, qmap, route, step):
    cell = {}
    for q, v in qmap.assignment:
        cell[v] = q[-1]
    for v in arch.magic:
        cell[v] = "#"
    for idx, s in route.time.items():
        if s != step:
            continue
        for v in route.space[idx][1:-1]:
            cell[v] = str(idx % 10)
    rows = []
    for b in range(arch.rows, 0, -1):
        rows.append(" ".join(cell.get((a, b), ".") for a in range(1, arch.cols + 1)))
    return "\n".join(rows)


def main():
    circuit = parse_circuit(SOURCE)
    arch = bordered_architecture(circuit.num_qubits)
    print(f"{len(circuit.gates)} gates on {circuit.num_qubits} qubits; "
          f"architecture {arch.cols}x{arch.rows} with {len(arch.magic)} magic vertices")

    qmap = struct_map(arch, circuit)
    route = greedy_route(arch, circuit, qmap)
    problems = validate(arch, circuit, qmap, route)
    print(f"schedule: {route.steps} steps; validator says "
          f"{'ok' if not problems else problems}")

    for step in range(1, route.steps + 1):
        gates = sorted(i for i, s in route.time.items() if s == step)
        print(f"\nstep {step}: gates {gates}")
        print(render_step(arch, qmap, route, step))


if __name__ == "__main__":
    main()
