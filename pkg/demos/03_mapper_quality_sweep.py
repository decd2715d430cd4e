"""Cost-ratio sweep on circuits with a known optimum.

The known-optimal generator emits circuits that admit a schedule equal to
their depth, so steps/depth measures solution quality directly. Structural
placement keeps interacting pairs adjacent and stays at ratio 1.0 here,
while single random maps degrade as density grows; sampling several random
maps recovers most of the gap.
"""
from scmr import bordered_architecture, best_of_n, greedy_route, struct_map
from scmr.bench import known_optimal
from scmr.circuit import depth


def main():
    print(f"{'d':>3} {'k':>3} {'rho':>5} {'struct':>7} {'rand1':>7} {'rand20':>7}")
    for d, k in [(4, 4), (8, 8), (8, 16)]:
        for rho in (0.5, 1.0):
            circuit = known_optimal(d, k, rho, seed=17)
            arch = bordered_architecture(circuit.num_qubits)

            s_route = greedy_route(arch, circuit, struct_map(arch, circuit))
            _, r1 = best_of_n(arch, circuit, 1, seed=3, router=greedy_route)
            _, r20 = best_of_n(arch, circuit, 20, seed=3, router=greedy_route)

            ratios = [r.steps / depth(circuit) for r in (s_route, r1, r20)]
            print(f"{d:>3} {k:>3} {rho:>5.2f} "
                  f"{ratios[0]:>7.2f} {ratios[1]:>7.2f} {ratios[2]:>7.2f}")


if __name__ == "__main__":
    main()
