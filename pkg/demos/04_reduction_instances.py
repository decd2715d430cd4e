"""The constructive reductions as instance generators.

Two families ship with the package:

* scheduling instances: a partially ordered job set becomes a circuit whose
  T gates inherit exactly the job order (job gadgets + transition CNOTs),
  padded with a cycle circuit that pins every magic vertex's timetable, on a
  chain of processor-unit grids;
* disjoint-path instances: a small grid plus terminal pairs becomes a 5x5
  vertex-gadget tiling that is single-step routable exactly when the
  original instance has node-disjoint paths.
"""
from scmr import CapExhausted, solve_optimal
from scmr.bench import cycle_time_limit, dependency_circuit, ndp_to_scr, psp_to_scmr


def main():
    jobs = ["A", "B", "C", "D"]
    edges = [("A", "B"), ("A", "C"), ("A", "D")]
    arch, circuit, t_s = psp_to_scmr(jobs, edges, k=2, t_p=2)
    print("scheduling instance: 4 jobs, fan-out 3, 2 processors, 2 slots")
    print(f"  architecture {arch.cols}x{arch.rows}, magic vertices {sorted(arch.magic)}")
    print(f"  circuit: {len(circuit.gates)} gates on {circuit.num_qubits} qubits")
    print(f"  time limit: {t_s} (= (2*3+1)*2 + 3*2*(2-1) = {cycle_time_limit(3, 2, 2)})")

    dep = dependency_circuit(jobs, edges)
    print(f"  dependency part alone: {len(dep.gates)} gates "
          f"(4 gadgets of 7 + 3 transitions)")

    print("\ndisjoint-paths instances on the 2x2 grid:")
    for pairs, label in [
        ([((1, 1), (2, 1)), ((1, 2), (2, 2))], "two parallel pairs"),
        ([((1, 1), (2, 2)), ((2, 1), (1, 2))], "two crossing pairs"),
    ]:
        arch, circuit, qmap = ndp_to_scr((2, 2), pairs)
        try:
            steps = solve_optimal(arch, circuit, qmap=qmap, t_max=1).steps
            verdict = f"single-step routable ({steps} step)"
        except CapExhausted:
            verdict = "not single-step routable"
        print(f"  {label}: {verdict}")


if __name__ == "__main__":
    main()
