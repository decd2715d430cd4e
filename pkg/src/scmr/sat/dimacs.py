"""DIMACS CNF emission/parsing and the solver-output format.

Emission is byte-stable: `p cnf <vars> <clauses>` header, one clause per
line, literals space-separated, zero-terminated. The sidecar variable table
maps integer ids back to `map q (a,b)` / `exec g t` / `path (u) (v) g t`
records for debugging.
"""
from __future__ import annotations

import io


def write_dimacs(num_vars: int, clauses, out) -> None:
    out.write(f"p cnf {num_vars} {len(clauses)}\n")
    for clause in clauses:
        out.write(" ".join(map(str, clause)))
        out.write(" 0\n" if clause else "0\n")


def dimacs_text(num_vars: int, clauses) -> str:
    buf = io.StringIO()
    write_dimacs(num_vars, clauses, buf)
    return buf.getvalue()


def write_instance(cnf, base_path) -> tuple[str, str]:
    """Write `<base>.cnf` plus the `<base>.vars` sidecar variable table.

    Returns the two paths. `cnf` is a CnfInstance; the sidecar maps integer
    ids to map/exec/path records so models can be read by hand.
    """
    from pathlib import Path

    base = Path(base_path)
    cnf_path = base.with_suffix(".cnf")
    vars_path = base.with_suffix(".vars")
    with cnf_path.open("w") as f:
        write_dimacs(cnf.num_vars, cnf.clauses, f)
    vars_path.write_text(cnf.table.table_text())
    return str(cnf_path), str(vars_path)


def parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    num_vars = 0
    clauses: list[list[int]] = []
    current: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line!r}")
            num_vars = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(current)
    return num_vars, clauses


def parse_solver_output(text: str) -> list[int] | None:
    """Parse `s SATISFIABLE` + `v` lines, or `s UNSATISFIABLE` (None).

    Raises ValueError when no verdict line is present.
    """
    verdict = None
    lits: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("s "):
            token = line.split(None, 1)[1].strip().upper()
            if token == "SATISFIABLE":
                verdict = True
            elif token == "UNSATISFIABLE":
                verdict = False
        elif line.startswith("v ") or line == "v":
            lits.extend(int(t) for t in line[1:].split())
    if verdict is None:
        raise ValueError("solver output has no 's' verdict line")
    if not verdict:
        return None
    return [l for l in lits if l != 0]
