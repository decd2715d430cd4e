"""At-most-one / exactly-one encodings over CNF literals.

Small sets get the pairwise encoding; larger ones the sequential counter,
which introduces auxiliary variables through the supplied allocator.
"""
from __future__ import annotations

PAIRWISE_LIMIT = 5


def encode_amo(lits, new_var) -> list[list[int]]:
    """Clauses satisfied exactly when at most one literal is true.

    `new_var` is a zero-argument callable handing out fresh variable ids.
    """
    lits = list(lits)
    if len(lits) <= 1:
        return []
    if len(lits) <= PAIRWISE_LIMIT:
        return [[-a, -b] for i, a in enumerate(lits) for b in lits[i + 1:]]
    # sequential counter: s_i says "a true literal occurred at or before i"
    clauses = []
    prev = None
    for i, lit in enumerate(lits):
        if i == len(lits) - 1:
            if prev is not None:
                clauses.append([-prev, -lit])
            break
        s = new_var()
        clauses.append([-lit, s])
        if prev is not None:
            clauses.append([-prev, s])
            clauses.append([-prev, -lit])
        prev = s
    return clauses


def encode_eo(lits, new_var) -> list[list[int]]:
    """Exactly-one. An empty set is unsatisfiable and yields the empty clause."""
    lits = list(lits)
    if not lits:
        return [[]]
    return [list(lits)] + encode_amo(lits, new_var)
