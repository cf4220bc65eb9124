"""Brute-force point counts of jet-scheme fibers over F_q.

Independent of the C++ library: generators come from sympy's series
expansion, and the enumeration is a plain numpy sweep. Used to freeze the
golden counts in the acceptance suite.
"""
import itertools
import sys

import numpy as np
import sympy as sp


def jet_generators(poly, ambient, m):
    t = sp.Symbol("t")
    jets = [[sp.Symbol(f"{v}_{j}") for j in range(m + 1)] for v in ambient]
    subs = {v: sum(jets[i][j] * t**j for j in range(m + 1)) for i, v in enumerate(ambient)}
    expanded = sp.expand(poly.subs(subs, simultaneous=True))
    gens = [sp.expand(expanded.coeff(t, k)) for k in range(m + 1)]
    return gens, jets


def count(poly, ambient, m, q):
    gens, jets = jet_generators(poly, ambient, m)
    d = len(ambient)
    block0 = [jets[i][0] for i in range(d)]
    rest = [jets[i][j] for j in range(1, m + 1) for i in range(d)]
    total = 0
    for point in itertools.product(range(q), repeat=d):
        sub0 = dict(zip(block0, point))
        if int(gens[0].subs(sub0)) % q != 0:
            continue
        if not rest:
            total += 1
            continue
        grid = np.array(list(itertools.product(range(q), repeat=len(rest))), dtype=np.int64).T
        ok = np.ones(grid.shape[1], dtype=bool)
        for g in gens[1:]:
            g0 = sp.Poly(g.subs(sub0), *rest)
            acc = np.zeros(grid.shape[1], dtype=np.int64)
            for monom, coeff in g0.terms():
                term = np.full(grid.shape[1], int(coeff) % q, dtype=np.int64)
                for idx, e in enumerate(monom):
                    for _ in range(e):
                        term = (term * grid[idx]) % q
                acc = (acc + term) % q
            ok &= acc == 0
        total += int(ok.sum())
    return total


if __name__ == "__main__":
    x, y, z, s = sp.symbols("x y z s")
    cases = [
        ("x+y m=1 q=3", x + y, [x, y], 1, 3),
        ("x+y m=2 q=3", x + y, [x, y], 2, 3),
        ("x+y^2 m=1 q=5", x + y**2, [x, y], 1, 5),
        ("x^2+y^2 m=1 q=3", x**2 + y**2, [x, y], 1, 3),
        ("x^2+y^2 m=1 q=5", x**2 + y**2, [x, y], 1, 5),
        ("2x^2+y^2 m=1 q=3", 2 * x**2 + y**2, [x, y], 1, 3),
        ("2x^2+y^2 m=1 q=5", 2 * x**2 + y**2, [x, y], 1, 5),
        ("x^4+y^4+z^4 m=3 q=3", x**4 + y**4 + z**4, [x, y, z], 3, 3),
        ("x^4+y^4+z^4+1 m=3 q=3", x**4 + y**4 + z**4 + 1, [x, y, z], 3, 3),
        ("x^4+y^4+z^4 m=3 q=5", x**4 + y**4 + z**4, [x, y, z], 3, 5),
        ("x^4+y^4+z^4+1 m=3 q=5", x**4 + y**4 + z**4 + 1, [x, y, z], 3, 5),
    ]
    for label, poly, amb, m, q in cases:
        print(f"{label}: {count(poly, amb, m, q)}", flush=True)
