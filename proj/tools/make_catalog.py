#!/usr/bin/env python3
"""Regenerate data/catalog.json: named groups as permutation generators (0-indexed images)."""
import json
import itertools
import pathlib


def cyclic(n):
    return {"degree": n, "generators": [[(i + 1) % n for i in range(n)]]}


def regular(elements, mul, gens):
    index = {e: i for i, e in enumerate(elements)}
    return {"degree": len(elements), "generators": [[index[mul(g, e)] for e in elements] for g in gens]}


def dicyclic12():
    # a^i x^j with a^6 = 1, x^2 = a^3, x a x^-1 = a^-1
    elements = [(i, j) for j in range(2) for i in range(6)]

    def mul(p, q):
        (i, j), (k, l) = p, q
        k = k if j == 0 else -k
        i, j = (i + k) % 6, j + l
        if j == 2:
            i, j = (i + 3) % 6, 0
        return (i, j)

    return regular(elements, mul, [(1, 0), (0, 1)])


def sl2_3():
    vectors = [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}

    def perm(m):
        return [index[((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3)] for x, y in vectors]

    return {"degree": 8, "generators": [perm([[1, 1], [0, 1]]), perm([[0, 2], [1, 0]])]}


CATALOG = {
    "Z2": cyclic(2),
    "Z3": cyclic(3),
    "Z4": cyclic(4),
    "Z6": cyclic(6),
    "Z8": cyclic(8),
    "Z2xZ2": {"degree": 4, "generators": [[1, 0, 3, 2], [2, 3, 0, 1]]},
    "S3": {"degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]},
    "D4": {"degree": 4, "generators": [[1, 2, 3, 0], [0, 3, 2, 1]]},
    "Q8": {"degree": 8, "generators": [[2, 3, 1, 0, 7, 6, 4, 5], [4, 5, 6, 7, 1, 0, 3, 2]]},
    "Dic12": dicyclic12(),
    "SL2_3": sl2_3(),
}

if __name__ == "__main__":
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "catalog.json"
    rows = [f'    "{name}": {json.dumps(CATALOG[name], sort_keys=True)}' for name in sorted(CATALOG)]
    out.write_text('{\n  "groups": {\n' + ",\n".join(rows) + "\n  }\n}\n")
