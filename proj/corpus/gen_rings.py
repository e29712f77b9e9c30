#!/usr/bin/env python3
"""Writes the hand-specified fusion rings of the corpus to corpus/rings/.

Rep(G) rings are emitted by the CLI instead (see README):
  fusionkit group corpus/groups/008_D4.json --emit-ring rep --out corpus/rings/rep_D4.json
and are re-rendered here in the shared layout.
"""
import itertools
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent / "rings"


def write(fname, name, labels, dual, prod, modular=False, profile="fusion", expect=None):
    """prod(i, j) -> dict k -> multiplicity."""
    n = []
    for i, j in itertools.product(range(len(labels)), repeat=2):
        for k, v in sorted(prod(i, j).items()):
            if v:
                n.append([i, j, k, v])
    doc = {"kind": "ring", "name": name, "rank": len(labels), "labels": labels,
           "dual": dual, "unit": 0, "profile": profile, "modular": modular, "N": n}
    if expect:
        doc["expect"] = expect
    (OUT / fname).write_text(render(doc))


def render(doc):
    """Key order of the format description; one N entry per line."""
    order = ["kind", "name", "rank", "labels", "dual", "unit", "profile", "modular", "expect"]
    lines = [f"  {json.dumps(k)}: {json.dumps(doc[k])}," for k in order if k in doc]
    entries = ",\n".join("    " + json.dumps(e) for e in doc["N"])
    return "{\n" + "\n".join(lines) + '\n  "N": [\n' + entries + "\n  ]\n}\n"


def tidy_emitted():
    """Re-renders rings written by the CLI in the same layout."""
    for path in sorted(OUT.glob("*.json")):
        path.write_text(render(json.loads(path.read_text())))


def pointed(fname, name, elements, op, inv, modular):
    idx = {g: a for a, g in enumerate(elements)}
    write(fname, name, [str(g) for g in elements], [idx[inv(g)] for g in elements],
          lambda i, j: {idx[op(elements[i], elements[j])]: 1}, modular)


def cyclic(n, modular):
    pointed(f"Z{n}.json", f"Z{n}", list(range(n)), lambda a, b: (a + b) % n,
            lambda a: (-a) % n, modular)


def tambara_yamagami(fname, name, elements, op, inv, modular=False):
    """Simples A + {m}: a.b = ab, a.m = m.a = m, m.m = sum of A."""
    a_count = len(elements)
    idx = {g: a for a, g in enumerate(elements)}
    m = a_count

    def prod(i, j):
        if i < m and j < m:
            return {idx[op(elements[i], elements[j])]: 1}
        if i == m and j == m:
            return {k: 1 for k in range(a_count)}
        return {m: 1}

    labels = [f"a{g}" for g in elements] + ["m"]
    write(fname, name, labels, [idx[inv(g)] for g in elements] + [m], prod, modular)


def main():
    OUT.mkdir(exist_ok=True)
    for n, modular in [(2, True), (3, True), (4, True), (5, True)]:
        cyclic(n, modular)

    v4 = [(0, 0), (1, 0), (0, 1), (1, 1)]
    add2 = lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)
    pointed("toric_code.json", "toric code", v4, add2, lambda a: a, True)

    # 1, psi, sigma
    ising = {(1, 1): {0: 1}, (1, 2): {2: 1}, (2, 1): {2: 1}, (2, 2): {0: 1, 1: 1}}
    write("ising.json", "Ising", ["1", "psi", "sigma"], [0, 1, 2],
          lambda i, j: {j: 1} if i == 0 else {i: 1} if j == 0 else ising[(i, j)], True)

    write("fibonacci.json", "Fibonacci", ["1", "tau"], [0, 1],
          lambda i, j: {0: 1, 1: 1} if i == j == 1 else {i + j: 1}, True,
          expect={"burnside": "fail", "harada.a": "fail", "harada.b": "fail"})

    tambara_yamagami("ty_Z2xZ2.json", "TY(Z2xZ2)", v4, add2, lambda a: a)
    tambara_yamagami("ty_Z3.json", "TY(Z3)", [0, 1, 2], lambda a, b: (a + b) % 3,
                     lambda a: (-a) % 3)
    tidy_emitted()


if __name__ == "__main__":
    main()
