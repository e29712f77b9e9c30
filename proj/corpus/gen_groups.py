#!/usr/bin/env python3
"""Regenerates corpus/groups/*.json: every group of order <= 24 plus a few
larger ones, each as left-regular permutation generators.

Groups are built from metacyclic extensions, semidirect products by a cyclic
group, and direct products; an invariant fingerprint is printed so that the
per-order counts can be compared against the known classification."""
import itertools
import json
import os
import sys
from collections import Counter


class Group:
    def __init__(self, name, elems, mul, gens):
        self.name, self.elems, self.mul, self.gens = name, elems, mul, gens
        self.index = {e: i for i, e in enumerate(elems)}

    @property
    def order(self):
        return len(self.elems)


def metacyclic(name, n, m, r, s=0):
    # <x, y | x^n, y^m = x^s, y x y^-1 = x^r>
    assert pow(r, m, n) == 1 % n and (r * s - s) % n == 0
    elems = [(a, b) for b in range(m) for a in range(n)]

    def mul(p, q):
        a, b = p
        c, d = q
        carry = s if b + d >= m else 0
        return ((a + pow(r, b, n) * c + carry) % n, (b + d) % m)

    gens = [(1 % n, 0), (0, 1 % m)]
    return Group(name, elems, mul, gens)


def cyclic(n):
    return metacyclic(f"Z{n}", n, 1, 1)


def direct(name, g, h):
    elems = [(a, b) for a in g.elems for b in h.elems]

    def mul(p, q):
        return (g.mul(p[0], q[0]), h.mul(p[1], q[1]))

    eg = identity(g)
    eh = identity(h)
    gens = [(x, eh) for x in g.gens] + [(eg, y) for y in h.gens]
    return Group(name, elems, mul, gens)


def semidirect(name, g, phi, m):
    # g x| Z_m where the generator of Z_m acts by the automorphism phi
    def act(k, x):
        for _ in range(k):
            x = phi(x)
        return x

    for x in g.elems:
        assert act(m, x) == x
    for x in g.elems:
        for y in g.elems:
            assert phi(g.mul(x, y)) == g.mul(phi(x), phi(y))
    elems = [(x, k) for k in range(m) for x in g.elems]

    def mul(p, q):
        return (g.mul(p[0], act(p[1], q[0])), (p[1] + q[1]) % m)

    e = identity(g)
    gens = [(x, 0) for x in g.gens] + [(e, 1 % m)]
    return Group(name, elems, mul, gens)


def perm_group(name, degree, gens):
    gens = [tuple(p) for p in gens]
    ident = tuple(range(degree))
    elems, frontier = [ident], [ident]
    seen = {ident}
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(x[g[i]] for i in range(degree))
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt

    def mul(p, q):
        return tuple(p[q[i]] for i in range(degree))

    return Group(name, elems, mul, gens)


def identity(g):
    for e in g.elems:
        if all(g.mul(e, x) == x for x in g.elems):
            return e
    raise AssertionError


def sl23():
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def perm(mat):
        (a, b), (c, d) = mat
        return [idx[((a * x + b * y) % 3, (c * x + d * y) % 3)] for (x, y) in vecs]

    return perm_group("SL2_3", 8, [perm(((1, 1), (0, 1))), perm(((0, 2), (1, 0)))])


def fingerprint(g):
    e = identity(g)
    inv = {x: next(y for y in g.elems if g.mul(x, y) == e) for x in g.elems}

    def order(x):
        k, y = 1, x
        while y != e:
            y, k = g.mul(y, x), k + 1
        return k

    orders = tuple(sorted(Counter(order(x) for x in g.elems).items()))
    seen, sizes = set(), []
    for x in g.elems:
        if x in seen:
            continue
        cls = {g.mul(g.mul(h, x), inv[h]) for h in g.elems}
        seen |= cls
        sizes.append(len(cls))
    comm = {g.mul(g.mul(inv[a], inv[b]), g.mul(a, b)) for a in g.elems for b in g.elems}
    sub = set(comm)
    while True:
        more = {g.mul(a, b) for a in sub for b in sub} - sub
        if not more:
            break
        sub |= more
    sq = Counter(g.mul(x, x) for x in g.elems)
    return (g.order, orders, tuple(sorted(sizes)), len(sub), tuple(sorted(sq.values())))


def regular_generators(g):
    out = []
    for s in g.gens:
        out.append([g.index[g.mul(s, x)] for x in g.elems])
    return out


def catalog():
    Z = cyclic
    D = lambda n: metacyclic(f"D{n}", n, 2, n - 1)
    Dic = lambda n: metacyclic(f"Dic{n}", 2 * n, 2, 2 * n - 1, n)
    gs = []
    gs.append(perm_group("trivial", 1, [[0]]))
    for n in range(2, 25):
        gs.append(Z(n))
    # abelian non-cyclic
    gs += [direct("Z2xZ2", Z(2), Z(2)), direct("Z4xZ2", Z(4), Z(2)),
           direct("Z2xZ2xZ2", direct("Z2xZ2", Z(2), Z(2)), Z(2)),
           direct("Z3xZ3", Z(3), Z(3)), direct("Z6xZ2", Z(6), Z(2)),
           direct("Z4xZ4", Z(4), Z(4)), direct("Z8xZ2", Z(8), Z(2)),
           direct("Z4xZ2xZ2", direct("Z4xZ2", Z(4), Z(2)), Z(2)),
           direct("Z2^4", direct("Z2xZ2xZ2", direct("Z2xZ2", Z(2), Z(2)), Z(2)), Z(2)),
           direct("Z6xZ3", Z(6), Z(3)), direct("Z10xZ2", Z(10), Z(2)),
           direct("Z12xZ2", Z(12), Z(2)),
           direct("Z6xZ2xZ2", direct("Z6xZ2", Z(6), Z(2)), Z(2))]
    # dihedral, dicyclic
    for n in range(3, 13):
        gs.append(D(n))
    gs.append(metacyclic("Q8", 4, 2, 3, 2))
    gs += [Dic(3), Dic(5), Dic(6), metacyclic("Q16", 8, 2, 7, 4)]
    S3 = D(3)
    S3.name = "S3"
    gs = [g for g in gs if g.name != "D3"] + [S3]
    A4 = perm_group("A4", 4, [[1, 2, 0, 3], [1, 0, 3, 2]])
    S4 = perm_group("S4", 4, [[1, 0, 2, 3], [1, 2, 3, 0]])
    D4, Q8 = D(4), metacyclic("Q8", 4, 2, 3, 2)
    # order 16
    gs += [metacyclic("SD16", 8, 2, 3), metacyclic("M16", 8, 2, 5),
           metacyclic("Z4sdZ4", 4, 4, 3),
           direct("D4xZ2", D4, Z(2)), direct("Q8xZ2", Q8, Z(2))]
    z4z2 = direct("Z4xZ2", Z(4), Z(2))
    # (Z4 x Z2) x| Z2 with a -> ab, b -> b
    gs.append(semidirect("Z4xZ2sdZ2", z4z2,
                         lambda x: (x[0], ((x[0][0] + x[1][0]) % 2, 0)), 2))
    # Pauli group: c -> c, x -> c^2 x
    gs.append(semidirect("Pauli", z4z2,
                         lambda x: (((x[0][0] + 2 * x[1][0]) % 4, 0), x[1]), 2))
    # order 18
    gs += [direct("S3xZ3", S3, Z(3)),
           semidirect("Z3xZ3sdZ2", direct("Z3xZ3", Z(3), Z(3)),
                      lambda x: (((-x[0][0]) % 3, 0), ((-x[1][0]) % 3, 0)), 2)]
    # order 20, 21
    gs += [metacyclic("F20", 5, 4, 2), metacyclic("Z7sdZ3", 7, 3, 2)]
    # order 24
    gs += [metacyclic("Z3sdZ8", 3, 8, 2), sl23(), direct("Z4xS3", Z(4), S3),
           direct("Z2xDic3", Z(2), Dic(3)),
           semidirect("Z3sdD4", direct("Z6xZ2", Z(6), Z(2)),
                      lambda x: (((-x[0][0]) % 6, 0), ((x[0][0] + x[1][0]) % 2, 0)), 2),
           direct("Z3xD4", Z(3), D4), direct("Z3xQ8", Z(3), Q8), S4,
           direct("Z2xA4", Z(2), A4),
           direct("Z2xZ2xS3", direct("Z2xZ2", Z(2), Z(2)), S3)]
    gs.append(A4)
    # larger extras
    gs.append(perm_group("A5", 5, [[1, 2, 0, 3, 4], [1, 2, 3, 4, 0]]))
    gs.append(perm_group("S5", 5, [[1, 0, 2, 3, 4], [1, 2, 3, 4, 0]]))
    gs.append(metacyclic("Heis27", 9, 3, 4))
    gs.append(semidirect("Heis27_exp3", direct("Z3xZ3", Z(3), Z(3)),
                         lambda x: (x[0], ((x[0][0] + x[1][0]) % 3, 0)), 3))
    return gs


EXPECTED = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1,
            12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5,
            21: 2, 22: 2, 23: 1, 24: 15}


def main():
    out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "groups")
    gs = catalog()
    seen = {}
    for g in gs:
        fp = fingerprint(g)
        if fp in seen:
            if seen[fp] != g.name:
                print(f"duplicate fingerprint: {g.name} ~ {seen[fp]}", file=sys.stderr)
            continue
        seen[fp] = g.name
    per_order = Counter(fp[0] for fp in seen)
    ok = True
    for n, k in EXPECTED.items():
        if per_order[n] != k:
            print(f"order {n}: have {per_order[n]}, expected {k}", file=sys.stderr)
            ok = False
    if not ok:
        sys.exit(1)
    os.makedirs(out, exist_ok=True)
    names = set(seen.values())
    for g in gs:
        if g.name not in names:
            continue
        names.discard(g.name)
        doc = {"kind": "group-generators", "name": g.name, "degree": g.order,
               "generators": regular_generators(g)}
        with open(os.path.join(out, f"{g.order:03d}_{g.name}.json"), "w") as fh:
            fh.write(json.dumps(doc, separators=(",", ":")) + "\n")
    print(f"wrote {len(seen)} groups")


if __name__ == "__main__":
    main()
