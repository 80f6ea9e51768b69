#!/usr/bin/env python3
"""Regenerate the bundled data/ catalog: small groups, their character tables,
and a few example input files for the CLI.

Scalar values are written in the power-basis form {"n": N, "c": [...]} with
coefficients reduced modulo the N-th cyclotomic polynomial (sympy does the
reduction), matching the loader's expectations exactly.
"""

import json
import os
from fractions import Fraction

import sympy

X = sympy.symbols("x")
ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def phi(n):
    return int(sympy.totient(n))


def frac_str(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rat(q):
    return {"n": 1, "c": [frac_str(q)]}


def root(n, k):
    """zeta_n^k as a reduced power-basis scalar."""
    if n == 1:
        return rat(1)
    p = sympy.Poly(sympy.cyclotomic_poly(n, X), X)
    r = sympy.Poly(X ** (k % n), X).rem(p)
    coeffs = list(reversed(r.all_coeffs()))
    coeffs += [0] * (phi(n) - len(coeffs))
    return {"n": n, "c": [frac_str(sympy.Rational(c)) for c in coeffs]}


def cyclic(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def direct(t1, t2):
    n1, n2 = len(t1), len(t2)
    out = [[0] * (n1 * n2) for _ in range(n1 * n2)]
    for a1 in range(n1):
        for a2 in range(n2):
            for b1 in range(n1):
                for b2 in range(n2):
                    out[a1 * n2 + a2][b1 * n2 + b2] = t1[a1][b1] * n2 + t2[a2][b2]
    return out


def s3_table():
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[v]] for v in range(3))] for q in perms] for p in perms]


def d4_table():
    # r^a s^b at index a + 4b; s r = r^{-1} s
    def mul(x, y):
        a, b = x % 4, x // 4
        c, d = y % 4, y // 4
        ra = (a + c) % 4 if b == 0 else (a - c) % 4
        return ra + 4 * ((b + d) % 2)

    return [[mul(i, j) for j in range(8)] for i in range(8)]


def q8_table():
    # 1, -1, i, -i, j, -j, k, -k
    names = [(1, ""), (-1, ""), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    index = {v: i for i, v in enumerate(names)}
    basic = {
        ("", ""): (1, ""), ("", "i"): (1, "i"), ("", "j"): (1, "j"), ("", "k"): (1, "k"),
        ("i", ""): (1, "i"), ("j", ""): (1, "j"), ("k", ""): (1, "k"),
        ("i", "i"): (-1, ""), ("j", "j"): (-1, ""), ("k", "k"): (-1, ""),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }

    def mul(x, y):
        s1, u1 = names[x]
        s2, u2 = names[y]
        s3, u3 = basic[(u1, u2)]
        return index[(s1 * s2 * s3, u3)]

    return [[mul(i, j) for j in range(8)] for i in range(8)]


def cyclic_chartable(n):
    return [[root(n, k * m) for m in range(n)] for k in range(n)]


def product_chartable(ns):
    """Characters of Z_{n1} x ... x Z_{nk} with index ordering matching direct()."""
    import itertools

    elems = list(itertools.product(*[range(n) for n in ns]))
    chars = list(itertools.product(*[range(n) for n in ns]))
    e = 1
    for n in ns:
        e = sympy.lcm(e, n)
    e = int(e)
    rows = []
    for c in chars:
        rows.append([root(e, sum(c[i] * g[i] * (e // ns[i]) for i in range(len(ns)))) for g in elems])
    return rows


def s3_chartable():
    # element order: e, (01), (02), (12), (012), (021)
    return [
        [rat(1)] * 6,
        [rat(1), rat(-1), rat(-1), rat(-1), rat(1), rat(1)],
        [rat(2), rat(0), rat(0), rat(0), rat(-1), rat(-1)],
    ]


def d4_chartable():
    # element order: e, r, r2, r3, s, rs, r2s, r3s
    return [
        [rat(1)] * 8,
        [rat(1), rat(1), rat(1), rat(1), rat(-1), rat(-1), rat(-1), rat(-1)],
        [rat(1), rat(-1), rat(1), rat(-1), rat(1), rat(-1), rat(1), rat(-1)],
        [rat(1), rat(-1), rat(1), rat(-1), rat(-1), rat(1), rat(-1), rat(1)],
        [rat(2), rat(0), rat(-2), rat(0), rat(0), rat(0), rat(0), rat(0)],
    ]


def q8_chartable():
    # element order: 1, -1, i, -i, j, -j, k, -k
    return [
        [rat(1)] * 8,
        [rat(1), rat(1), rat(1), rat(1), rat(-1), rat(-1), rat(-1), rat(-1)],
        [rat(1), rat(1), rat(-1), rat(-1), rat(1), rat(1), rat(-1), rat(-1)],
        [rat(1), rat(1), rat(-1), rat(-1), rat(-1), rat(-1), rat(1), rat(1)],
        [rat(2), rat(-2), rat(0), rat(0), rat(0), rat(0), rat(0), rat(0)],
    ]


def write(path, obj):
    full = os.path.join(ROOT, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w") as f:
        json.dump(obj, f, indent=2)
        f.write("\n")
    print("wrote", path)


def group_file(table):
    return {"order": len(table), "table": table}


def chartable_file(group_ref, rows):
    return {"group": group_ref, "rows": rows}


def main():
    groups = {}
    for n in range(1, 9):
        groups[f"z{n}"] = cyclic(n)
    groups["z2xz2"] = direct(cyclic(2), cyclic(2))
    groups["z2xz4"] = direct(cyclic(2), cyclic(4))
    groups["z2xz2xz2"] = direct(direct(cyclic(2), cyclic(2)), cyclic(2))
    groups["z3xz3"] = direct(cyclic(3), cyclic(3))
    groups["s3"] = s3_table()
    groups["d4"] = d4_table()
    groups["q8"] = q8_table()
    for name, table in groups.items():
        write(f"groups/{name}.json", group_file(table))

    tables = {}
    for n in range(1, 9):
        tables[f"z{n}"] = cyclic_chartable(n)
    tables["z2xz2"] = product_chartable([2, 2])
    tables["z2xz4"] = product_chartable([2, 4])
    tables["z2xz2xz2"] = product_chartable([2, 2, 2])
    tables["z3xz3"] = product_chartable([3, 3])
    tables["s3"] = s3_chartable()
    tables["d4"] = d4_chartable()
    tables["q8"] = q8_chartable()
    for name, rows in tables.items():
        write(f"chartables/{name}.json", chartable_file(f"groups/{name}.json", rows))

    # example inputs for the CLI walkthrough
    half, mhalf = Fraction(1, 2), Fraction(-1, 2)
    write("examples/r_u_z2.json", {
        "dim": 2, "rank": 2,
        "coeffs": [[0, rat(half)], [1, rat(half)], [2, rat(half)], [3, rat(mhalf)]],
    })
    write("examples/sign_module_z2.json", {
        "host_dim": 2, "dim": 1,
        "action": [[[rat(1)]], [[rat(-1)]]],
    })
    # the klein bicharacter beta(chi_{ab}, chi_{cd}) = (-1)^{a·d} in the
    # canonical character order (row-major over exponent tuples)
    beta = [[rat(1 if ((i // 2) * (j % 2)) % 2 == 0 else -1) for j in range(4)] for i in range(4)]
    write("examples/klein_bichar.json", {"subgroup": [0, 1, 2, 3], "beta": beta})
    # the z3xz3 analogue: beta(chi_a, chi_b) = zeta_3^{a1·b2}
    beta9 = [[root(3, (i // 3) * (j % 3)) for j in range(9)] for i in range(9)]
    write("examples/z3xz3_bichar.json", {"subgroup": list(range(9)), "beta": beta9})


if __name__ == "__main__":
    main()
