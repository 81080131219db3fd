#!/usr/bin/env python3
"""Regenerates the category preset files under data/presets/.

Group presets carry the multiplication table, generator matrices of every
irrep, and the conjugation unitaries C_p with conj(D_p(g)) = C_p D_{p^}(g) C_p*.
The loader re-verifies all of it, so this script is the single source of truth
for the shipped data.
"""

import cmath
import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "presets")


def pairs(mat):
    """Row-major flat list of [re, im] pairs."""
    flat = [x for row in mat for x in row]
    return [[complex(x).real, complex(x).imag] for x in flat]


def group_json(name, elements, mult, generators, irreps):
    """irreps: list of (name, dim, conj_name, conj_unitary, {gen_elem: matrix})."""
    return {
        "name": name,
        "backend": "group_rep",
        "order": len(elements),
        "elements": elements,  # informational
        "generators": generators,
        "mult_table": mult,
        "irreps": [
            {
                "name": nm,
                "dim": dim,
                "conjugate": conj,
                "conj_unitary": pairs(cu),
                "matrices": {str(g): pairs(m) for g, m in mats.items()},
            }
            for nm, dim, conj, cu, mats in irreps
        ],
    }


def cyclic(n):
    mult = [[(i + j) % n for j in range(n)] for i in range(n)]
    return mult


def write(name, doc):
    os.makedirs(OUT, exist_ok=True)
    path = os.path.join(OUT, name + ".json")
    with open(path, "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")
    print("wrote", path)


def make_z2():
    mult = cyclic(2)
    irreps = [
        ("triv", 1, "triv", [[1]], {1: [[1]]}),
        ("sgn", 1, "sgn", [[1]], {1: [[-1]]}),
    ]
    write("z2", group_json("z2", ["e", "g"], mult, [1], irreps))


def make_z3():
    z = cmath.exp(2j * cmath.pi / 3)
    mult = cyclic(3)
    irreps = [
        ("triv", 1, "triv", [[1]], {1: [[1]]}),
        ("chi1", 1, "chi2", [[1]], {1: [[z]]}),
        ("chi2", 1, "chi1", [[1]], {1: [[z ** 2]]}),
    ]
    write("z3", group_json("z3", ["e", "g", "g2"], mult, [1], irreps))


def perm_mult(perms):
    """Multiplication table for a list of permutations (tuples), p*q = p o q."""
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    mult = [[0] * n for _ in range(n)]
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            pq = tuple(p[q[k]] for k in range(len(p)))
            mult[i][j] = index[pq]
    return mult


def make_s3():
    e = (0, 1, 2)
    r = (1, 2, 0)
    r2 = (2, 0, 1)
    s = (1, 0, 2)
    elements = [e, r, r2, s]
    elements += [tuple(s[r[k]] for k in range(3)), tuple(s[r2[k]] for k in range(3))]
    names = ["e", "r", "r2", "s", "sr", "sr2"]
    mult = perm_mult(elements)
    z = cmath.exp(2j * cmath.pi / 3)
    swap = [[0, 1], [1, 0]]
    irreps = [
        ("triv", 1, "triv", [[1]], {1: [[1]], 3: [[1]]}),
        ("sgn", 1, "sgn", [[1]], {1: [[1]], 3: [[-1]]}),
        ("std", 2, "std", swap,
         {1: [[z, 0], [0, z.conjugate()]], 3: swap}),
    ]
    write("s3", group_json("s3", names, mult, [1, 3], irreps))


def make_d4():
    # r = 90 degree rotation, s = reflection; elements r^a s^b.
    elements = [(a, b) for b in range(2) for a in range(4)]  # (r-power, s-power)
    index = {el: i for i, el in enumerate(elements)}

    def mul(x, y):
        # (r^a s^b)(r^c s^d) = r^(a + c*(-1)^b) s^(b+d)
        a, b = x
        c, d = y
        return ((a + (c if b == 0 else -c)) % 4, (b + d) % 2)

    mult = [[index[mul(x, y)] for y in elements] for x in elements]
    names = ["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]
    gr, gs = index[(1, 0)], index[(0, 1)]
    swap = [[0, 1], [1, 0]]
    irreps = [
        ("triv", 1, "triv", [[1]], {gr: [[1]], gs: [[1]]}),
        ("x1", 1, "x1", [[1]], {gr: [[1]], gs: [[-1]]}),
        ("x2", 1, "x2", [[1]], {gr: [[-1]], gs: [[1]]}),
        ("x3", 1, "x3", [[1]], {gr: [[-1]], gs: [[-1]]}),
        ("e2", 2, "e2", swap,
         {gr: [[1j, 0], [0, -1j]], gs: swap}),
    ]
    write("d4", group_json("d4", names, mult, [gr, gs], irreps))


def make_q8():
    # Elements 1, -1, i, -i, j, -j, k, -k as (sign, axis) with axis 0=1,1=i,2=j,3=k.
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    table = {}  # quaternion unit products: axis x axis -> (sign, axis)
    for a in range(4):
        table[(0, a)] = (1, a)
        table[(a, 0)] = (1, a)
    table[(1, 1)] = (-1, 0)
    table[(2, 2)] = (-1, 0)
    table[(3, 3)] = (-1, 0)
    table[(1, 2)] = (1, 3)
    table[(2, 1)] = (-1, 3)
    table[(2, 3)] = (1, 1)
    table[(3, 2)] = (-1, 1)
    table[(3, 1)] = (1, 2)
    table[(1, 3)] = (-1, 2)

    def idx(sign, axis):
        return axis * 2 + (0 if sign == 1 else 1)

    elements = [(1 if i % 2 == 0 else -1, i // 2) for i in range(8)]
    mult = [[0] * 8 for _ in range(8)]
    for ii, (s1, a1) in enumerate(elements):
        for jj, (s2, a2) in enumerate(elements):
            s3, a3 = table[(a1, a2)]
            mult[ii][jj] = idx(s1 * s2 * s3, a3)

    gi, gj = idx(1, 1), idx(1, 2)
    Di = [[1j, 0], [0, -1j]]
    Dj = [[0, 1], [-1, 0]]
    irreps = [
        ("triv", 1, "triv", [[1]], {gi: [[1]], gj: [[1]]}),
        ("xi", 1, "xi", [[1]], {gi: [[1]], gj: [[-1]]}),
        ("xj", 1, "xj", [[1]], {gi: [[-1]], gj: [[1]]}),
        ("xk", 1, "xk", [[1]], {gi: [[-1]], gj: [[-1]]}),
        ("E", 2, "E", Dj, {gi: Di, gj: Dj}),
    ]
    write("q8", group_json("q8", names, mult, [gi, gj], irreps))


def make_pointed():
    for k in range(3):
        write("z3_omega%d" % k,
              {"name": "z3_omega%d" % k, "backend": "pointed_z3",
               "omega_index": k})


if __name__ == "__main__":
    make_z2()
    make_z3()
    make_s3()
    make_d4()
    make_q8()
    make_pointed()
