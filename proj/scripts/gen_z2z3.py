#!/usr/bin/env python3
"""Generate a virtually free presentation of Z/2 * Z/3.

The free normal subgroup is the cartesian subgroup K = ker(Z/2*Z/3 -> Z/2 x Z/3),
freely generated by x = [a,b] and y = [a,b^2]. Representatives are a^i b^j.
Rule words are found by matching matrices in the faithful PSL(2,Z) model.
"""
import itertools
import json
import sys

A = ((0, -1), (1, 0))
B = ((0, -1), (1, 1))
I = ((1, 0), (0, 1))


def mul(p, q):
    return tuple(tuple(sum(p[i][k] * q[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def canon(m):
    flat = [m[0][0], m[0][1], m[1][0], m[1][1]]
    for v in flat:
        if v != 0:
            if v < 0:
                m = tuple(tuple(-e for e in row) for row in m)
            break
    return m


def word(*ms):
    r = I
    for m in ms:
        r = mul(r, m)
    return canon(r)


B2 = mul(B, B)
# (matrix, abelian class (i mod 2, j mod 3))
reps = {
    "1": (I, (0, 0)),
    "a": (canon(A), (1, 0)),
    "b": (canon(B), (0, 1)),
    "b2": (canon(B2), (0, 2)),
    "ab": (word(A, B), (1, 1)),
    "ab2": (word(A, B2), (1, 2)),
}
X = word(A, B, A, B2)  # [a,b]
Y = word(A, B2, A, B)  # [a,b^2]
XI = word(B, A, B2, A)
YI = word(B2, A, B, A)
free = {"x": X, "x^-": XI, "y": Y, "y^-": YI}
inv = {"x": "x^-", "x^-": "x", "y": "y^-", "y^-": "y"}


def reduced_words(maxlen):
    yield ()
    for n in range(1, maxlen + 1):
        for w in itertools.product(free.keys(), repeat=n):
            if any(inv[w[i]] == w[i + 1] for i in range(n - 1)):
                continue
            yield w


table = {}
for w in reduced_words(6):
    m = word(*[free[c] for c in w])
    table.setdefault(m, list(w))

rules = []
letters = list(free.keys()) + [s for s in reps if s != "1"]
for r in reps:
    if r == "1":
        continue
    rm, rc = reps[r]
    for c in letters:
        if c in free:
            cm, cc = free[c], (0, 0)
        else:
            cm, cc = reps[c]
        m = canon(mul(rm, cm))
        cls = ((rc[0] + cc[0]) % 2, (rc[1] + cc[1]) % 3)
        s = next(k for k, v in reps.items() if v[1] == cls)
        sm = reps[s][0]
        # h = m * s^-1, s^-1 computed as adjugate (det 1)
        sinv = ((sm[1][1], -sm[0][1]), (-sm[1][0], sm[0][0]))
        h = canon(mul(m, sinv))
        if h not in table:
            sys.exit(f"no free word for {r} {c}")
        rules.append({"r": r, "a": c, "word": table[h], "rep": s})

pres = {"X": ["x", "y"], "S": list(reps.keys()), "rules": rules}
json.dump(pres, sys.stdout, indent=1)
print()
