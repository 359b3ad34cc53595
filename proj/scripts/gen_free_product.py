#!/usr/bin/env python3
"""Write a word-problem grammar for a free product of finite cyclic groups.

Usage: gen_free_product.py NAME:ORDER [NAME:ORDER ...]

Factor NAME of order n contributes letters NAME, NAME2, ..., NAME<n-1>
standing for the powers 1..n-1 of its generator. A nonempty trivial word
splits as h1 u1 h2 u2 ... hk uk v where h1..hk are letters of one factor
with product 1 and every ui and v is trivial, which gives the productions

    S      -> eps | B_i_0 S
    B_i_g  -> h S           (h has value g)
    B_i_g  -> B_i_f h S     (f + value(h) = g mod n)
"""
import json
import sys


def letter(name, power):
    return name if power == 1 else f"{name}{power}"


def main(argv):
    factors = []
    for arg in argv:
        name, order = arg.split(":")
        factors.append((name, int(order)))
    sigma, involution, prods = [], [], [{"lhs": "S", "rhs": []}]
    variables = ["S"]
    for name, n in factors:
        letters = [(letter(name, p), p) for p in range(1, n)]
        sigma += [l for l, _ in letters]
        for p in range(1, n):
            q = n - p
            if p <= q:
                involution.append([letter(name, p), letter(name, q)])
        b = [f"B_{name}_{g}" for g in range(n)]
        variables += b
        prods.append({"lhs": "S", "rhs": [b[0], "S"]})
        for g in range(n):
            for l, p in letters:
                if p == g:
                    prods.append({"lhs": b[g], "rhs": [l, "S"]})
                prods.append({"lhs": b[g], "rhs": [b[(g - p) % n], l, "S"]})
    doc = {"V": variables, "Sigma": sigma, "start": "S", "prods": prods, "involution": involution}
    json.dump(doc, sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main(sys.argv[1:])
