"""Writes a_ell.txt: a_l(w, z) by enumeration over all label pairs on one l-cycle."""
from collections import defaultdict
from fractions import Fraction as F
import itertools

WEIGHTS = [
    (F(1), F(1), F(1), F(1)),
    (F(1, 2), F(1, 3), F(1, 5), F(1, 7)),
    (F(3, 4), F(1, 10), F(1, 20), F(1, 10)),
]


def a_ell(ell, w):
    w00, w01, w10, w11 = w
    weight = {(0, 0): w00, (0, 1): w01, (1, 0): w10, (1, 1): w11}
    poly = defaultdict(F)
    for g in itertools.product((0, 1), repeat=ell):
        shifted = g[1:] + g[:1]
        for h in itertools.product((0, 1), repeat=ell):
            term = F(1)
            for k in range(ell):
                term *= weight[(g[k], h[k])]
            before = sum(1 for k in range(ell) if g[k] and h[k])
            after = sum(1 for k in range(ell) if shifted[k] and h[k])
            poly[before - after] += term
    return " ".join(f"{e}:{c.numerator}/{c.denominator}" for e, c in sorted(poly.items()) if c != 0)


with open("a_ell.txt", "w") as out:
    for w in WEIGHTS:
        for ell in range(1, 9):
            ws = ",".join(f"{x.numerator}/{x.denominator}" for x in w)
            out.write(f"{ell} {ws} {a_ell(ell, w)}\n")
