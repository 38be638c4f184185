#!/usr/bin/env python3
"""Reference QK multiplication table for Fl(1,n-1), written as golden JSON.

Direct sympy transcription of the reference iteration: the h1/h2 operator
matrices and the recurrences building every O_{k,p} from them. Independent
of the C++ sources; used only to produce tests/data/table_n*.json.
"""
import argparse
import json
import math

from sympy import Poly, Symbol, eye, zeros

q1 = Symbol("q1")
q2 = Symbol("q2")


def coeffij(k, n):
    i = math.ceil(k / (n - 1))
    if k - (i - 1) * (n - 1) < i:
        j = k - (i - 1) * (n - 1)
    else:
        j = k + 1 - (i - 1) * (n - 1)
    return i, j


def idx(i, j, n):
    t = (i - 1) * (n - 1) + j - 1 if j > i else (i - 1) * (n - 1) + j
    return t - 1


def h1(n):
    m = zeros(n * (n - 1))
    m[idx(n - 1, n, n), idx(1, n, n)] = q1
    m[idx(n, 1, n), idx(1, n, n)] = q1 * q2
    m[idx(n - 1, 1, n), idx(1, n, n)] = -q1 * q2
    for p in range(2, n):
        m[idx(n, p, n), idx(1, p, n)] = q1
    m[idx(1, 2, n), idx(2, 1, n)] = 1
    m[idx(n, 1, n), idx(2, 1, n)] = q1
    m[idx(n, 2, n), idx(2, 1, n)] = -q1
    for p in range(2, n):
        m[idx(p - 1, p, n), idx(p + 1, p, n)] = 1
        m[idx(p, p + 1, n), idx(p + 1, p, n)] = 1
        m[idx(p - 1, p + 1, n), idx(p + 1, p, n)] = -1
    for k in range(2, n + 1):
        for p in range(1, n + 1):
            if k != p + 1 and k != p:
                m[idx(k - 1, p, n), idx(k, p, n)] = 1
    return m


def h2(n):
    m = zeros(n * (n - 1))
    m[idx(1, 2, n), idx(1, n, n)] = q2
    m[idx(n, 1, n), idx(1, n, n)] = q1 * q2
    m[idx(n, 2, n), idx(1, n, n)] = -q1 * q2
    for k in range(2, n):
        m[idx(k, 1, n), idx(k, n, n)] = q2
    m[idx(n - 1, n, n), idx(n, n - 1, n)] = 1
    m[idx(n, 1, n), idx(n, n - 1, n)] = q2
    m[idx(n - 1, 1, n), idx(n, n - 1, n)] = -q2
    for p in range(1, n - 1):
        m[idx(p, p + 1, n), idx(p + 1, p, n)] = 1
        m[idx(p + 1, p + 2, n), idx(p + 1, p, n)] = 1
        m[idx(p, p + 2, n), idx(p + 1, p, n)] = -1
    for p in range(1, n):
        for k in range(1, n + 1):
            if k != p + 1 and k != p:
                m[idx(k, p + 1, n), idx(k, p, n)] = 1
    return m


def operators(n):
    size = n * (n - 1)
    O = [None] * size
    O[idx(n, 1, n)] = eye(size)
    a = h1(n)
    b = h2(n)
    J = b - eye(size)
    for k in range(1, n - 1):
        O[idx(n - k, 1, n)] = a * O[idx(n - k + 1, 1, n)]
    for k in range(2, n + 1):
        for p in range(2, k):
            O[idx(k, p, n)] = b * O[idx(k, p - 1, n)]
    O[idx(1, 2, n)] = a * O[idx(2, 1, n)] + q1 * J
    for p in range(2, n):
        O[idx(p, p + 1, n)] = a * O[idx(p + 1, p, n)] + J * O[idx(p - 1, p, n)]
    for p in range(3, n + 1):
        for k in range(2, p):
            O[idx(p - k, p, n)] = a * O[idx(p - k + 1, p, n)]
    return O


def poly_terms(expr):
    if expr == 0:
        return []
    p = Poly(expr.expand(), q1, q2)
    terms = [(int(e[0]), int(e[1]), int(c)) for e, c in p.terms() if c != 0]
    return [{"d1": d1, "d2": d2, "coeff": c} for d1, d2, c in sorted(terms)]


def table_json(n):
    O = operators(n)
    size = n * (n - 1)
    entries = []
    for a in range(size):
        for b in range(size):
            for c in range(size):
                terms = poly_terms(O[a][c, b])
                if terms:
                    entries.append({
                        "u": list(coeffij(a + 1, n)),
                        "v": list(coeffij(b + 1, n)),
                        "w": list(coeffij(c + 1, n)),
                        "poly": terms,
                    })
    return {"n": n, "entries": entries}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n", type=int)
    parser.add_argument("out")
    args = parser.parse_args()
    with open(args.out, "w") as f:
        json.dump(table_json(args.n), f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
