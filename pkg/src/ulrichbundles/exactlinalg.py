"""Exact linear algebra helpers: fraction-free rank, small rational solves,
and binary-form gcd.

Rank uses Bareiss (fraction-free Gaussian) elimination over the integers,
so every intermediate value is a minor of the input matrix and all
divisions are exact.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def integer_rows(rows):
    """Clear denominators row by row (row scaling preserves rank)."""
    out = []
    for row in rows:
        if any(isinstance(x, Fraction) for x in row):
            denom = 1
            for x in row:
                if isinstance(x, Fraction):
                    denom = denom * x.denominator // gcd(denom, x.denominator)
            out.append([int(x * denom) for x in row])
        else:
            out.append([int(x) for x in row])
    return out


def rank(rows) -> int:
    """Exact rank of a matrix with integer or Fraction entries."""
    m = [r for r in integer_rows(rows) if any(r)]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rk = 0
    prev = 1
    for col in range(ncols):
        if rk == nrows:
            break
        # smallest nonzero pivot keeps the Bareiss intermediates small
        piv_row = None
        for i in range(rk, nrows):
            v = m[i][col]
            if v and (piv_row is None or abs(v) < abs(m[piv_row][col])):
                piv_row = i
        if piv_row is None:
            continue
        if piv_row != rk:
            m[rk], m[piv_row] = m[piv_row], m[rk]
        piv = m[rk][col]
        pivot_row = m[rk]
        for i in range(rk + 1, nrows):
            row = m[i]
            factor = row[col]
            if factor:
                for j in range(col + 1, ncols):
                    row[j] = (piv * row[j] - factor * pivot_row[j]) // prev
                row[col] = 0
            elif prev != 1 or piv != 1:
                for j in range(col + 1, ncols):
                    row[j] = piv * row[j] // prev
        prev = piv
        rk += 1
    return rk


def solve_square(matrix, rhs):
    """Solve a small square rational system exactly; None if singular.

    Used for hyperplane-arrangement vertices, so dimensions stay tiny.
    """
    n = len(matrix)
    m = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])]
         for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]


# --------------------------------------------------------------------------
# univariate / binary-form utilities (surjectivity certificates)
# --------------------------------------------------------------------------

def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return out


def poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def poly_gcd(p, q):
    """Monic gcd of univariate rational polynomials (coeff lists, low first)."""
    a = poly_trim([Fraction(x) for x in p])
    b = poly_trim([Fraction(x) for x in q])
    while b:
        # remainder of a by b
        a = a[:]
        while len(a) >= len(b) and a:
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] -= f * c
            poly_trim(a)
        a, b = b, a
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def binary_det(entries):
    """Determinant of a square matrix whose entries are binary linear forms
    c*v0 + d*v1, given as pairs (c, d).  Returns the coefficient list of the
    resulting form in v1 (degree = matrix size), lowest power first."""
    n = len(entries)
    if n == 0:
        return [Fraction(1)]
    if n == 1:
        c, d = entries[0][0]
        return [Fraction(c), Fraction(d)]
    total = [Fraction(0)] * (n + 1)
    for j in range(n):
        c, d = entries[0][j]
        if not c and not d:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in entries[1:]]
        sub = binary_det(minor)
        term = poly_mul([Fraction(c), Fraction(d)], sub)
        sign = -1 if j % 2 else 1
        for i, v in enumerate(term):
            total[i] += sign * v
    return total
