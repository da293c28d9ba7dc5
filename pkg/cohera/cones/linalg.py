from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Vector = tuple[Fraction, ...]


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def axpy(alpha: Fraction, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    """alpha * x + y"""
    return tuple(alpha * a + b for a, b in zip(x, y))


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return [], []
    width = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        m[r] = [v / p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def canonical_ray(v: Sequence[Fraction]) -> Vector:
    """Positive rescaling of v to coprime integer coordinates."""
    if not any(v):
        return tuple(Fraction(0) for _ in v)
    scale = lcm(*(x.denominator for x in v))
    ints = [int(x * scale) for x in v]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    return tuple(Fraction(a // g) for a in ints)


def project_out(v: Sequence[Fraction], basis: Sequence[Sequence[Fraction]]) -> Vector:
    """Orthogonal projection of v onto the complement of span(basis); basis must be orthogonal."""
    out = tuple(v)
    for b in basis:
        nb = dot(b, b)
        if nb:
            out = axpy(-dot(out, b) / nb, b, out)
    return out


def orthogonalize(vectors: Sequence[Sequence[Fraction]]) -> list[Vector]:
    basis: list[Vector] = []
    for v in vectors:
        w = project_out(v, basis)
        if any(w):
            basis.append(w)
    return basis
