"""Conversions between the two descriptions of a polyhedral cone.

cddlib computes the generators of ``{x : <a, x> >= 0 for every normal a}`` as a
lineality space plus rays. Output is put in a canonical form: the lineality
basis in reduced row echelon form, rays projected orthogonally off it, every
vector a coprime integer ray, lines listed as +/- pairs, all sorted.
"""

import logging
from fractions import Fraction
from typing import Iterable, Sequence

import cdd

from cohera.cones.linalg import Vector, canonical_ray, orthogonalize, project_out, rref
from cohera.cones.lp import NUMBER_TYPE
from cohera.gambles.models import Gamble, PossibilitySpace

logger = logging.getLogger(__name__)


def _neg(v: Sequence[Fraction]) -> Vector:
    return tuple(-x for x in v)


def extreme_rays(dim: int, normals: Iterable[Sequence[Fraction]]) -> tuple[list[Vector], list[Vector]]:
    """Rays and lineality generators of ``{x : <a, x> >= 0 for every a in normals}``."""
    rows = [[0] + list(a) for a in normals]
    if not rows:
        rows = [[0] * (dim + 1)]
    matrix = cdd.Matrix(rows, number_type=NUMBER_TYPE)
    matrix.rep_type = cdd.RepType.INEQUALITY
    generators = cdd.Polyhedron(matrix).get_generators()

    rays: list[Vector] = []
    lineality: list[Vector] = []
    for i in range(generators.row_size):
        row = generators[i]
        # the apex shows up as a vertex
        if row[0] != 0:
            continue
        v = tuple(Fraction(x) for x in row[1:])
        if not any(v):
            continue
        (lineality if i in generators.lin_set else rays).append(v)

    logger.debug('double description: %d rays, lineality %d, dim %d', len(rays), len(lineality), dim)
    return rays, lineality


def canonical_generators(dim: int, normals: Iterable[Sequence[Fraction]]) -> list[Vector]:
    rays, lineality = extreme_rays(dim, normals)
    basis, _ = rref(lineality)
    lines = [canonical_ray(row) for row in basis]
    ortho = orthogonalize(lines)
    out = set()
    for r in rays:
        reduced = canonical_ray(project_out(r, ortho))
        if any(reduced):
            out.add(reduced)
    for l in lines:
        out.add(l)
        out.add(_neg(l))
    return sorted(out)


def h_to_v(space: PossibilitySpace, halfspaces: Iterable[Gamble]) -> list[Gamble]:
    """Generators of ``{f : <n, f> >= 0 for all normals n}``; lines appear as +/- pairs."""
    return [Gamble(space, v) for v in canonical_generators(len(space), (h.values for h in halfspaces))]


def v_to_h(space: PossibilitySpace, gens: Iterable[Gamble]) -> list[Gamble]:
    """Normals of the closed cone spanned by ``gens``.

    The normals of cone(G) generate its dual ``{n : <n, g> >= 0 for g in G}``, so this
    is the same conversion run on the generators read as halfspaces.
    """
    return [Gamble(space, v) for v in canonical_generators(len(space), (g.values for g in gens))]
