from fractions import Fraction
from typing import Optional, Sequence

from cohera.cones.double_description import h_to_v, v_to_h
from cohera.cones.lp import Constraint, Feasible, Unbounded, lp_feasible
from cohera.cones.models import LpWitness, MembershipResult
from cohera.contrib.exceptions import ZeroQueriedHere
from cohera.gambles.models import Gamble, PossibilitySpace


def _check_spaces(space: PossibilitySpace, gambles: Sequence[Gamble]) -> None:
    for g in gambles:
        space.check(g.space)


def _combination_rows(gens: Sequence[Gamble], dim: int) -> list[tuple[Fraction, ...]]:
    return [tuple(g[w] for g in gens) for w in range(dim)]


def cone_member(gens: Sequence[Gamble], f: Gamble) -> MembershipResult:
    """f = sum_j lambda_j g_j with lambda >= 0."""
    _check_spaces(f.space, gens)
    if f.is_zero:
        raise ZeroQueriedHere('the zero gamble is decided by zero_in_posi')
    if not gens:
        return MembershipResult(False)
    rows = _combination_rows(gens, len(f))
    result = lp_feasible(
        len(gens),
        equalities=[Constraint(row, f[w]) for w, row in enumerate(rows)],
    )
    if isinstance(result, Feasible):
        return MembershipResult(True, LpWitness.of(result.point))
    return MembershipResult(False)


def zero_in_posi(gens: Sequence[Gamble]) -> MembershipResult:
    """Some convex combination of gens (weights summing to 1) vanishes."""
    if not gens:
        return MembershipResult(False)
    space = gens[0].space
    _check_spaces(space, gens)
    rows = _combination_rows(gens, len(space))
    equalities = [Constraint(row, 0) for row in rows]
    equalities.append(Constraint((Fraction(1),) * len(gens), 1))
    result = lp_feasible(len(gens), equalities=equalities)
    if isinstance(result, Feasible):
        return MembershipResult(True, LpWitness.of(result.point))
    return MembershipResult(False)


def nonpositive_combination(gens: Sequence[Gamble]) -> MembershipResult:
    """Some convex combination of gens is <= 0 pointwise."""
    if not gens:
        return MembershipResult(False)
    space = gens[0].space
    _check_spaces(space, gens)
    rows = _combination_rows(gens, len(space))
    result = lp_feasible(
        len(gens),
        equalities=[Constraint((Fraction(1),) * len(gens), 1)],
        inequalities=[Constraint(row, 0) for row in rows],
    )
    if isinstance(result, Feasible):
        return MembershipResult(True, LpWitness.of(result.point))
    return MembershipResult(False)


def cone_intersect_subspace(gens: Sequence[Gamble], equations: Sequence[Gamble],
                            space: Optional[PossibilitySpace] = None) -> list[Gamble]:
    """Generators of ``{f in cone(gens) : <e, f> = 0 for every e in equations}``."""
    space = space or (gens[0].space if gens else equations[0].space)
    _check_spaces(space, list(gens) + list(equations))
    normals = v_to_h(space, gens)
    normals += list(equations) + [-e for e in equations]
    return [g for g in h_to_v(space, normals) if not g.is_zero]


def dominated_by_subspace_member(gens: Sequence[Gamble], equations: Sequence[Gamble],
                                 f: Gamble) -> MembershipResult:
    """Some g in cone(gens) with <e, g> = 0 for all equations and g <= f.

    The witness holds the coefficients of g over ``gens``.
    """
    _check_spaces(f.space, list(gens) + list(equations))
    if not gens:
        return MembershipResult(False)
    rows = _combination_rows(gens, len(f))
    equalities = [
        Constraint(tuple(sum((e[w] * row[j] for w, row in enumerate(rows)), Fraction(0))
                         for j in range(len(gens))), 0)
        for e in equations
    ]
    inequalities = [Constraint(row, f[w]) for w, row in enumerate(rows)]
    result = lp_feasible(len(gens), equalities=equalities, inequalities=inequalities)
    if isinstance(result, Feasible):
        return MembershipResult(True, LpWitness.of(result.point))
    return MembershipResult(False)


def ray_family_unbounded(gens: Sequence[Gamble], base: Gamble, direction: Gamble) -> bool:
    """Whether ``base + delta * direction`` lies in cone(gens) for every delta >= 0.

    Solved as one LP maximizing delta; membership along the family is convex, so a
    finite optimum means some larger delta falls outside.
    """
    _check_spaces(base.space, list(gens) + [direction])
    rows = _combination_rows(gens, len(base))
    n = len(gens) + 1
    equalities = [
        Constraint(tuple(row) + (-direction[w],), base[w])
        for w, row in enumerate(rows)
    ]
    objective = [Fraction(0)] * len(gens) + [Fraction(1)]
    result = lp_feasible(n, equalities=equalities, objective=objective)
    return isinstance(result, Unbounded)


def singleton_indicators(space: PossibilitySpace) -> list[Gamble]:
    return [Gamble.indicator(space, [w]) for w in range(len(space))]

