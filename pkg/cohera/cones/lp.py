"""Exact linear programs solved by cddlib in rational arithmetic.

The criss-cross method pivots on smallest indices, so it terminates without a
floating-point pre-pass.

Variables are nonnegative. Constraints are equalities ``a . x = b`` and
inequalities ``a . x <= b``. The optional objective is maximized.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import cdd

from cohera.contrib.exceptions import CoheraError, DimensionMismatch

logger = logging.getLogger(__name__)

NUMBER_TYPE = 'fraction'

Row = tuple[Fraction, ...]

_INFEASIBLE = {
    cdd.LPStatusType.INCONSISTENT,
    cdd.LPStatusType.STRUC_INCONSISTENT,
    cdd.LPStatusType.DUAL_UNBOUNDED,
}
_UNBOUNDED = {
    cdd.LPStatusType.DUAL_INCONSISTENT,
    cdd.LPStatusType.STRUC_DUAL_INCONSISTENT,
    cdd.LPStatusType.UNBOUNDED,
}


@dataclass(frozen=True)
class Constraint:
    coefficients: Row
    rhs: Fraction

    @classmethod
    def of(cls, coefficients: Sequence, rhs=0) -> 'Constraint':
        return cls(tuple(Fraction(c) for c in coefficients), Fraction(rhs))


@dataclass(frozen=True)
class Infeasible:
    feasible = False


@dataclass(frozen=True)
class Feasible:
    point: Row
    value: Optional[Fraction] = None
    feasible = True


@dataclass(frozen=True)
class Unbounded:
    feasible = True


LpResult = Union[Infeasible, Feasible, Unbounded]


def constraint_matrix(
    n_vars: int, equalities: Sequence[Constraint], inequalities: Sequence[Constraint]
) -> cdd.Matrix:
    """H-representation ``[b, -a]`` of the program, nonnegativity rows first.

    An equality enters as the pair of opposite inequalities.
    """
    rows = [[0] + [int(i == j) for i in range(n_vars)] for j in range(n_vars)]
    for con in inequalities:
        rows.append([con.rhs] + [-a for a in con.coefficients])
    for con in equalities:
        rows.append([con.rhs] + [-a for a in con.coefficients])
        rows.append([-con.rhs] + list(con.coefficients))
    matrix = cdd.Matrix(rows, number_type=NUMBER_TYPE)
    matrix.rep_type = cdd.RepType.INEQUALITY
    return matrix


def _solve(matrix: cdd.Matrix, costs: Sequence) -> cdd.LinProg:
    matrix.obj_type = cdd.LPObjType.MAX
    matrix.obj_func = [0] + list(costs)
    linprog = cdd.LinProg(matrix)
    linprog.solve(solver=cdd.LPSolverType.CRISS_CROSS)
    return linprog


def lp_feasible(
    n_vars: int,
    equalities: Sequence[Constraint] = (),
    inequalities: Sequence[Constraint] = (),
    objective: Optional[Sequence] = None,
) -> LpResult:
    for con in list(equalities) + list(inequalities):
        if len(con.coefficients) != n_vars:
            raise DimensionMismatch(
                f'constraint has {len(con.coefficients)} coefficients for {n_vars} variables'
            )
    if objective is not None and len(objective) != n_vars:
        raise DimensionMismatch(f'objective has {len(objective)} coefficients for {n_vars} variables')

    if n_vars == 0:
        if all(con.rhs == 0 for con in equalities) and all(con.rhs >= 0 for con in inequalities):
            return Feasible((), None if objective is None else Fraction(0))
        return Infeasible()

    matrix = constraint_matrix(n_vars, equalities, inequalities)
    costs = [0] * n_vars if objective is None else [Fraction(c) for c in objective]
    linprog = _solve(matrix, costs)

    status = linprog.status
    if status == cdd.LPStatusType.OPTIMAL:
        point = tuple(Fraction(v) for v in linprog.primal_solution)
        value = None if objective is None else Fraction(linprog.obj_value)
        return Feasible(point, value)
    if status in _INFEASIBLE:
        logger.debug('infeasible program (%d vars, %d rows)', n_vars, matrix.row_size)
        return Infeasible()
    if status in _UNBOUNDED:
        # a dual without solutions also fits an empty primal
        if _solve(matrix, [0] * n_vars).status != cdd.LPStatusType.OPTIMAL:
            logger.debug('infeasible program with infeasible dual (%d vars)', n_vars)
            return Infeasible()
        logger.debug('unbounded program (%d vars)', n_vars)
        return Unbounded()
    raise CoheraError(f'linear program left undecided (status {status})')
