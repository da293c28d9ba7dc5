"""Combination, extraction and supports on set representations."""

import logging
from fractions import Fraction
from typing import Optional

from cohera.cones.lp import Constraint, Feasible, lp_feasible
from cohera.cones.operations import cone_intersect_subspace, dominated_by_subspace_member
from cohera.contrib.exceptions import Unsupported, ZeroGambleQuery
from cohera.desirability.models import (
    Assertions,
    EventSet,
    LexAtom,
    SetRep,
    SymbolicExtract,
    Top,
    Unit,
)
from cohera.desirability.operations import closure, leq, materialize, set_equal
from cohera.embeddings.saturation import saturate
from cohera.gambles.models import Event, Gamble, is_nonneg_nonzero
from cohera.partitions.models import Partition, QuestionLattice
from cohera.partitions.operations import measurability_equations, partition_leq

logger = logging.getLogger(__name__)


def _sure_loss_against_event(a: Assertions, event: Event) -> bool:
    """Some g in C(K) is strictly negative on the event, so D_S · C(K) is the top set."""
    gens = a.cone_generators
    rows = [tuple(g[w] for g in gens) for w in sorted(event.members)]
    result = lp_feasible(len(gens), inequalities=[Constraint(row, Fraction(-1)) for row in rows])
    return isinstance(result, Feasible)


def combine(d1: SetRep, d2: SetRep) -> SetRep:
    """C(D1 ∪ D2)."""
    d1.space.check(d2.space)
    d1, d2 = materialize(d1), materialize(d2)
    if d1.is_top or d2.is_top:
        return Top(d1.space)
    if isinstance(d1, Unit):
        return d2
    if isinstance(d2, Unit):
        return d1
    if isinstance(d1, Assertions) and isinstance(d2, Assertions):
        return closure(d1.space, d1.gambles + d2.gambles)
    if isinstance(d1, EventSet) and isinstance(d2, EventSet):
        return EventSet.lift(d1.event & d2.event)
    if isinstance(d1, LexAtom) or isinstance(d2, LexAtom):
        atom, other = (d1, d2) if isinstance(d1, LexAtom) else (d2, d1)
        return atom if leq(other, atom) else Top(d1.space)
    if leq(d1, d2):
        return d2
    if leq(d2, d1):
        return d1
    for event_set, assertions in ((d1, d2), (d2, d1)):
        if isinstance(event_set, EventSet) and isinstance(assertions, Assertions):
            if _sure_loss_against_event(assertions, event_set.event):
                return Top(d1.space)
    raise Unsupported(f'no closed form for {d1.describe()} · {d2.describe()}')


def extract_assertions(a: Assertions, px: Partition) -> SetRep:
    """C(C(K) ∩ L_x) through double description; L⁺ joins K before intersecting."""
    gens = cone_intersect_subspace(a.cone_generators, measurability_equations(px), a.space)
    logger.debug('extract %s on %s: %d generators', a.describe(), px.describe(), len(gens))
    return closure(a.space, gens)


def extract(d: SetRep, px: Partition, lazy: bool = False) -> SetRep:
    d.space.check(px.space)
    if d.is_top or isinstance(d, Unit):
        return d
    if isinstance(d, EventSet):
        return EventSet.lift(saturate(d.event, px))
    if isinstance(d, Assertions):
        return SymbolicExtract(d, px) if lazy else extract_assertions(d, px)
    if isinstance(d, LexAtom):
        if px.is_bottom:
            return Unit(d.space)
        if px.is_top:
            return d
        return SymbolicExtract(d, px)
    if isinstance(d, SymbolicExtract):
        if isinstance(d.inner, Assertions):
            return extract(materialize(d), px, lazy)
        if partition_leq(px, d.partition):
            return extract(d.inner, px)
    raise Unsupported(f'no extraction of {d.describe()} to {px.describe()}')


def extract_member_oracle(a: Assertions, px: Partition, f: Gamble) -> bool:
    """f ∈ ε_x(C(K)) decided by one LP: f in L⁺, or f dominates a measurable member."""
    a.space.check(f.space)
    if f.is_zero:
        raise ZeroGambleQuery('the zero gamble is never in a coherent set')
    if is_nonneg_nonzero(f):
        return True
    return dominated_by_subspace_member(a.cone_generators, measurability_equations(px), f).member


def supports(d: SetRep, lattice: QuestionLattice) -> list[str]:
    """Every question whose extraction reproduces ``d``, coarse to fine."""
    found = []
    for name in lattice.by_coarseness():
        if set_equal(extract(d, lattice.get(name)), d):
            found.append(name)
    return found


def find_support(d: SetRep, lattice: QuestionLattice) -> Optional[str]:
    for name in lattice.by_coarseness():
        if set_equal(extract(d, lattice.get(name)), d):
            return name
    return None
