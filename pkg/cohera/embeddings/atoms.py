"""Lexicographic atoms, local atoms and the atom partitions At_x.

Sets of atoms are events over ``family.atom_space``, whose worlds are the atoms,
so the saturation machinery for events applies to them unchanged.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Optional

from cohera.contrib.exceptions import check_limit
from cohera.desirability.models import LexAtom, SetRep, SymbolicExtract, Unit
from cohera.desirability.operations import leq
from cohera.embeddings.saturation import saturate
from cohera.gambles.models import Event, PossibilitySpace, make_space
from cohera.partitions.models import Partition, QuestionLattice
from cohera.partitions.operations import induced_block_order

ATOMS_MAX_SIZE = 8


@dataclass(frozen=True)
class LexAtomFamily:
    space: PossibilitySpace = field(repr=False)
    atoms: tuple[LexAtom, ...]

    @cached_property
    def atom_space(self) -> PossibilitySpace:
        return make_space(a.describe() for a in self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def select(self, atoms: Iterable[LexAtom]) -> Event:
        index = {a: i for i, a in enumerate(self.atoms)}
        return Event(self.atom_space, frozenset(index[a] for a in atoms))

    def members(self, chosen: Event) -> list[LexAtom]:
        return [self.atoms[i] for i in sorted(chosen.members)]


def enum_lex_atoms(space: PossibilitySpace) -> LexAtomFamily:
    check_limit('atoms', len(space), ATOMS_MAX_SIZE)
    return LexAtomFamily(space, tuple(LexAtom(space, p) for p in permutations(range(len(space)))))


def extract_atom(atom: LexAtom, px: Partition) -> SetRep:
    """The local atom ε_x(M_π), kept with its induced block order.

    The bottom question leaves L⁺ and the top question leaves the atom itself.
    """
    atom.space.check(px.space)
    if px.is_bottom:
        return Unit(atom.space)
    if px.is_top:
        return atom
    return SymbolicExtract(atom, px)


def atom_equiv(m1: LexAtom, m2: LexAtom, px: Partition) -> bool:
    return induced_block_order(m1.order, px) == induced_block_order(m2.order, px)


def at_of(d: SetRep, family: LexAtomFamily) -> Event:
    """The atoms of the family lying above ``d``."""
    family.space.check(d.space)
    if d.is_top:
        return Event.empty(family.atom_space)
    return family.select(m for m in family.atoms if leq(d, m))


def atom_partition(px: Partition, family: LexAtomFamily) -> Partition:
    family.space.check(px.space)
    labels = [induced_block_order(m.order, px) for m in family.atoms]
    return Partition.from_labels(family.atom_space, labels)


def atom_saturate(chosen: Event, px: Partition, family: LexAtomFamily) -> Event:
    return saturate(chosen, atom_partition(px, family))


def in_AtQ(chosen: Event, lattice: QuestionLattice, family: LexAtomFamily) -> Optional[str]:
    for name in lattice.by_coarseness():
        if atom_saturate(chosen, lattice.get(name), family) == chosen:
            return name
    return None
