from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from cohera.gambles.models import Gamble, PossibilitySpace


@dataclass(frozen=True)
class LpWitness:
    coefficients: dict[int, Fraction]

    @classmethod
    def of(cls, point: Sequence[Fraction]) -> 'LpWitness':
        return cls({j: v for j, v in enumerate(point) if v})

    def combine(self, gens: Sequence[Gamble]) -> Gamble:
        space = gens[0].space
        total = Gamble.zero(space)
        for j, c in self.coefficients.items():
            total = total + c * gens[j]
        return total


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    witness: Optional[LpWitness] = None

    def __bool__(self) -> bool:
        return self.member


@dataclass(frozen=True)
class Cone:
    """A polyhedral cone with its generators and, once computed, its normals."""

    space: PossibilitySpace = field(repr=False)
    generators: tuple[Gamble, ...]
    halfspaces: Optional[tuple[Gamble, ...]] = None

    def __post_init__(self):
        if any(g.is_zero for g in self.generators):
            raise ValueError('the zero gamble is never a cone generator')

    @classmethod
    def spanned_by(cls, space: PossibilitySpace, gens: Sequence[Gamble]) -> 'Cone':
        return cls(space, tuple(g for g in gens if not g.is_zero))

    def with_halfspaces(self) -> 'Cone':
        from cohera.cones.double_description import v_to_h

        if self.halfspaces is not None:
            return self
        return Cone(self.space, self.generators, tuple(v_to_h(self.space, self.generators)))

    def satisfies_halfspaces(self, f: Gamble) -> bool:
        cone = self.with_halfspaces()
        return all(sum((n[w] * f[w] for w in range(len(f))), Fraction(0)) >= 0 for n in cone.halfspaces)

    def contains(self, f: Gamble) -> bool:
        from cohera.cones.operations import cone_member

        if f.is_zero:
            return True
        return cone_member(self.generators, f).member

    def audit(self) -> bool:
        """Both representations describe the same cone."""
        from cohera.cones.double_description import h_to_v

        cone = self.with_halfspaces()
        if not all(cone.satisfies_halfspaces(g) for g in self.generators):
            return False
        return all(self.contains(g) for g in h_to_v(self.space, cone.halfspaces))
