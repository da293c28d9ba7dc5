from typing import Annotated, Optional

from pydantic import Field

from cohera.contrib.schemas import BaseSchema
from cohera.desirability.models import Assertions, EventSet, LexAtom, SetRep, SymbolicExtract


class SetOut(BaseSchema):
    kind: Annotated[str, Field(description='Representation kind', examples=['assertions'])]
    description: Annotated[str, Field(description='Readable form of the set')]
    gambles: Annotated[Optional[list[str]], Field(None, description='Generators beyond L⁺, as CSV rows')]
    worlds: Annotated[Optional[list[str]], Field(None, description='Event of an event set')]
    order: Annotated[Optional[list[str]], Field(None, description='World order of a lexicographic atom')]
    blocks: Annotated[Optional[list[list[str]]], Field(None, description='Blocks of a local atom, in induced order')]

    @classmethod
    def of(cls, d: SetRep) -> 'SetOut':
        out = cls(kind=d.kind, description=d.describe())
        if isinstance(d, Assertions):
            out.gambles = [g.describe() for g in d.gambles]
        elif isinstance(d, EventSet):
            out.worlds = d.event.names()
        elif isinstance(d, LexAtom):
            out.order = d.names()
        elif isinstance(d, SymbolicExtract) and isinstance(d.inner, LexAtom):
            names = d.space.worlds
            out.blocks = [[names[w] for w in sorted(d.partition.blocks[b])] for b in d.block_order]
        return out
