from typing import Annotated

from pydantic import Field

from cohera.contrib.schemas import BaseSchema


class AtomsOut(BaseSchema):
    atoms: Annotated[list[list[str]], Field(description='Lexicographic atoms as world orders')]


class AtomPartitionOut(BaseSchema):
    question: Annotated[str, Field(description='Question inducing the partition')]
    blocks: Annotated[list[list[list[str]]], Field(description='Blocks of atoms, each atom a world order')]
