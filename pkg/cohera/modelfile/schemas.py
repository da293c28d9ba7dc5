from typing import Annotated, Literal, Union

from pydantic import Field

from cohera.contrib.schemas import BaseSchema


class TopSet(BaseSchema):
    kind: Literal['top']


class UnitSet(BaseSchema):
    kind: Literal['unit']


class AssertionsSet(BaseSchema):
    kind: Literal['assertions']
    gambles: Annotated[list[str], Field(description='Asserted gambles, one CSV row each', examples=[['1,-1,0']])]


class EventSetDescriptor(BaseSchema):
    kind: Literal['event']
    worlds: Annotated[list[str], Field(description='Worlds of the event', examples=[['a', 'b']])]


class LexAtomSet(BaseSchema):
    kind: Literal['lex-atom']
    order: Annotated[list[str], Field(description='Permutation of the worlds', examples=[['a', 'b', 'c']])]


SetDescriptor = Annotated[
    Union[TopSet, UnitSet, AssertionsSet, EventSetDescriptor, LexAtomSet],
    Field(discriminator='kind'),
]


class ModelFile(BaseSchema):
    omega: Annotated[list[str], Field(description='World names in their fixed order', examples=[['a', 'b', 'c']])]
    partitions: Annotated[
        dict[str, list[int]],
        Field(default_factory=dict, description='Block id per world, aligned to omega', examples=[{'px': [0, 0, 1]}]),
    ]
    questions: Annotated[
        list[str],
        Field(default_factory=list, description='Partition names forming the question lattice; empty means all'),
    ]
    require_top: Annotated[bool, Field(False, description='Add the finest partition when missing')]
    sets: Annotated[dict[str, SetDescriptor], Field(default_factory=dict)]
    events: Annotated[dict[str, list[str]], Field(default_factory=dict, examples=[{'S': ['a']}])]
