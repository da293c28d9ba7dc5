from typing import Annotated, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class BaseSchema(BaseModel):
    model_config = ConfigDict(extra='forbid', from_attributes=True)


class Failure(BaseSchema):
    law: Annotated[str, Field(description='Identifier of the violated law', examples=['C3'])]
    inputs: Annotated[dict[str, str], Field(description='Inputs of the failing check')]
    witness: Annotated[Optional[str], Field(None, description='Counterexample, when one exists')]


class Finding(BaseSchema):
    law: Annotated[str, Field(description='Identifier of the measured direction')]
    checked: Annotated[int, Field(description='Instances examined', ge=0)]
    counterexamples: Annotated[int, Field(description='Instances where the direction failed', ge=0)]
    example: Annotated[Optional[dict[str, str]], Field(None, description='First counterexample')]


class Report(BaseSchema):
    suite: Annotated[str, Field(description='Suite name', examples=['separoid'])]
    attempted: Annotated[int, Field(ge=0)]
    passed: Annotated[int, Field(ge=0)]
    skipped: Annotated[int, Field(ge=0)]
    failures: Annotated[list[Failure], Field(default_factory=list)]
    exploratory: Annotated[list[Finding], Field(default_factory=list)]
    counts: Annotated[dict[str, int], Field(default_factory=dict, description='Per-law check counts')]
    scope: Annotated[Optional[str], Field(None, description='Scope metadata for the run')]

    @computed_field
    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    @model_validator(mode='after')
    def _balanced(self) -> 'Report':
        if self.passed + len(self.failures) + self.skipped != self.attempted:
            raise ValueError('passed + failed + skipped must equal attempted')
        return self
