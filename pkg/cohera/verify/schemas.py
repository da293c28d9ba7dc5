from typing import Annotated, Optional

from pydantic import Field

from cohera.contrib.schemas import BaseSchema, Report


class RunReport(BaseSchema):
    tool_version: Annotated[str, Field(description='cohera version that produced the report', examples=['0.3.0'])]
    model_digest: Annotated[Optional[str], Field(None, description='sha256 of the canonical model, when one was loaded')]
    seed: Annotated[int, Field(description='Seed of every sampled check')]
    size_limit: Annotated[int, Field(description='Largest space size explored', ge=1)]
    samples: Annotated[int, Field(description='Samples per sampled check', ge=0)]
    suites: Annotated[list[Report], Field(default_factory=list)]
    exit_status: Annotated[int, Field(description='0 when no asserted law failed', ge=0, le=3)]
