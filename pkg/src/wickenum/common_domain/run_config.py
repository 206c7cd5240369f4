from pydantic import BaseModel, Field

from wickenum.common_domain.enum.graph_filter import GraphFilter
from wickenum.common_domain.enum.identity_kind import IdentityKind
from wickenum.common_domain.enum.integrand_kind import IntegrandKind
from wickenum.common_domain.enum.output_format import OutputFormat
from wickenum.common_domain.enum.split_choice import SplitChoice


class RunConfig(BaseModel):
    command: str | None = None  # integrate, verify, census, planar-count, maps
    identity: IdentityKind | None = None
    kind: IntegrandKind | None = None
    n: int | None = None  # None keeps N symbolic
    n_max: int | None = None
    r: int | None = None
    max_edges: int | None = None
    max_m_degree: int | None = None
    max_z_order: int | None = None
    degrees: list[int] | None = None
    graph_filter: GraphFilter = GraphFilter.ALL
    dcdc: bool = False
    total: tuple[int, int] | None = None  # inclusive range of coin totals
    split: SplitChoice | None = None  # None compares both split choices
    sweep: list[int] = Field(default_factory=lambda: [4, 6, 8])
    s_of_n: str = "sqrt"
    output_format: OutputFormat = OutputFormat.JSON
    jobs: int = 1
    out: str | None = None
    pairable_only: bool = False
    log_level: str = "warning"
