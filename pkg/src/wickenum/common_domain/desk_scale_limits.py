import os
from functools import lru_cache
from importlib import resources

import yaml
from pydantic import BaseModel

from wickenum.common_domain.engine_errors import ScaleExceeded
from wickenum.common_util.trace_level_logger import get_logger

SCALE_OVERRIDE_ENV_VAR = "WICKENUM_SCALE_OVERRIDE"

logger = get_logger(__name__)


class DeskScaleLimits(BaseModel):
    integrand_dimension: int
    integrand_max_edges: int
    psi_max_m_degree: int
    census_vertices: int
    census_max_edges: int
    tdc_vertices: int
    tdc_edges: int
    dcdc_vertices: int
    planarity_vertices: int
    planar_oracle_vertices: int
    rhs_main2_n_max: int
    relevant_r: int
    relevant_max_edges: int
    map_half_edges: int
    walk_max_m_degree: int
    prr_dimension: int
    coin_total: int
    witt_variables: int
    witt_degree: int
    convergence_max_edges: int
    sweep_dimension: int

    @staticmethod
    @lru_cache(maxsize=1)
    def load() -> "DeskScaleLimits":
        limits_file = resources.files("wickenum").joinpath("resources/desk_scale_limits.yaml")
        with limits_file.open() as file:
            limits_yaml = yaml.safe_load(file)
        return DeskScaleLimits.model_validate(limits_yaml["desk_scale_limits"])

    @staticmethod
    def is_override_active() -> bool:
        value = os.environ.get(SCALE_OVERRIDE_ENV_VAR, "")
        return value.strip().lower() not in ("", "0", "false", "no")

    @staticmethod
    def ensure_within(limit_name: str, value: int) -> None:
        limit = getattr(DeskScaleLimits.load(), limit_name)
        if value is None or value <= limit:
            return
        if DeskScaleLimits.is_override_active():
            _warn_override_once(limit_name)
            return
        raise ScaleExceeded(limit_name, value, limit)


_warned_limits: set[str] = set()


def _warn_override_once(limit_name: str) -> None:
    if limit_name not in _warned_limits:
        _warned_limits.add(limit_name)
        logger.warning(
            f"{SCALE_OVERRIDE_ENV_VAR} is set; ignoring desk-scale limit '{limit_name}' (unsupported territory)"
        )
