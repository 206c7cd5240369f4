import re

from wickenum.cli.messages.run_config_validation_messages import RunConfigValidationMessages
from wickenum.cli.run_config_validation_issue import RunConfigValidationIssue
from wickenum.common_domain.enum.identity_kind import IdentityKind
from wickenum.common_domain.enum.integrand_kind import IntegrandKind
from wickenum.common_domain.run_config import RunConfig

S_OF_N_PATTERN = re.compile(r"^(sqrt|log|const:\d+)$")


class RunConfigValidator:
    @staticmethod
    # returns a list of validation issues found in the configuration; desk-scale limits are checked by the kernels
    def is_config_valid(cfg: RunConfig) -> (bool, list):
        config_validation_issues = []

        if cfg.n is not None and cfg.n < 1:
            config_validation_issues.append(
                RunConfigValidationIssue(RunConfigValidationMessages.INVALID_DIMENSION, cfg.n)
            )
        for name in ("n_max", "r", "max_edges", "max_m_degree", "max_z_order"):
            value = getattr(cfg, name)
            if value is not None and value < 0:
                config_validation_issues.append(
                    RunConfigValidationIssue(RunConfigValidationMessages.INVALID_BOUND, name, value)
                )
        if cfg.jobs < 1:
            config_validation_issues.append(
                RunConfigValidationIssue(RunConfigValidationMessages.INVALID_JOBS, cfg.jobs)
            )
        if not RunConfigValidator.is_s_of_n_valid(cfg.s_of_n):
            config_validation_issues.append(
                RunConfigValidationIssue(RunConfigValidationMessages.INVALID_S_OF_N, cfg.s_of_n)
            )
        if not cfg.sweep or any(dimension < 1 for dimension in cfg.sweep):
            config_validation_issues.append(
                RunConfigValidationIssue(RunConfigValidationMessages.INVALID_SWEEP, cfg.sweep)
            )

        match cfg.command:
            case "integrate":
                RunConfigValidator.validate_integrand(cfg, config_validation_issues)
            case "verify" | "maps":
                RunConfigValidator.validate_identity(cfg, config_validation_issues)
            case "census":
                if cfg.n_max is None:
                    config_validation_issues.append(
                        RunConfigValidationIssue(RunConfigValidationMessages.MISSING_N_MAX, cfg.command)
                    )

        # returns true if no validation issues found, false otherwise; includes list of validation issues found
        return len(config_validation_issues) == 0, config_validation_issues

    @staticmethod
    def is_s_of_n_valid(selector: str) -> bool:
        return selector is not None and S_OF_N_PATTERN.match(selector) is not None

    @staticmethod
    def validate_integrand(cfg: RunConfig, config_validation_issues: list) -> None:
        if cfg.kind is None:
            config_validation_issues.append(RunConfigValidationIssue(RunConfigValidationMessages.MISSING_KIND))
            return
        match cfg.kind:
            case IntegrandKind.OMEGA_R | IntegrandKind.ZETA | IntegrandKind.ETA:
                if cfg.kind == IntegrandKind.OMEGA_R and cfg.r is None:
                    config_validation_issues.append(RunConfigValidationIssue(RunConfigValidationMessages.MISSING_R))
                if cfg.max_edges is None:
                    config_validation_issues.append(
                        RunConfigValidationIssue(RunConfigValidationMessages.MISSING_MAX_EDGES, cfg.kind)
                    )
                elif cfg.max_edges % 2:
                    config_validation_issues.append(
                        RunConfigValidationIssue(RunConfigValidationMessages.ODD_MAX_EDGES, cfg.kind, cfg.max_edges)
                    )
            case IntegrandKind.PSI:
                if not cfg.degrees or cfg.max_z_order is None:
                    config_validation_issues.append(
                        RunConfigValidationIssue(RunConfigValidationMessages.MISSING_DEGREES)
                    )
            case IntegrandKind.XI:
                if cfg.n is None and cfg.max_edges is None:
                    config_validation_issues.append(
                        RunConfigValidationIssue(RunConfigValidationMessages.MISSING_MAX_EDGES, cfg.kind)
                    )

    @staticmethod
    def validate_identity(cfg: RunConfig, config_validation_issues: list) -> None:
        if cfg.identity is None:
            config_validation_issues.append(RunConfigValidationIssue(RunConfigValidationMessages.MISSING_IDENTITY))
            return
        match cfg.identity:
            case IdentityKind.MAIN7 | IdentityKind.MAIN3 | IdentityKind.ICE:
                if cfg.max_edges is not None and cfg.max_edges % 2:
                    config_validation_issues.append(
                        RunConfigValidationIssue(RunConfigValidationMessages.ODD_MAX_EDGES, cfg.identity, cfg.max_edges)
                    )
            case IdentityKind.MAIN2:
                if cfg.n is None and cfg.n_max is None:
                    config_validation_issues.append(
                        RunConfigValidationIssue(RunConfigValidationMessages.MISSING_N_MAX, cfg.identity)
                    )
            case IdentityKind.COIN:
                if cfg.total is not None and not 2 <= cfg.total[0] <= cfg.total[1]:
                    config_validation_issues.append(
                        RunConfigValidationIssue(RunConfigValidationMessages.INVALID_TOTAL, list(cfg.total))
                    )
