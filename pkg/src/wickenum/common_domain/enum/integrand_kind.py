from enum import StrEnum


class IntegrandKind(StrEnum):
    PSI = "psi"
    OMEGA_R = "omega_r"
    ZETA = "zeta"
    ETA = "eta"
    XI = "xi"
