from enum import StrEnum


class IdentityKind(StrEnum):
    MAIN7 = "main7"
    MAIN3 = "main3"
    ICE = "ice"
    MAIN2 = "main2"
    PRR = "prr"
    BIPZ = "bipz"
    COIN = "coin"
    WITT = "witt"
    PLANAR_CONVERGENCE = "planar-convergence"
