from ladderwood.api.types import (
    OracleSettings,
    VerifySettings,
    WavefunctionRecord,
    IdentityReport,
)
from ladderwood.api.high_level import (
    normal_order_text,
    commutator_text,
    matel,
    wavefunction,
    hermite,
    energy_table,
    verify,
)

__all__ = [
    "OracleSettings",
    "VerifySettings",
    "WavefunctionRecord",
    "IdentityReport",
    "normal_order_text",
    "commutator_text",
    "matel",
    "wavefunction",
    "hermite",
    "energy_table",
    "verify",
]
