from sglab.schemas.schemas import (
    CLAIM_IDS,
    BoundReport,
    CharPoly,
    ClaimId,
    Counters,
    RunConfig,
    Spectrum,
    TheoremReport,
    Witness,
)

__all__ = [
    "CLAIM_IDS",
    "BoundReport",
    "CharPoly",
    "ClaimId",
    "Counters",
    "RunConfig",
    "Spectrum",
    "TheoremReport",
    "Witness",
]
