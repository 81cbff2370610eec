from sglab.core.exceptions import (
    ExactLimitExceeded,
    InvalidInputError,
    SgFormatError,
    SignedGraphError,
)

__all__ = [
    "ExactLimitExceeded",
    "InvalidInputError",
    "SgFormatError",
    "SignedGraphError",
]
