from sglab.constructions.families import (
    HnaVariant,
    build_C3minus_K,
    build_cycle,
    build_G_st,
    build_H_na,
    build_path,
    coalescence,
    complete_signed,
    gst_label,
    named_family,
)

__all__ = [
    "HnaVariant",
    "build_C3minus_K",
    "build_G_st",
    "build_H_na",
    "build_cycle",
    "build_path",
    "coalescence",
    "complete_signed",
    "gst_label",
    "named_family",
]
