"""Bundled head-and-neck cancer survival-time datasets and a file loader.

Two treatment arms: radiotherapy alone (headneck_rt) and combined
radiotherapy plus chemotherapy (headneck_ctrt).  The radiotherapy arm is
shipped in two variants because the widely circulated 58-value listing
duplicates the run 146, 149, 154, 157, 160, 160, 165; the corrected
variant (the default) removes one occurrence, restoring the original
51-patient arm.  Both variants are kept so the difference stays auditable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Tuple

__all__ = ["Dataset", "BUILTIN_NAMES", "load_builtin", "load_file"]

_HEADNECK_RT_PRINTED = (
    6.53, 7.0, 10.42, 14.48, 16.10, 22.70, 34.0, 41.55, 42.0, 45.28,
    49.40, 53.62, 63.0, 64.0, 83.0, 84.0, 91.0, 108.0, 112.0, 129.0,
    133.0, 133.0, 139.0, 140.0, 140.0, 146.0, 149.0, 154.0, 157.0, 160.0,
    160.0, 165.0, 146.0, 149.0, 154.0, 157.0, 160.0, 160.0, 165.0, 173.0,
    176.0, 218.0, 225.0, 241.0, 248.0, 273.0, 277.0, 297.0, 405.0, 417.0,
    420.0, 440.0, 523.0, 583.0, 594.0, 1101.0, 1146.0, 1417.0,
)

# one copy of the duplicated seven-value run removed
_HEADNECK_RT_CORRECTED = _HEADNECK_RT_PRINTED[:25] + _HEADNECK_RT_PRINTED[32:]

_HEADNECK_CTRT = (
    12.20, 23.56, 23.74, 25.87, 31.98, 37.0, 41.35, 47.38, 55.46, 58.36,
    63.47, 68.46, 78.26, 74.47, 81.43, 84.0, 92.0, 94.0, 110.0, 112.0,
    119.0, 127.0, 130.0, 133.0, 140.0, 146.0, 155.0, 159.0, 173.0, 179.0,
    194.0, 195.0, 209.0, 249.0, 281.0, 319.0, 339.0, 432.0, 469.0, 519.0,
    633.0, 725.0, 817.0, 1776.0,
)

BUILTIN_NAMES = ("headneck_rt", "headneck_ctrt")

# recorded (n, sum, reciprocal sum) per table; verified on every load so
# transcription drift fails fast
_CHECKSUMS = {
    ("headneck_rt", "as_printed"): (58, 13118.08, 0.9809570223697802),
    ("headneck_rt", "corrected"): (51, 12027.08, 0.935972758599609),
    ("headneck_ctrt", "as_printed"): (44, 9832.99, 0.5736589005705518),
    ("headneck_ctrt", "corrected"): (44, 9832.99, 0.5736589005705518),
}


@dataclass(frozen=True)
class Dataset:
    name: str
    values: Tuple[float, ...]
    variant: str

    @property
    def n(self) -> int:
        return len(self.values)


def _verify(name: str, variant: str, values: Tuple[float, ...]):
    n, total, recip = _CHECKSUMS[(name, variant)]
    if len(values) != n:
        raise AssertionError("dataset %s/%s: expected %d values" % (name, variant, n))
    if abs(math.fsum(values) - total) > 1e-6:
        raise AssertionError("dataset %s/%s: sum checksum mismatch" % (name, variant))
    if abs(math.fsum(1.0 / v for v in values) - recip) > 1e-12:
        raise AssertionError("dataset %s/%s: reciprocal checksum mismatch" % (name, variant))


def load_builtin(name: str, variant: str = "corrected") -> Dataset:
    """Load a bundled dataset by name; variant 'corrected' or 'as_printed'."""
    if name not in BUILTIN_NAMES:
        raise ValueError("unknown dataset %r; choose from %s" % (name, list(BUILTIN_NAMES)))
    if variant not in ("as_printed", "corrected"):
        raise ValueError("variant must be 'as_printed' or 'corrected'")
    if name == "headneck_rt":
        values = _HEADNECK_RT_CORRECTED if variant == "corrected" else _HEADNECK_RT_PRINTED
    else:
        values = _HEADNECK_CTRT  # single published listing, both variants identical
    _verify(name, variant, values)
    return Dataset(name=name, values=values, variant=variant)


def load_file(path) -> Dataset:
    """Parse a data file of newline- or comma-separated positive numbers.

    '#' starts a comment; blank lines are skipped.  Values keep file order.
    """
    p = Path(path)
    text = p.read_text()
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        for token in body.replace(",", " ").split():
            try:
                v = float(token)
            except ValueError:
                raise ValueError("%s, line %d: cannot parse %r as a number"
                                 % (p.name, lineno, token)) from None
            if not v > 0 or math.isinf(v) or math.isnan(v):
                raise ValueError("%s, line %d: value %s must be a positive finite number"
                                 % (p.name, lineno, token))
            values.append(v)
    if not values:
        raise ValueError("%s: no data values found" % p.name)
    return Dataset(name=p.stem, values=tuple(values), variant="as_printed")
