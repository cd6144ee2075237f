"""Embedded magnitude records for thirteen consecutive lunar months
of a 1983-1984 volcanic seismic swarm.

Values are event magnitudes recorded to one decimal place; the
monitoring network did not report events below magnitude 1.0.
Months are labelled with Roman numerals in chronological order.
"""

from __future__ import annotations

MONTH_LABELS: tuple[str, ...] = (
    "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI", "XII", "XIII",
)

_MONTH_I = (
    1.3, 1.5, 1.1, 1.2, 2.3, 1.4, 1.2, 1.2, 1.4, 1.4, 1.4, 1.0, 1.4, 1.0, 1.2,
    1.2, 1.4, 1.6, 1.7, 1.3, 1.5, 1.5, 1.7, 1.3, 1.5, 1.4, 1.4, 1.0, 1.5, 1.3,
    2.4, 1.6, 1.8, 1.4, 1.9, 2.1, 1.3, 1.8, 1.7, 1.4, 1.0, 1.9, 1.5, 1.5, 1.4,
    1.4,
)

_MONTH_II = (
    1.4, 2.0, 2.2, 1.0, 1.8, 2.4, 1.1, 2.3, 1.5, 1.0, 1.2, 1.3, 1.2, 2.1, 1.2,
    1.3, 1.4, 1.6, 1.5, 1.6, 1.7, 2.8, 1.7, 1.5, 1.8, 1.2, 1.4, 1.0, 1.8, 1.4,
    1.6, 1.6, 1.0, 1.4, 1.2, 1.2, 1.2, 1.2, 2.0, 1.9, 1.6, 1.5, 1.3, 1.6, 1.4,
    2.5, 2.4, 1.6, 2.0, 1.4, 1.8, 1.3, 1.3, 1.2, 1.8, 1.2, 1.2, 1.2, 1.2, 1.2,
    2.2, 1.0, 1.4, 1.4, 2.4, 1.4, 3.6, 1.8, 1.3, 1.6, 2.0, 1.4, 1.0, 1.4, 2.6,
    1.2,
)

_MONTH_III = (
    2.0, 1.6, 1.4, 1.0, 1.4, 1.3, 1.5, 1.7, 1.2, 1.0, 1.4, 1.0, 1.1, 1.4, 1.0,
    1.4, 1.2, 1.0, 1.3, 1.6, 1.2, 1.6, 1.2, 1.2, 1.2, 2.0, 1.0, 1.2, 1.2, 1.5,
    1.0, 1.8, 1.1, 1.2, 1.4, 1.6, 1.8, 1.2, 1.9, 1.4, 1.2, 1.4, 1.4, 2.2, 1.2,
    2.6, 1.0, 1.5, 1.2, 1.8, 2.7, 1.8, 1.2, 1.0, 1.5, 1.2, 1.4, 1.4, 1.4, 1.5,
    1.0, 1.6, 1.5, 1.2, 1.5, 1.4, 1.7, 1.2, 1.5, 1.2, 1.7, 1.2, 1.2, 1.3, 1.4,
    1.3, 2.3, 1.7, 1.8, 1.2, 1.4, 1.3, 1.4, 2.0, 1.3, 1.6, 1.6, 1.4, 1.2, 1.6,
    1.3, 1.4, 1.0, 1.2, 1.0, 1.1, 1.1, 1.8, 1.5, 1.2, 1.9, 1.0, 1.7, 1.2, 1.0,
    1.2, 1.0, 1.3, 1.2, 1.5, 2.3, 1.0, 1.2, 1.4, 1.3, 1.0, 1.2, 1.4, 1.0, 1.4,
    1.2, 1.0, 1.0, 1.8, 1.5, 1.5, 1.1, 1.6, 1.1, 1.0, 1.9, 1.0, 1.2, 1.5, 1.2,
    1.1, 1.2, 1.1, 1.9, 1.3, 1.2, 1.9, 1.5, 1.0, 1.0, 1.3, 1.4, 1.0, 1.2, 1.4,
    1.5, 1.2, 1.1, 1.7, 1.1, 1.4, 1.2, 1.2, 1.9, 1.5, 1.0, 1.2, 1.2, 1.7, 1.0,
    1.6, 1.0, 1.3, 1.4, 2.0, 1.7, 2.3, 1.3, 2.9, 1.7, 1.8, 1.6, 1.7, 1.6, 1.2,
    1.6, 1.6, 1.0, 1.6, 2.0, 1.0, 1.7, 1.0, 1.5, 1.4, 1.8, 1.0, 1.3, 1.5, 1.6,
    1.5, 1.4, 1.7, 1.5, 1.6, 1.3, 1.0, 1.0, 1.3, 1.5, 1.4, 1.4, 1.3, 1.0, 1.6,
    1.7, 1.6, 1.2, 1.2, 1.2, 1.3, 1.9, 2.1, 1.2, 1.3, 1.3, 1.3, 2.2, 1.5, 1.3,
    1.3, 1.9, 1.0, 1.4, 1.2, 4.0, 1.2, 1.3, 1.3, 1.6, 1.3, 1.0, 3.0,
)

_MONTH_IV = (
    1.5, 1.2, 1.9, 1.4, 2.2, 1.0, 1.5, 1.6, 1.3, 1.3, 1.3, 1.0, 1.2, 2.0, 1.0,
    1.2, 1.0, 2.3, 1.9, 1.3, 1.5, 1.5, 1.6, 1.3, 2.0, 1.0, 1.5, 1.0, 2.3, 1.2,
    1.5, 1.7, 1.8, 1.2, 2.0, 1.0, 1.4, 1.3, 1.3, 1.4, 1.1, 1.4, 1.6, 1.0, 3.0,
    2.1, 2.6, 2.3, 1.2, 2.3, 1.0, 2.3, 1.9, 1.6, 2.6, 2.6, 1.0, 2.2, 1.4, 1.2,
    1.0, 1.4, 2.2, 1.3, 1.7, 1.9, 1.9, 2.3, 1.4, 1.6, 1.7, 1.2, 1.2, 1.5, 1.0,
    1.6, 2.1, 2.2, 1.0, 1.6, 1.5, 1.7, 1.7, 1.4, 1.6, 1.6, 1.0, 2.3, 1.3, 1.6,
    1.2, 1.7, 1.2, 1.7, 1.2, 1.8, 1.0, 1.3, 1.2, 1.0, 2.6,
)

_MONTH_V = (
    1.4, 1.3, 2.0, 1.1, 1.2, 1.7, 1.9, 1.7, 1.5, 1.8, 1.6, 1.1, 1.1, 1.1, 1.1,
    1.6, 1.4, 1.2, 1.2, 1.3, 1.7, 1.8, 1.4, 2.2, 1.6, 1.6, 1.2, 1.4, 1.8, 1.3,
    1.5, 1.7, 2.8, 1.6, 1.4, 1.5, 1.4, 3.3, 1.4, 1.3, 1.4, 1.2, 1.6, 1.1, 1.0,
    1.7, 1.5, 1.2, 1.2, 1.3, 2.4, 1.4, 1.0, 1.3, 1.3, 1.2, 1.6, 1.0, 1.2, 3.5,
    1.0, 1.4, 1.6, 1.4, 1.2, 1.9, 1.9, 1.0, 1.1, 1.0, 1.6, 1.3, 1.7, 2.4, 1.4,
    2.3, 1.0, 1.4, 1.0, 1.0,
)

_MONTH_VI = (
    1.0, 1.9, 1.0, 1.1, 1.0, 1.1, 1.5, 1.5, 1.7, 1.3, 1.1, 1.1, 1.2, 1.4, 1.5,
    1.0, 1.2, 2.1, 1.3, 1.2, 2.0, 1.9, 1.2, 1.7, 1.8, 1.8, 1.2, 1.5, 1.3, 1.1,
    1.1, 1.5, 1.9, 1.2, 2.2, 1.4, 1.4, 1.5, 1.8, 1.4, 1.1, 2.1, 1.3, 1.3, 1.1,
    1.0, 1.1, 1.2, 1.0, 1.0, 2.4, 2.1, 2.5, 2.7, 1.2, 1.3, 1.4, 3.1, 1.2, 2.3,
    1.6, 1.6, 1.2, 1.2, 1.6, 1.0, 1.5, 3.8, 1.2, 1.9, 1.5, 1.1, 1.3, 1.3, 1.0,
    1.3, 2.5, 3.0, 1.0, 1.2, 1.7, 2.5, 1.3, 1.1, 1.3, 1.0, 1.1, 1.0, 1.3, 1.2,
    1.6, 1.0, 1.0, 1.5, 1.0, 1.3, 1.2, 1.1, 1.4, 1.3, 1.6, 1.9, 2.2, 2.7, 3.8,
    1.7, 1.6, 2.3, 1.1, 1.1, 1.2, 1.3, 2.3, 2.0, 1.6, 1.3, 2.0, 1.3, 1.5, 1.2,
    1.6, 1.0, 1.2, 2.5, 1.0, 1.3, 1.1, 1.3, 1.3, 1.1,
)

_MONTH_VII = (
    1.1, 1.5, 1.2, 1.7, 2.5, 1.5, 1.7, 1.5, 1.3, 2.1, 1.9, 1.1, 1.0, 1.9, 1.6,
    1.3, 1.3, 1.0, 1.0, 1.1, 1.3, 1.9, 1.3, 1.7, 1.2, 1.1, 2.3, 1.3, 1.3, 1.1,
    2.0, 1.4, 1.3, 1.1, 1.1, 1.6, 1.1, 1.1, 1.1, 1.2, 1.8, 1.1, 1.3, 1.3, 1.2,
    2.6, 1.6, 1.0, 1.3, 2.4, 1.0, 1.0, 1.4, 1.5, 1.8, 1.6, 1.4, 1.8, 1.2, 3.3,
    1.2, 1.2, 1.1, 1.7, 2.0, 1.3, 1.5, 1.4, 1.6, 1.7, 1.3, 1.1, 1.1, 1.8, 1.0,
    1.4, 1.2, 1.1, 1.2, 1.0, 1.1, 1.1, 1.0, 1.2, 1.4, 1.3, 1.5, 1.7, 2.8, 2.6,
    1.6, 1.3, 1.4, 1.0, 1.3, 1.6, 1.3, 1.8, 1.3, 1.7, 1.9, 1.0, 1.5, 1.3, 1.2,
    1.3, 1.2, 1.8, 1.2, 2.1, 1.9, 1.4, 1.5, 1.7, 2.6, 1.1, 1.3, 1.4, 1.8, 2.1,
    1.3, 1.3, 1.1, 1.4, 1.5, 1.5, 1.4, 3.4, 1.9, 1.4, 1.8, 1.3, 2.1, 1.6, 2.2,
    1.9, 1.2, 2.3, 1.7, 1.6, 1.6, 1.2, 1.2, 1.6, 1.7, 1.3, 2.6, 1.7, 1.0, 1.9,
    1.3, 1.4, 1.1, 1.3, 1.7, 1.3, 1.9, 1.1, 1.0, 2.5, 1.7, 1.6, 1.2, 1.7, 1.7,
    1.7, 1.2, 1.5, 1.6, 1.8, 1.0, 1.3, 2.3, 1.3, 1.7, 1.6, 1.3, 2.1, 1.2, 1.7,
    1.8, 3.6, 1.9, 1.4, 1.2, 1.3, 1.2,
)

_MONTH_VIII = (
    1.1, 1.4, 1.8, 1.3, 1.0, 1.6, 1.6, 1.5, 1.4, 1.9, 1.7, 1.5, 1.0, 1.1, 1.4,
    1.4, 1.0, 1.2, 1.1, 1.1, 1.5, 1.3, 1.7, 1.3, 2.1, 1.4, 1.3, 1.7, 1.3, 1.4,
    1.0, 1.3, 1.6, 1.0, 2.4, 1.3, 1.4, 1.3, 1.3, 1.3, 1.2, 1.3, 1.1, 1.3, 1.0,
    1.2, 1.3, 1.3, 1.5, 1.9, 1.3, 1.2, 1.8, 1.6, 1.5, 1.2, 1.3, 1.2, 1.5, 1.3,
    1.1, 1.3, 2.1, 1.3, 3.2, 1.9, 1.2, 2.1, 1.6, 1.6, 1.8, 1.8, 2.7, 2.5, 2.1,
    1.7, 2.3, 2.1, 1.9, 2.1, 1.8, 1.0, 1.1, 1.9, 1.3, 1.7, 1.6, 1.7, 2.0, 2.3,
    1.6, 1.2, 1.0, 1.3, 1.6, 1.9, 1.9, 1.3, 1.8, 1.2, 1.7, 1.1, 1.0, 1.9, 1.3,
    1.5, 1.5, 1.3, 1.3, 1.2, 1.9, 1.1, 1.9, 1.7, 1.6, 1.7, 1.2, 1.7, 1.8, 1.4,
    1.6, 1.4, 2.4, 1.9, 1.6, 1.7, 1.4, 1.3, 2.8, 1.6, 1.5, 1.7, 1.3, 1.2, 1.2,
    1.2, 2.0, 1.7, 3.7, 1.3, 1.5, 1.7, 1.0, 1.1, 1.2, 1.1, 1.1, 1.3, 1.5, 1.3,
    2.2, 1.9, 1.3, 1.2, 1.5, 1.3, 1.4, 1.6, 2.1, 1.7, 1.0, 1.3, 1.3, 1.0, 3.0,
    3.2, 1.0, 1.0, 1.0, 1.0, 1.2, 1.1, 1.2, 1.2, 1.4, 1.3, 2.3, 1.7, 2.0, 1.3,
    2.1, 1.1, 1.2, 1.7, 1.6, 1.3, 1.1, 1.7, 2.1, 1.3, 1.7, 1.8, 2.2, 1.0, 2.0,
    1.2, 1.2, 1.0, 1.7, 1.2, 1.2, 1.0, 1.5, 1.3, 1.1, 1.3,
)

_MONTH_IX = (
    1.8, 2.5, 1.4, 1.0, 1.3, 1.2, 1.3, 1.7, 1.5, 1.0, 1.2, 1.5, 2.5, 1.2, 1.2,
    1.2, 2.5, 1.7, 1.8, 1.4, 1.2, 1.5, 1.2, 2.2, 2.1, 1.6, 2.3, 1.4, 1.1, 1.1,
    1.3, 1.7, 1.5, 1.6, 1.0, 1.2, 1.0, 1.3, 1.8, 1.5, 1.7, 1.3, 1.8, 1.5, 1.4,
    2.2, 1.3, 1.5, 1.1, 2.1, 1.0, 3.9, 1.4, 1.3, 1.4, 1.1, 1.0, 1.1, 1.2, 1.0,
    1.8, 1.0, 2.0, 1.0, 1.0, 1.4, 1.0, 1.7, 1.3, 1.2, 1.2, 1.8, 1.0, 2.5, 1.2,
    1.5, 1.4, 1.7, 1.2, 2.8, 1.9, 1.6, 2.5, 1.0, 1.8, 2.0, 1.6, 1.0, 1.5, 1.3,
    1.3, 2.5, 1.3, 1.9, 1.8, 1.7, 2.1, 4.0, 1.1, 1.3, 1.5, 2.1, 1.0, 1.1, 1.0,
    2.4, 2.0, 1.4, 1.6, 1.1, 1.3, 1.2, 1.3, 1.2, 1.3, 3.6, 2.5, 2.2, 1.3, 1.1,
    2.1, 1.1, 1.4, 1.3, 1.2, 1.7, 1.0, 1.7, 1.1, 1.3, 1.3, 1.5, 1.4, 2.4, 1.4,
    1.0, 1.3, 1.7, 1.2, 2.5, 3.0, 2.4, 1.6, 1.7, 2.1, 1.0, 1.5, 1.5, 1.0, 1.4,
    1.3, 1.9, 1.1, 1.0, 2.3, 1.0, 1.1, 1.2, 1.3, 1.4, 2.0, 1.4, 1.3, 1.6, 1.2,
    1.3, 1.1, 1.7, 1.5, 2.2, 1.3, 1.7, 1.0, 1.3, 1.3, 1.3, 2.1, 1.6, 1.2,
)

_MONTH_X = (
    1.0, 1.7, 1.0, 1.4, 1.6, 1.3, 1.8, 1.9, 1.3, 1.8, 1.4, 1.0, 1.5, 1.9, 1.4,
    1.9, 2.3, 1.5, 1.3, 1.4, 1.9, 1.5, 1.5, 1.6, 2.0, 2.0, 1.4, 2.2, 1.4, 1.8,
    1.6, 1.4, 2.0, 1.0, 1.7, 1.8, 2.7, 1.3, 2.5, 1.6, 3.0, 1.4, 1.4, 1.8, 1.8,
    1.7, 1.2, 1.7, 1.8, 3.0, 1.1, 1.9, 1.0, 1.8, 2.5, 2.5, 1.4, 1.3, 1.3, 1.9,
    1.4, 1.5, 1.5, 1.7, 1.4, 2.5, 2.0, 1.1, 1.5, 1.8, 1.2, 2.2, 1.6, 1.6, 1.3,
    1.1, 1.1, 1.1, 1.0, 2.1, 1.9, 1.8, 1.3, 1.8, 1.5, 1.5, 1.4, 1.4, 1.5, 1.0,
    1.5, 1.2, 1.9, 1.0, 1.7, 1.1, 1.7, 1.2, 1.1, 1.2, 1.0, 1.4, 1.8, 1.8, 1.0,
    1.1, 1.6, 1.4, 1.0, 1.0, 1.0, 1.0, 1.4, 1.5, 1.3, 1.3, 1.5, 1.7, 1.2, 3.5,
    1.3, 1.4, 1.3, 1.3, 2.0, 1.7, 1.4, 1.2, 1.3, 1.3, 2.0, 2.0, 1.2, 1.3, 1.7,
    1.3, 2.6, 2.0, 1.2, 1.5, 1.3, 1.4, 1.5, 1.0, 1.1, 1.9, 1.6, 1.9, 1.9, 1.0,
    1.7, 1.0, 1.3, 1.5, 2.6, 1.9, 1.4, 1.9, 1.0, 1.0, 1.0, 1.0, 1.1, 1.0, 2.0,
    1.4, 1.0, 1.9, 1.0, 1.4, 1.1, 1.0, 1.4, 1.4, 1.0, 1.9, 1.8, 1.3, 1.0, 1.3,
    2.8, 1.2, 1.0, 1.5, 1.3, 2.5, 1.6, 1.3, 3.5, 1.4, 1.4, 1.4, 1.0, 1.1, 1.5,
    1.2, 1.2, 1.6, 1.7, 1.4, 3.1, 2.4, 3.2, 1.2, 1.7, 1.2, 2.1, 2.2, 1.0, 1.4,
    1.3,
)

_MONTH_XI = (
    1.7, 1.4, 1.0, 1.4, 1.5, 1.9, 1.2, 1.4, 1.0, 1.8, 1.7, 1.0, 1.3, 1.9, 1.0,
    1.5, 1.3, 1.6, 1.9, 1.0, 3.4, 1.2, 1.0, 2.5, 1.7, 1.8, 1.4, 3.4, 1.3, 1.4,
    1.1, 1.1, 1.0, 1.3, 1.0, 1.3, 1.3, 1.3, 1.0, 1.5, 1.7, 1.7, 1.4, 1.3, 1.5,
    1.1, 1.3, 3.2, 1.2, 1.7, 1.6, 1.7, 1.4, 1.3, 1.0, 1.4, 1.7, 1.3, 1.0, 2.2,
    1.1, 1.5, 1.6, 2.0, 1.4, 1.2, 1.1, 1.3, 1.5, 1.7, 1.4, 1.0, 1.7, 1.4, 1.8,
    1.8, 1.5, 1.5, 1.6, 1.5, 1.6, 1.6, 1.3, 1.0, 1.2, 1.2, 1.3, 1.5, 1.7, 1.8,
    1.8,
)

_MONTH_XII = (
    1.5, 3.2, 1.5, 1.3, 3.3, 1.8, 3.0, 1.5, 1.3, 1.8, 1.8, 1.5, 3.0, 1.2, 1.3,
    1.2, 1.5, 2.0, 2.1, 1.8, 1.2, 1.8, 1.2, 1.5, 1.3, 1.3, 1.5, 1.7, 1.6, 2.0,
    1.3, 1.6, 1.0, 1.4, 1.8, 1.2, 1.8, 1.5, 1.2, 1.5, 1.9, 1.1, 1.5, 1.2, 1.3,
    1.3, 1.0, 1.3, 2.4, 2.4, 2.9, 1.4, 1.4, 1.3, 1.5, 1.0, 1.0, 1.1, 1.2, 1.4,
    1.6, 1.1, 1.0, 1.0, 1.2, 1.2, 1.0, 1.5, 1.2, 1.5, 1.1, 1.2, 1.0, 1.0, 2.6,
    3.3, 1.2, 1.6, 1.3, 1.0, 1.2, 1.3, 1.1, 1.7, 1.0, 3.6, 1.8,
)

_MONTH_XIII = (
    1.0, 1.5, 1.3, 1.4, 1.3, 1.3, 1.1, 1.5, 1.5, 1.5, 1.0, 1.3, 1.5, 3.6, 2.2,
    1.0, 1.5, 1.4, 1.9, 3.5, 1.6, 1.2, 1.8, 1.2, 1.6, 1.7, 1.4, 1.6, 1.5, 1.8,
    1.6, 1.4, 1.2, 1.5, 2.4, 1.6, 1.0, 1.3, 1.3, 1.2, 1.2, 1.2, 1.0, 1.0, 1.0,
    1.3, 1.5, 1.3, 1.0, 1.3, 1.8, 1.5, 1.0, 1.2, 1.6, 1.0, 1.0, 3.5, 1.0, 1.3,
    1.3, 2.0, 1.2, 1.4, 1.4, 1.2, 1.0, 1.8, 1.3, 1.5, 1.0, 1.4, 1.4, 1.2, 1.2,
    1.2, 2.0, 2.3, 1.7, 1.2, 1.0, 1.0, 1.2, 1.4, 1.8, 1.0, 2.4, 1.7, 1.3, 2.2,
    1.1, 1.3, 1.0, 1.4, 1.1, 1.0, 2.0, 1.6, 2.5, 1.4, 1.0, 1.0, 1.1, 1.2, 1.5,
    1.3, 1.2, 1.2, 1.8, 1.3, 1.1,
)

MAGNITUDES: dict[str, tuple[float, ...]] = {
    "I": _MONTH_I,
    "II": _MONTH_II,
    "III": _MONTH_III,
    "IV": _MONTH_IV,
    "V": _MONTH_V,
    "VI": _MONTH_VI,
    "VII": _MONTH_VII,
    "VIII": _MONTH_VIII,
    "IX": _MONTH_IX,
    "X": _MONTH_X,
    "XI": _MONTH_XI,
    "XII": _MONTH_XII,
    "XIII": _MONTH_XIII,
}

# Guard against accidental edits of the literals above. The digest is
# taken over the canonical serialization produced by _serialize().
DATASET_SHA256 = "17e43ea6932ee1a961d8422fd89211d7ea1c1b8cf2c1d2a7481137a5fce99f22"


def _serialize() -> bytes:
    rows = []
    for label in MONTH_LABELS:
        body = ",".join("%.1f" % v for v in MAGNITUDES[label])
        rows.append(label + ":" + body)
    return "\n".join(rows).encode("ascii")

