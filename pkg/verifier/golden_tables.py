"""
Golden Tables
Published reference data: the SL_4 primitive elements and two SL_5 tables of large-translation descents
"""

from dataclasses import dataclass
from typing import Optional, Tuple

Window = Tuple[int, ...]

# (word as published, window); pi exponents are not reduced mod 4 and every window has 1 <= w_1 <= 4
SL4_PRIMITIVE = (
    ("e", (1, 2, 3, 4)),
    ("pi s1 s0", (1, 2, 4, 7)),
    ("pi s0", (1, 3, 4, 6)),
    ("pi", (2, 3, 4, 5)),
    ("pi^2 s1 s3 s0", (1, 3, 6, 8)),
    ("pi^2 s3 s0", (1, 4, 6, 7)),  # erratum: printed as 1 3 5 7
    ("pi^2 s1 s0", (2, 3, 5, 8)),
    ("pi^2 s0", (2, 4, 5, 7)),
    ("pi^2", (3, 4, 5, 6)),
    ("pi^3 s2 s1 s3 s0", (1, 4, 7, 10)),
    ("pi^3 s1 s3 s0", (2, 4, 7, 9)),
    ("pi^3 s1 s0", (3, 4, 6, 9)),
    ("pi^3 s3 s0", (2, 5, 7, 8)),
    ("pi^3 s0", (3, 5, 6, 8)),
    ("pi^3", (4, 5, 6, 7)),
    ("pi^4 s1 s3 s0", (3, 5, 8, 10)),
    ("pi^4 s2 s1 s3 s0", (2, 5, 8, 11)),  # erratum: printed as 2 6 8 11
    ("pi^4 s3 s0", (3, 6, 8, 9)),
    ("pi^4 s1 s0", (4, 5, 7, 10)),
    ("pi^4 s0", (4, 6, 7, 9)),
    ("pi^5 s2 s1 s3 s0", (3, 6, 9, 12)),
    ("pi^5 s1 s3 s0", (4, 6, 9, 11)),
    ("pi^5 s3 s0", (4, 7, 9, 10)),
    ("pi^6 s2 s1 s3 s0", (4, 7, 10, 13)),
)

SL5_Z_INVERSE: Window = (-27, -13, 4, 16, 35)
SL5_Y_INVERSE: Window = (4, 3, 1, 2, 5)


@dataclass(frozen=True)
class DescentRow:
    """
    One row of a large-translation table.

    x_inverse is a word in s0..s4 read left to right; comparison is the
    length of the row's element against the row above ('<' or '>'), None
    on the first row.
    """
    x_inverse: Tuple[int, ...]
    window: Window
    comparison: Optional[str]
    psi_window: Window
    psi_comparison: Optional[str] = None
    y_prime_inverse: Optional[Window] = None


# z^{-1} x^{-1} and Psi(x^{-1})
SL5_PSI_TABLE = (
    DescentRow((), (-27, -13, 4, 16, 35), None, (1, 2, 3, 4, 5), None),
    DescentRow((0,), (30, -13, 4, 16, -22), "<", (5, 2, 3, 4, 1), ">"),
    DescentRow((0, 4), (30, -13, 4, -22, 16), "<", (5, 2, 3, 1, 4), "<"),
    DescentRow((0, 4, 1), (-13, 30, 4, -22, 16), "<", (2, 5, 3, 1, 4), "<"),
    DescentRow((0, 4, 1, 0), (11, 30, 4, -22, -8), "<", (4, 5, 3, 1, 2), ">"),
    DescentRow((0, 4, 1, 0, 1), (30, 11, 4, -22, -8), ">", (5, 4, 3, 1, 2), ">"),
)

# z^{-1} y^{-1} x^{-1}, Psi(y^{-1} x^{-1}) and, where x y z < x' y z, y'^{-1}
SL5_Y_PRIME_TABLE = (
    DescentRow((), (16, 4, -27, -13, 35), None, (4, 3, 1, 2, 5)),
    DescentRow((0,), (30, 4, -27, -13, 21), "<", (5, 3, 1, 2, 4), y_prime_inverse=(5, 3, 1, 2, 4)),
    DescentRow((0, 4), (30, 4, -27, 21, -13), ">", (5, 3, 1, 4, 2)),
    DescentRow((0, 4, 1), (4, 30, -27, 21, -13), "<", (3, 5, 1, 4, 2), y_prime_inverse=(4, 5, 1, 2, 3)),
    DescentRow((0, 4, 1, 0), (-18, 30, -27, 21, 9), ">", (2, 5, 1, 4, 3)),
    DescentRow((0, 4, 1, 0, 2), (-18, -27, 30, 21, 9), "<", (2, 1, 5, 4, 3), y_prime_inverse=(4, 3, 5, 2, 1)),
)
