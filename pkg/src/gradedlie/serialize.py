"""Deterministic JSON-friendly encoding of rational data.

Rationals are rendered "p/q" (or "p" when integral) so output is exact
and byte-stable across platforms.
"""

from fractions import Fraction

from .errors import UsageError


def frac(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s):
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse rational {s!r}")


def parse_point(s):
    return tuple(parse_frac(p) for p in s.split(","))


def point(v):
    return [frac(c) for c in v]


def matrix(m):
    return [[frac(c) for c in row] for row in m]


def isometry(w):
    return {"matrix": matrix(w.mat), "translation": point(w.trans)}


def facet(d, f):
    return {
        "witness": point(f.witness),
        "vanishing": [[idx, lvl] for idx, lvl in f.vanishing],
        "key": [[idx, kind, lvl] for idx, kind, lvl in f.key],
    }
