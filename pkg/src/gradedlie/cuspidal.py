"""Registry of cuspidal data and their validation against pseudo-Levis.

A datum names a pseudo-Levi type, even weighted-Dynkin marks on its
simple roots (ordered as the classifier sorts the components), and an
opaque label for the local system.  Validation checks the type against
a concrete subspace, grades the subsystem by the marks, confirms the
orbit is distinguished, and certifies a generic representative by a
rank computation in the ambient algebra.
"""

import json
import os
from dataclasses import dataclass
from fractions import Fraction

from . import chevalley
from .errors import (
    DuplicateDatum,
    GenericityFailure,
    InternalError,
    NoCuspidalDatum,
    OddGrading,
    SchemaError,
    TypeMismatch,
)
from .linalg import rank as mat_rank
from .linalg import solve
from .pseudolevi import pseudo_levi_of
from .rootdata import cartan_class_vectors, class_vector

REGISTRY_ENV = "SPIRAL_REGISTRY"


@dataclass(frozen=True)
class CuspidalDatum:
    levi_type: str
    orbit_marks: tuple
    system_label: str
    notes: str = ""
    builtin: bool = False


TORUS_DATUM = CuspidalDatum(
    levi_type="", orbit_marks=(), system_label="trivial", builtin=True
)


def load_registry(path=None):
    """Registry entries from a JSON file, plus the built-in torus datum.

    Schema: a list of objects with keys leviType (string), orbitMarks
    (list of even integers), systemLabel (string), and optional notes.
    When no path is given the SPIRAL_REGISTRY environment variable is
    consulted; absent both, only the torus datum is returned.
    """
    out = [TORUS_DATUM]
    if path is None:
        path = os.environ.get(REGISTRY_ENV)
    if path is None:
        return out
    try:
        with open(path) as f:
            raw = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read registry: {exc}")
    if not isinstance(raw, list):
        raise SchemaError("registry must be a JSON list")
    seen = {(TORUS_DATUM.levi_type, TORUS_DATUM.orbit_marks)}
    for entry in raw:
        if not isinstance(entry, dict):
            raise SchemaError("registry entries must be objects")
        extra = set(entry) - {"leviType", "orbitMarks", "systemLabel", "notes"}
        if extra:
            raise SchemaError(f"unknown registry keys: {sorted(extra)}")
        levi = entry.get("leviType")
        marks = entry.get("orbitMarks")
        label = entry.get("systemLabel")
        if not isinstance(levi, str) or not isinstance(label, str):
            raise SchemaError("leviType and systemLabel must be strings")
        if not isinstance(marks, list) or not all(isinstance(x, int) for x in marks):
            raise SchemaError("orbitMarks must be a list of integers")
        if any(x % 2 or x < 0 for x in marks):
            raise OddGrading("orbit marks must be even and nonnegative")
        key = (levi, tuple(marks))
        if key in seen:
            raise DuplicateDatum(f"duplicate datum for {levi} with marks {marks}")
        seen.add(key)
        out.append(
            CuspidalDatum(
                levi_type=levi,
                orbit_marks=tuple(marks),
                system_label=label,
                notes=entry.get("notes", ""),
            )
        )
    return out


def datum_for_type(registry, levi_type):
    matches = [c for c in registry if c.levi_type == levi_type]
    if not matches:
        raise NoCuspidalDatum(f"no registry datum for pseudo-Levi type {levi_type!r}")
    return matches[0]


def label_degrees(d, levi, marks):
    """Degree of each pseudo-Levi label in the grading given by the marks.

    Each label's affine root is expressed in the simple affine roots of
    the subsystem; the marks weight the coordinates.
    """
    simples = list(zip(levi.simple_indices, (lvl for _, lvl in levi.reflection_roots)))
    if len(marks) != len(simples):
        raise TypeMismatch("marks do not match the simple system size")
    rrank = d.restricted_rank
    rows = [[d.roots[idx][i] for idx, _ in simples] for i in range(rrank)]
    rows.append([Fraction(lvl) for _, lvl in simples])
    degrees = {}
    for idx, cls in levi.labels:
        n = -d.e * d.pairing(idx, levi.subspace.base)
        rhs = [Fraction(c) for c in d.roots[idx]] + [Fraction(n)]
        coeffs = solve(rows, rhs)
        if coeffs is None:
            raise InternalError("label is not a combination of the simple roots")
        deg = sum(c * m for c, m in zip(coeffs, marks))
        if deg.denominator != 1 or int(deg) % 2:
            raise OddGrading("marks grade a subsystem root oddly")
        degrees[(idx, cls)] = int(deg)
    return degrees


def _sparse_rank(vectors):
    labels = sorted({lab for v in vectors for lab in v})
    if not labels:
        return 0
    rows = [[v.get(lab, 0) for lab in labels] for v in vectors]
    return mat_rank(rows)


def validate_datum(d, datum, subspace, seed=0, retries=8):
    """Certificate that a datum fits the pseudo-Levi of a subspace.

    Checks the type label, grades the subsystem by the marks, requires
    the grading to be distinguished, and finds a representative of the
    dense orbit in the degree-2 piece, certified by the rank of its
    adjoint action from degree 0.
    """
    levi = pseudo_levi_of(d, subspace)
    if levi.cartan_type != datum.levi_type:
        raise TypeMismatch(
            f"datum is for type {datum.levi_type!r} but the subspace has "
            f"type {levi.cartan_type!r}"
        )
    if not levi.labels:
        return {"representative": {}, "degrees": {}, "rank": 0, "levi": levi}
    degrees = label_degrees(d, levi, datum.orbit_marks)
    ss_rank = mat_rank([list(d.roots[idx]) for idx, _ in levi.labels])
    deg0 = sorted(lab for lab, deg in degrees.items() if deg == 0)
    deg2 = sorted(lab for lab, deg in degrees.items() if deg == 2)
    if len(deg0) + ss_rank != len(deg2):
        raise GenericityFailure("marks do not define a distinguished grading")
    source = cartan_class_vectors(d, 0) + [class_vector(d, *lab) for lab in deg0]
    targets = [class_vector(d, *lab) for lab in deg2]
    import random

    rng = random.Random(seed)
    coeff_sets = [[Fraction(1)] * len(deg2)]
    for _ in range(retries):
        coeff_sets.append([Fraction(rng.randint(1, 5)) for _ in deg2])
    for coeffs in coeff_sets:
        rep = {}
        for c, v in zip(coeffs, targets):
            for lab, x in v.items():
                rep[lab] = rep.get(lab, 0) + c * x
        images = [chevalley.bracket_apply(d._alg, rep, v) for v in source]
        if _sparse_rank(images) == len(deg2):
            return {
                "representative": rep,
                "degrees": degrees,
                "rank": len(deg2),
                "levi": levi,
            }
    raise GenericityFailure("no generic representative found in the degree-2 piece")


def c_parameters(d, facet, datum):
    """Wall parameters of the relative Weyl group at an E-alcove facet."""
    from .relweyl import rel_weyl_group

    group = rel_weyl_group(d, facet, cusp=datum)
    return group.params
