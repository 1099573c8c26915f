"""Pseudo-Levi data attached to affine subspaces spanned by facets.

The relevant subsystem of an affine subspace E collects the graded
labels whose affine values are integral on all of E.  Its projection to
the restricted root system is injective, and the resulting (possibly
empty) system is classified up to type by its simple system, with
non-reduced components reported with the letter BC.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import affine, rootsystems
from .errors import InternalError
from .linalg import dot, identity, nullspace


@dataclass(frozen=True)
class RelevantSubspace:
    base: tuple
    directions: tuple

    @property
    def dim(self):
        return len(self.directions)


def span_of_facet(d, facet):
    """The affine span of a facet: witness plus wall-direction kernel."""
    rows = [list(d.roots[idx]) for idx, _ in facet.vanishing]
    if rows:
        dirs = tuple(nullspace(rows, d.restricted_rank))
    else:
        dirs = tuple(identity(d.restricted_rank))
    return RelevantSubspace(tuple(Fraction(c) for c in facet.witness), dirs)


def relevant_labels(d, subspace):
    """Graded labels integral on the whole subspace."""
    out = []
    for idx, cls in d.graded_support:
        if any(dot(d.roots[idx], u) != 0 for u in subspace.directions):
            continue
        val = d.pairing(idx, subspace.base) + Fraction(cls, d.e)
        if val.denominator == 1:
            out.append((idx, cls))
    return tuple(out)


_WEYL_ORDERS = {
    "A": lambda n: math.factorial(n + 1),
    "B": lambda n: 2 ** n * math.factorial(n),
    "C": lambda n: 2 ** n * math.factorial(n),
    "BC": lambda n: 2 ** n * math.factorial(n),
    "D": lambda n: 2 ** (n - 1) * math.factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def _dual_form(d, a, b):
    return dot(a, tuple(dot(row, b) for row in d.killing_inv))


def classify_subsystem(d, covectors):
    """Canonical type of a closed subsystem given by its covectors.

    Returns (label, components) with components sorted by (rank, letter);
    each component is (letter, rank, simple covectors).
    """
    if not covectors:
        return "", ()
    from .rootdata import _is_positive

    pos = [v for v in covectors if _is_positive(v)]
    posset = set(pos)
    simples = []
    for g in pos:
        decomposable = any(
            tuple(a - b for a, b in zip(g, h)) in posset for h in pos if h != g
        )
        if not decomposable:
            simples.append(g)
    simples.sort()
    n = len(simples)
    pairing = [
        [
            2 * _dual_form(d, simples[s], simples[t]) / _dual_form(d, simples[t], simples[t])
            for t in range(n)
        ]
        for s in range(n)
    ]
    adj = {s: {} for s in range(n)}
    for s in range(n):
        for t in range(n):
            if s != t and pairing[s][t] != 0:
                adj[s][t] = int(pairing[s][t] * pairing[t][s])
    lengths = {s: _dual_form(d, simples[s], simples[s]) for s in range(n)}
    # connected components
    comp_of = {}
    comps = []
    for s in range(n):
        if s in comp_of:
            continue
        stack, comp = [s], []
        while stack:
            u = stack.pop()
            if u in comp_of:
                continue
            comp_of[u] = len(comps)
            comp.append(u)
            stack.extend(adj[u])
        comps.append(sorted(comp))
    covset = set(covectors)
    doubled = {v for v in covset if tuple(2 * c for c in v) in covset}
    out = []
    for comp in comps:
        letter, rank = rootsystems.classify_component(
            comp, {u: adj[u] for u in comp}, lengths
        )
        has_double = any(
            any(a != 0 and b != 0 for a, b in zip(simples[s], v))
            for v in doubled
            for s in comp
        )
        if has_double:
            letter = "BC"
        out.append((letter, rank, tuple(simples[s] for s in comp)))
    out.sort(key=lambda c: (c[1], c[0], c[2]))
    label = "+".join(f"{letter}{rank}" for letter, rank, _ in out)
    return label, tuple(out)


@dataclass(frozen=True)
class PseudoLevi:
    subspace: RelevantSubspace
    labels: tuple                 # R_E as (root index, class) pairs
    cartan_type: str
    components: tuple
    weyl_order: int
    ell: Fraction                 # |R_E| / 2
    simple_indices: tuple         # datum root indices of the simple system
    reflection_roots: tuple       # affine roots generating W_E


def pseudo_levi_of(d, facet_or_subspace):
    if isinstance(facet_or_subspace, RelevantSubspace):
        sub = facet_or_subspace
    else:
        sub = span_of_facet(d, facet_or_subspace)
    labels = relevant_labels(d, sub)
    covs = [d.roots[idx] for idx, _ in labels]
    if len(set(covs)) != len(covs):
        raise InternalError("relevant subsystem projects non-injectively")
    label, comps = classify_subsystem(d, covs)
    order = 1
    for letter, rank, _ in comps:
        order *= _WEYL_ORDERS[letter](rank)
    simple_idx = []
    refl_roots = []
    for _, _, simples in comps:
        for g in simples:
            idx = d.root_index(g)
            level = -d.e * d.pairing(idx, sub.base)
            if level.denominator != 1:
                raise InternalError("simple relevant root is not integral on the subspace")
            simple_idx.append(idx)
            refl_roots.append((idx, int(level)))
    return PseudoLevi(
        subspace=sub,
        labels=labels,
        cartan_type=label,
        components=comps,
        weyl_order=order,
        ell=Fraction(len(labels), 2),
        simple_indices=tuple(simple_idx),
        reflection_roots=tuple(refl_roots),
    )


def stabilizer_generators(d, levi):
    """Reflections generating the pointwise stabilizer of the subspace."""
    return [affine.reflection(d, idx, n) for idx, n in levi.reflection_roots]
