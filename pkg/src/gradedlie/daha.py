"""Symbolic graded double affine Hecke algebra of a relative Weyl group.

Elements are finite rational combinations of monomials u^a * p * w with
p a polynomial in the homogenizer delta and the dual coordinates of the
subspace, and w an affine isometry of the subspace.  Multiplication
rewrites to this normal form by pushing group elements through
polynomials one simple reflection at a time, using the divided
difference cross-relation; the division it requires is exact.

Specialization sends u to -nu and delta to 1, giving the filtered
algebra; its multiplication uses the same engine with inhomogeneous
wall functions.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .affine import AffineIsometry, conjugating_element
from .errors import DivisionFailure, InternalError, UsageError
from .espace import ESpace
from .linalg import dot, vec_sub
from .pseudolevi import span_of_facet


def _padd(p, q):
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, Fraction(0)) + c
        if out[k] == 0:
            del out[k]
    return out


def _pscale(c, p):
    if c == 0:
        return {}
    return {k: c * v for k, v in p.items()}


def _pmul(p, q):
    out = {}
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            out[k] = out.get(k, Fraction(0)) + c1 * c2
    return {k: c for k, c in out.items() if c != 0}


@dataclass(frozen=True)
class DahaAlgebra:
    rel: object               # RelWeylGroup with parameters
    nu: object = None         # None for the graded algebra, else the specialization
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def dim(self):
        return self.rel.espace.dim

    @property
    def nvars(self):
        return self.dim + 1      # slot 0 is delta, slots 1..k the coordinates

    def base_point(self):
        """Coordinates of the chosen origin of E: the projection of 0."""
        E = self.rel.espace
        zero = tuple(Fraction(0) for _ in E.base)
        return E.to_coords(E.project(zero))

    def one(self):
        return {(0, (0,) * self.nvars, AffineIsometry.identity_map(self.dim)): Fraction(1)}

    def u(self):
        if self.nu is not None:
            return self.scalar(-self.nu)
        return {(1, (0,) * self.nvars, AffineIsometry.identity_map(self.dim)): Fraction(1)}

    def delta(self):
        if self.nu is not None:
            return self.one()
        mono = tuple(1 if i == 0 else 0 for i in range(self.nvars))
        return {(0, mono, AffineIsometry.identity_map(self.dim)): Fraction(1)}

    def coordinate(self, i):
        """The i-th dual coordinate (1-based), vanishing at the base point."""
        if not 1 <= i <= self.dim:
            raise UsageError(f"coordinate index {i} out of range")
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return {(0, mono, AffineIsometry.identity_map(self.dim)): Fraction(1)}

    def simple(self, i):
        if not 1 <= i <= len(self.rel.walls):
            raise UsageError(f"simple reflection index {i} out of range")
        w = self.rel.walls[i - 1].reflection
        return {(0, (0,) * self.nvars, w): Fraction(1)}

    def translation(self, v):
        w = AffineIsometry(
            tuple(tuple(Fraction(1 if a == b else 0) for b in range(self.dim)) for a in range(self.dim)),
            tuple(Fraction(c) for c in v),
        )
        _reduced_word(self, w)  # membership check: descent must terminate
        return {(0, (0,) * self.nvars, w): Fraction(1)}

    def scalar(self, c):
        return {(0, (0,) * self.nvars, AffineIsometry.identity_map(self.dim)): Fraction(c)}

    def homogenized_root(self, i):
        """The wall functional: linear part plus value at the base point."""
        wall = self.rel.walls[i - 1]
        a, c = wall.alpha_affine
        tb = self.base_point()
        return (dot(a, tb) + c, a)

    def wall_poly(self, i):
        """The i-th wall function as a polynomial element key map."""
        const, lin = self.homogenized_root(i)
        return self._functional_poly(const, lin)

    def _functional_poly(self, const, lin):
        """Polynomial of the functional const * delta + sum lin_j d_j."""
        out = {}
        if const != 0:
            if self.nu is None:
                out[tuple(1 if j == 0 else 0 for j in range(self.nvars))] = Fraction(const)
            else:
                out[(0,) * self.nvars] = Fraction(const)
        for j, c in enumerate(lin):
            if c != 0:
                out[tuple(1 if s == j + 1 else 0 for s in range(self.nvars))] = Fraction(c)
        return out


def element_add(x, y):
    out = dict(x)
    for k, c in y.items():
        out[k] = out.get(k, Fraction(0)) + c
        if out[k] == 0:
            del out[k]
    return out


def element_scale(c, x):
    if c == 0:
        return {}
    return {k: c * v for k, v in x.items()}


def _descent(alg, w):
    """Index of a simple wall whose function is negative at w's image of
    the base alcove witness, or None for the identity."""
    E = alg.rel.espace
    witness = E.to_coords(alg.rel.base_alcove.witness)
    img = w.apply(witness)
    for i, wall in enumerate(alg.rel.walls):
        a, c = wall.alpha_affine
        if dot(a, img) + c < 0:
            return i
    return None


def _reduced_word(alg, w):
    """A reduced word for w (list of wall indices, leftmost first)."""
    cached = alg._cache.get(("word", w))
    if cached is not None:
        return cached
    word = []
    cur = w
    ident = AffineIsometry.identity_map(alg.dim)
    for _ in range(100000):
        if cur == ident:
            alg._cache[("word", w)] = word
            return word
        i = _descent(alg, cur)
        if i is None:
            raise UsageError("isometry does not lie in the relative Weyl group")
        word.append(i)
        cur = alg.rel.walls[i].reflection.compose(cur)
    raise InternalError("reduced-word search did not terminate")


def _twist_functional(alg, winv, const, lin):
    """The functional pulled back through w (given w^{-1})."""
    tb = alg.base_point()
    shift = vec_sub(winv.apply(tb), tb)
    new_const = const + dot(lin, shift)
    mat = winv.mat
    new_lin = tuple(
        sum(lin[i] * mat[i][j] for i in range(alg.dim)) for j in range(alg.dim)
    )
    return new_const, new_lin


def _apply_group_to_poly(alg, w, p):
    """The polynomial p composed with w^{-1} (the group action on functions)."""
    winv = w.inverse()
    images = [None] * alg.nvars
    images[0] = alg._functional_poly(Fraction(1), (0,) * alg.dim) if alg.nu is None else None
    for j in range(alg.dim):
        lin = tuple(Fraction(1 if s == j else 0) for s in range(alg.dim))
        const, new_lin = _twist_functional(alg, winv, Fraction(0), lin)
        images[j + 1] = alg._functional_poly(const, new_lin)
    out = {}
    for mono, coef in p.items():
        term = {(0,) * alg.nvars: coef}
        for slot, exp in enumerate(mono):
            if exp == 0:
                continue
            if slot == 0 and alg.nu is None:
                # delta is fixed by the group
                term = {tuple(k[0] + exp if s == 0 else k[s] for s in range(alg.nvars)): c
                        for k, c in term.items()}
                continue
            base = images[slot]
            for _ in range(exp):
                term = _pmul(term, base)
        out = _padd(out, term)
    return out


def _divide_by_functional(alg, p, const, lin):
    """Exact division of p by the linear functional; DivisionFailure if inexact."""
    pivot = next((j + 1 for j, c in enumerate(lin) if c != 0), None)
    if pivot is None:
        if alg.nu is None and const != 0:
            pivot = 0
        else:
            raise DivisionFailure("division by a constant functional")
    L = alg._functional_poly(const, lin)
    lam = L[tuple(1 if s == pivot else 0 for s in range(alg.nvars))]
    rem = dict(p)
    quo = {}
    while True:
        top = None
        for mono in rem:
            if mono[pivot] >= 1 and (top is None or mono[pivot] > top[pivot]):
                top = mono
        if top is None:
            break
        t_mono = tuple(top[s] - (1 if s == pivot else 0) for s in range(alg.nvars))
        t_coef = rem[top] / lam
        quo[t_mono] = quo.get(t_mono, Fraction(0)) + t_coef
        rem = _padd(rem, _pscale(-t_coef, _pmul({t_mono: Fraction(1)}, L)))
    if rem:
        raise DivisionFailure("polynomial is not divisible by the wall functional")
    return {k: c for k, c in quo.items() if c != 0}


def _simple_times_poly(alg, i, p):
    """s_i * p in normal form: list of (u-exponent, poly, isometry or None)."""
    wall = alg.rel.walls[i]
    s = wall.reflection
    twisted = _apply_group_to_poly(alg, s, p)
    diff = _padd(p, _pscale(Fraction(-1), twisted))
    const, lin = alg.homogenized_root(i + 1)
    quotient = _divide_by_functional(alg, diff, const, lin)
    c_i = Fraction(wall.c)
    terms = [(0, twisted, s)]
    if quotient:
        if alg.nu is None:
            terms.append((1, _pscale(c_i, quotient), None))
        else:
            terms.append((0, _pscale(-alg.nu * c_i, quotient), None))
    return terms


def _group_times_poly(alg, w, p):
    """w * p rewritten as a list of (u-exponent, poly, isometry)."""
    word = _reduced_word(alg, w)
    ident = AffineIsometry.identity_map(alg.dim)
    terms = [(0, p, ident)]
    for i in reversed(word):
        s = alg.rel.walls[i].reflection
        nxt = []
        for ue, q, v in terms:
            for due, q2, v2 in _simple_times_poly(alg, i, q):
                if v2 is None:
                    nxt.append((ue + due, q2, v))
                else:
                    nxt.append((ue + due, q2, v2.compose(v)))
        terms = nxt
    return terms


def multiply(alg, x, y):
    """Product in PBW normal form."""
    out = {}
    for (u1, p1, w1), c1 in x.items():
        for (u2, p2, w2), c2 in y.items():
            for due, q, v in _group_times_poly(alg, w1, {p2: Fraction(1)}):
                wk = v.compose(w2)
                poly = _pmul({p1: Fraction(1)}, q)
                coef = c1 * c2
                for mono, pc in poly.items():
                    k = (u1 + u2 + due, mono, wk)
                    out[k] = out.get(k, Fraction(0)) + coef * pc
                    if out[k] == 0:
                        del out[k]
    return out


def specialized_algebra(alg, nu):
    return DahaAlgebra(rel=alg.rel, nu=Fraction(nu))


def specialize(alg, x, nu):
    """Image of x under u -> -nu, delta -> 1, as an element of the
    specialized algebra."""
    nu = Fraction(nu)
    out = {}
    for (ue, mono, w), c in x.items():
        coef = c * (-nu) ** ue
        new_mono = tuple(0 if s == 0 else mono[s] for s in range(len(mono)))
        k = (0, new_mono, w)
        out[k] = out.get(k, Fraction(0)) + coef
        if out[k] == 0:
            del out[k]
    return out


def build_daha(rel):
    """The graded algebra of a relative Weyl group with parameters."""
    if rel.params is None:
        raise UsageError("relative Weyl group carries no parameters")
    alg = DahaAlgebra(rel=rel)
    for i, wall in enumerate(rel.walls, start=1):
        const, lin = alg.homogenized_root(i)
        pairing = dot(lin, wall.coroot)
        if pairing != 2:
            raise InternalError("homogenized root pairs wrongly with its coroot")
    return alg


def eigen_point(d, g, facet, base_facet):
    """Projection of x/m onto the facet's span, transported to the base."""
    sub = span_of_facet(d, facet)
    if len(sub.directions) == 0:
        proj = tuple(Fraction(c) for c in sub.base)
    else:
        proj = ESpace(d, sub).project(g.point())
    w = conjugating_element(d, facet, base_facet)
    return w.apply(proj)
