"""Chevalley bases with integer structure constants.

Simply laced algebras are built from a bimultiplicative sign function
attached to the fixed diagram orientation.  The remaining types are the
fixed subalgebras of a diagram automorphism of a simply laced algebra,
with orbit sums of root vectors as the new basis; because the
orientation is stable under the automorphism, the orbit sums close
under the bracket with integer constants.

Basis labels are integers: 0 .. rank-1 name the simple coroots h_i,
rank + r names the root vector e_r for root index r.  Elements are
sparse dicts {label: scalar}.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import rootsystems
from .errors import GenericityFailure, InternalError, InvalidType, NotNilpotent, OddGrading
from .linalg import rref


@dataclass
class ChevalleyAlgebra:
    series: str
    rank: int
    cartan: tuple          # cartan[i][j] = <beta_j, h_i>
    roots: tuple           # coefficient tuples over the simple roots
    npos: int
    neg: tuple             # index of -root
    bracket: dict = field(repr=False)  # (a, b) with a < b -> {label: Fraction}

    @property
    def dim(self):
        return self.rank + len(self.roots)

    def root_label(self, ri):
        return self.rank + ri

    def is_root_label(self, label):
        return label >= self.rank

    def root_of_label(self, label):
        return label - self.rank

    def pairing(self, ri, i):
        """<root ri, h_i>."""
        return sum(c * self.cartan[i][j] for j, c in enumerate(self.roots[ri]))

    def bracket_pair(self, a, b):
        """[basis a, basis b] as a sparse dict."""
        if a == b:
            return {}
        if a < b:
            return self.bracket.get((a, b), {})
        return {k: -v for k, v in self.bracket.get((b, a), {}).items()}

    def root_index(self, vec):
        return self._root_lookup[tuple(vec)]

    def __post_init__(self):
        self._root_lookup = {v: i for i, v in enumerate(self.roots)}


def bracket_apply(alg, x, y):
    """[x, y] for sparse elements x, y."""
    out = {}
    for a, ca in x.items():
        if ca == 0:
            continue
        for b, cb in y.items():
            if cb == 0:
                continue
            for lab, c in alg.bracket_pair(a, b).items():
                val = out.get(lab, 0) + ca * cb * c
                if val == 0:
                    out.pop(lab, None)
                else:
                    out[lab] = val
    return out


def _eps_exponent(orient, rank):
    exp = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        exp[i][i] = 1
    for i, j in orient:
        exp[i][j] = 1
    return exp


def _build_simply_laced(series, rank):
    cartan = rootsystems.cartan_matrix(series, rank)
    pos = rootsystems.positive_roots(cartan)
    roots = list(pos) + [tuple(-c for c in v) for v in pos]
    npos = len(pos)
    neg = tuple((i + npos) % (2 * npos) for i in range(2 * npos))
    lookup = {v: i for i, v in enumerate(roots)}
    exp = _eps_exponent(rootsystems.orientation(series, rank), rank)

    def eps(u, v):
        par = 0
        for i in range(rank):
            if u[i] == 0:
                continue
            for j in range(rank):
                if v[j] and exp[i][j] and (u[i] * v[j]) % 2:
                    par ^= 1
        return -1 if par else 1

    def sgn(ri):
        return 1 if ri < npos else -1

    bracket = {}

    def put(a, b, vecdict):
        if a > b:
            a, b = b, a
            vecdict = {k: -v for k, v in vecdict.items()}
        if vecdict:
            bracket[(a, b)] = {k: Fraction(v) for k, v in vecdict.items() if v != 0}

    for ri, rv in enumerate(roots):
        for i in range(rank):
            pairing = sum(c * cartan[i][j] for j, c in enumerate(rv))
            if pairing:
                put(i, rank + ri, {rank + ri: pairing})
    for ri in range(len(roots)):
        for rj in range(ri + 1, len(roots)):
            u, v = roots[ri], roots[rj]
            s = tuple(a + b for a, b in zip(u, v))
            if all(c == 0 for c in s):
                # [e_a, e_-a] = a^vee; coefficients of u over the simples
                put(rank + ri, rank + rj, {i: u[i] for i in range(rank)})
            elif s in lookup:
                n = sgn(ri) * sgn(rj) * sgn(lookup[s]) * eps(u, v)
                put(rank + ri, rank + rj, {rank + lookup[s]: n})
    return ChevalleyAlgebra(series, rank, cartan, tuple(roots), npos, neg, bracket)


_FOLD_SOURCE = {
    "B": lambda n: ("D", n + 1, 2),
    "C": lambda n: ("A", 2 * n - 1, 2),
    "F": lambda n: ("E", 6, 2),
    "G": lambda n: ("D", 4, 3),
}


def _orbits(perm, n):
    seen = [False] * n
    orbits = []
    for i in range(n):
        if seen[i]:
            continue
        orb = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            orb.append(j)
            seen[j] = True
            j = perm[j]
        orbits.append(tuple(orb))
    return sorted(orbits, key=min)


def root_permutation(alg, node_perm):
    """The permutation of root indices induced by a node permutation."""
    out = []
    for v in alg.roots:
        pv = [0] * alg.rank
        for i, c in enumerate(v):
            pv[node_perm[i]] = c
        out.append(alg.root_index(tuple(pv)))
    return tuple(out)


def _fold_algebra(series, rank):
    src_series, src_rank, order = _FOLD_SOURCE[series](rank)
    big = _build_simply_laced(src_series, src_rank)
    node_perm = rootsystems.diagram_automorphism(src_series, src_rank, order)
    root_perm = root_permutation(big, node_perm)
    node_orbits = _orbits(node_perm, big.rank)
    root_orbits = _orbits(root_perm, len(big.roots))
    nrank = len(node_orbits)
    node_to_orbit = {}
    for s, orb in enumerate(node_orbits):
        for i in orb:
            node_to_orbit[i] = s
    root_to_orbit = {}
    for oi, orb in enumerate(root_orbits):
        for r in orb:
            root_to_orbit[r] = oi

    def restricted_vec(orb):
        vals = set()
        for rep in orb:
            v = [0] * nrank
            for i, c in enumerate(big.roots[rep]):
                v[node_to_orbit[i]] += c
            vals.add(tuple(v))
        if len(vals) != 1:
            raise InternalError("orbit members restrict inconsistently")
        return vals.pop()

    rvecs = [restricted_vec(orb) for orb in root_orbits]
    order_key = sorted(
        range(len(root_orbits)),
        key=lambda oi: (sum(rvecs[oi]) < 0, abs(sum(rvecs[oi])), rvecs[oi]),
    )
    roots = tuple(rvecs[oi] for oi in order_key)
    orbit_list = [root_orbits[oi] for oi in order_key]
    lookup = {v: i for i, v in enumerate(roots)}
    npos = sum(1 for v in roots if sum(v) > 0)
    neg = tuple(lookup[tuple(-c for c in v)] for v in roots)

    cartan = tuple(
        tuple(
            sum(
                big.pairing(orbit_list[lookup[tuple(1 if j == t else 0 for j in range(nrank))]][0], i)
                for i in node_orbits[s]
            )
            for t in range(nrank)
        )
        for s in range(nrank)
    )

    def big_label(kind, idx):
        return idx if kind == "h" else big.rank + idx

    # expand the folded basis in the big algebra
    basis_big = []
    for s in range(nrank):
        basis_big.append({i: Fraction(1) for i in node_orbits[s]})
    for orb in orbit_list:
        basis_big.append({big.rank + r: Fraction(1) for r in orb})

    def refold(elem):
        """Express a sigma-invariant big element over the folded basis."""
        out = {}
        used = set()
        for lab, c in elem.items():
            if lab in used or c == 0:
                continue
            if lab < big.rank:
                s = node_to_orbit[lab]
                for i in node_orbits[s]:
                    if elem.get(i, 0) != c:
                        raise InternalError("folded bracket is not sigma invariant")
                    used.add(i)
                out[s] = out.get(s, 0) + c
            else:
                oi = root_to_orbit[lab - big.rank]
                orb = root_orbits[oi]
                for r in orb:
                    if elem.get(big.rank + r, 0) != c:
                        raise InternalError("folded bracket is not sigma invariant")
                    used.add(big.rank + r)
                folded_idx = lookup[rvecs[oi]]
                out[nrank + folded_idx] = out.get(nrank + folded_idx, 0) + c
        return out

    bracket = {}
    dim = nrank + len(roots)
    for a in range(dim):
        for b in range(a + 1, dim):
            res = bracket_apply(big, basis_big[a], basis_big[b])
            folded = refold(res)
            folded = {k: v for k, v in folded.items() if v != 0}
            if folded:
                bracket[(a, b)] = folded
    return ChevalleyAlgebra(series, rank, cartan, roots, npos, neg, bracket)


_CACHE = {}


def build_algebra(series, rank):
    """Chevalley algebra of the given simple type, with Jacobi-exact table."""
    rootsystems.validate_type(series, rank)
    key = (series, rank)
    if key not in _CACHE:
        if series in rootsystems.SIMPLY_LACED:
            _CACHE[key] = _build_simply_laced(series, rank)
        else:
            _CACHE[key] = _fold_algebra(series, rank)
    return _CACHE[key]


def pinned_automorphism(alg, order):
    """The pinned diagram automorphism as {label: (label, sign)}.

    Defined on the simple generators by the diagram permutation and
    extended through brackets, so the signs on non-simple root vectors
    come out of the structure constants.
    """
    if order == 1:
        return {lab: (lab, Fraction(1)) for lab in range(alg.dim)}
    if alg.series not in rootsystems.SIMPLY_LACED:
        raise InvalidType(f"type {alg.series}{alg.rank} has no pinned automorphism of order {order}")
    node_perm = rootsystems.diagram_automorphism(alg.series, alg.rank, order)
    root_perm = root_permutation(alg, node_perm)
    coeff = {}
    by_height = sorted(range(alg.npos), key=lambda ri: sum(alg.roots[ri]))
    for ri in by_height:
        v = alg.roots[ri]
        if sum(v) == 1:
            coeff[ri] = Fraction(1)
            continue
        i = next(
            i
            for i in range(alg.rank)
            if v[i] > 0
            and tuple(v[j] - (1 if j == i else 0) for j in range(alg.rank)) in alg._root_lookup
        )
        beta = alg.root_index(tuple(v[j] - (1 if j == i else 0) for j in range(alg.rank)))

        def constant(a_ri, b_ri):
            s = tuple(x + y for x, y in zip(alg.roots[a_ri], alg.roots[b_ri]))
            target = alg.root_label(alg.root_index(s))
            return alg.bracket_pair(alg.root_label(a_ri), alg.root_label(b_ri))[target]

        simple_ri = alg.root_index(tuple(1 if j == i else 0 for j in range(alg.rank)))
        n_orig = constant(simple_ri, beta)
        n_img = constant(root_perm[simple_ri], root_perm[beta])
        coeff[ri] = coeff[beta] * n_img / n_orig
    for ri in range(alg.npos):
        coeff[alg.neg[ri]] = coeff[ri]
    auto = {i: (node_perm[i], Fraction(1)) for i in range(alg.rank)}
    for ri in range(len(alg.roots)):
        auto[alg.root_label(ri)] = (alg.root_label(root_perm[ri]), coeff[ri])
    return auto


def apply_automorphism(auto, elem):
    out = {}
    for lab, c in elem.items():
        tgt, s = auto[lab]
        out[tgt] = out.get(tgt, 0) + s * c
    return {k: v for k, v in out.items() if v != 0}


def automorphism_orbit(auto, label):
    """(orbit labels, wrap sign): orbit of a basis label with the sign
    picked up when the automorphism cycles back to the start."""
    orbit = [label]
    sign = Fraction(1)
    cur, s = auto[label]
    sign *= s
    while cur != label:
        orbit.append(cur)
        cur, s = auto[cur]
        sign *= s
    return tuple(orbit), sign


def ad_in_span(alg, x, span_vectors):
    """Matrix of ad(x) on the span of the given sparse vectors.

    The span must be ad(x)-stable.  Returns square rows over the span
    basis.  Scalars may live in any exact field.
    """
    labels = sorted({lab for v in span_vectors for lab in v})
    cols = [[v.get(lab, 0) for v in span_vectors] for lab in labels]
    rows = []
    for v in span_vectors:
        img = bracket_apply(alg, x, v)
        rhs = [img.get(lab, 0) for lab in labels]
        from .linalg import solve

        sol = solve(cols, rhs)
        if sol is None:
            raise InternalError("span is not stable under ad(x)")
        rows.append(sol)
    return tuple(zip(*rows))  # column j = image of basis j; transpose to act on coords


def nilpotent_block_sizes(matrix):
    """Jordan block sizes of a nilpotent matrix, largest first."""
    n = len(matrix)
    if n == 0:
        return ()
    from .linalg import mat_mul, rank as mrank

    ranks = [n]
    power = matrix
    while ranks[-1] > 0:
        ranks.append(mrank(power))
        if len(ranks) > n + 1:
            raise NotNilpotent("matrix is not nilpotent on the given subspace")
        power = mat_mul(power, matrix)
    # ranks[k] = rank(A^k) with ranks[0] = n
    blocks = []
    for s in range(1, len(ranks)):
        count = ranks[s - 1] - 2 * ranks[s] + (ranks[s + 1] if s + 1 < len(ranks) else 0)
        blocks.extend([s] * count)
    return tuple(sorted(blocks, reverse=True))


def close_under_ad(alg, x, vectors):
    """An independent basis of the smallest ad(x)-stable span of ``vectors``."""

    def independent(vecs, v):
        labs = sorted({l for u in vecs for l in u} | set(v))
        rows = [[u.get(l, 0) for l in labs] for u in vecs + [v]]
        return len(rref(rows)[1]) == len(vecs) + 1

    basis = []
    queue = list(vectors)
    while queue:
        v = queue.pop(0)
        if v and independent(basis, v):
            basis.append(v)
            queue.append(bracket_apply(alg, x, v))
    return basis


def jordan_profile(alg, x, labels):
    """Jordan type of ad(x) on the ad(x)-closure of the labelled subspace."""
    basis = close_under_ad(alg, x, [{lab: Fraction(1)} for lab in sorted(labels)])
    mat = ad_in_span(alg, x, basis)
    return nilpotent_block_sizes(mat)


def levi_degrees(alg, levi_roots, h_coords):
    """{root index: <root, h>} for the labelled subsystem; must be integers."""
    out = {}
    for ri in levi_roots:
        val = sum(Fraction(c) * Fraction(h) for c, h in zip(alg.roots[ri], h_coords))
        if val.denominator != 1:
            raise OddGrading(f"root {ri} pairs to non-integer {val}")
        out[ri] = int(val)
    return out


def is_distinguished(alg, levi_roots, h_coords):
    """Whether the weighted-diagram grading is distinguished in the Levi.

    Criterion: the number of degree-0 roots plus the semisimple rank
    equals the number of degree-2 roots.  Odd pairings are rejected.
    """
    degrees = levi_degrees(alg, levi_roots, h_coords)
    if any(d % 2 for d in degrees.values()):
        raise OddGrading("grading pairs a Levi root to an odd integer")
    ss_rank = len(rref([list(alg.roots[ri]) for ri in levi_roots])[1])
    n0 = sum(1 for d in degrees.values() if d == 0)
    n2 = sum(1 for d in degrees.values() if d == 2)
    return n0 + ss_rank == n2


def orbit_representative(alg, levi_roots, h_coords, seed=0, retries=8):
    """A representative of the dense orbit in the degree-2 piece.

    Starts with the all-ones sum of degree-2 root vectors and certifies
    genericity by checking ad(x): m_0 -> m_2 has full rank; retries with
    seeded small coefficients before giving up.
    """
    import random

    degrees = levi_degrees(alg, levi_roots, h_coords)
    if any(d % 2 for d in degrees.values()):
        raise OddGrading("grading pairs a Levi root to an odd integer")
    deg2 = sorted(ri for ri, d in degrees.items() if d == 2)
    deg0 = sorted(ri for ri, d in degrees.items() if d == 0)
    m0_labels = list(range(alg.rank)) + [alg.root_label(ri) for ri in deg0]
    m2_labels = [alg.root_label(ri) for ri in deg2]
    m2_set = set(m2_labels)
    rng = random.Random(seed)
    coeff_sets = [[1] * len(deg2)]
    for _ in range(retries):
        coeff_sets.append([rng.randint(1, 5) for _ in deg2])
    for coeffs in coeff_sets:
        x = {alg.root_label(ri): Fraction(c) for ri, c in zip(deg2, coeffs)}
        rows = []
        for lab in m0_labels:
            img = bracket_apply(alg, x, {lab: Fraction(1)})
            if any(l not in m2_set for l in img):
                raise InternalError("degree-2 image left the expected span")
            rows.append([img.get(l, 0) for l in m2_labels])
        from .linalg import rank as mrank

        if mrank(rows) == len(m2_labels):
            return {alg.root_of_label(lab): c for lab, c in x.items()}
    raise GenericityFailure("no candidate representative passed the rank certificate")
