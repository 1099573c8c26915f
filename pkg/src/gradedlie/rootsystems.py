"""Finite Dynkin diagram bookkeeping.

Cartan matrices use the convention ``C[i][j] = <alpha_j, alpha_i^vee>``,
so row i lists the eigenvalues of the coroot h_i on the simple root
vectors.  Simply laced diagrams also carry a fixed edge orientation; it
is chosen stable under the diagram automorphisms that we fold by.
"""

from .errors import InvalidType

SIMPLY_LACED = {"A", "D", "E"}


def validate_type(series, rank):
    if series == "A" and rank >= 1:
        return
    if series == "B" and rank >= 2:
        return
    if series == "C" and rank >= 2:
        return
    if series == "D" and rank >= 3:
        return
    if series == "E" and rank in (6, 7, 8):
        return
    if series == "F" and rank == 4:
        return
    if series == "G" and rank == 2:
        return
    raise InvalidType(f"no simple type {series}{rank}")


def edges(series, rank):
    """Undirected Dynkin edges as (i, j, multiplicity), 0-based nodes.

    Multiplicity is the number of bonds; for multiplicity > 1 the first
    node is the one with the longer root (arrow points i -> j).
    """
    validate_type(series, rank)
    if series == "A":
        return [(i, i + 1, 1) for i in range(rank - 1)]
    if series == "B":
        # alpha_rank short: double bond from rank-2 (long) to rank-1 (short)
        return [(i, i + 1, 1) for i in range(rank - 2)] + [(rank - 2, rank - 1, 2)]
    if series == "C":
        # alpha_rank long: double bond from rank-1 (long) to rank-2 (short)
        return [(i, i + 1, 1) for i in range(rank - 2)] + [(rank - 1, rank - 2, 2)]
    if series == "D":
        return [(i, i + 1, 1) for i in range(rank - 3)] + [
            (rank - 3, rank - 2, 1),
            (rank - 3, rank - 1, 1),
        ]
    if series == "E":
        # Bourbaki: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4.
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        es = [(chain[i], chain[i + 1], 1) for i in range(len(chain) - 1)]
        es.append((1, 3, 1))
        return es
    if series == "F":
        return [(0, 1, 1), (1, 2, 2), (2, 3, 1)]
    if series == "G":
        # alpha_1 short, alpha_2 long: triple bond 2 -> 1
        return [(1, 0, 3)]
    raise InvalidType(f"no simple type {series}{rank}")


def cartan_matrix(series, rank):
    validate_type(series, rank)
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, mult in edges(series, rank):
        # arrow i -> j: alpha_i long, alpha_j short
        c[i][j] = -mult  # <alpha_j, alpha_i^vee>
        c[j][i] = -1
    return tuple(tuple(row) for row in c)


def orientation(series, rank):
    """Directed edge set for the structure-constant sign convention.

    The choice is stable under the diagram flip (A, D, E6) and under the
    triality rotation of D4, which keeps orbit-sum folding consistent.
    """
    validate_type(series, rank)
    if series not in SIMPLY_LACED:
        raise InvalidType(f"orientation only defined for simply laced types, not {series}")
    if series == "A":
        # orient toward the middle of the chain
        out = set()
        for i in range(rank - 1):
            if i < rank - 1 - i:
                out.add((i, i + 1))
            else:
                out.add((i + 1, i))
        return out
    if series == "D":
        out = {(i, i + 1) for i in range(rank - 3)}
        out.add((rank - 2, rank - 3))
        out.add((rank - 1, rank - 3))
        if rank == 4:
            # triality rotates nodes 0, 2, 3 around node 1
            return {(0, 1), (2, 1), (3, 1)}
        return out
    # E series: orient both chain ends toward node 4 (index 3)
    if rank == 6:
        return {(0, 2), (2, 3), (5, 4), (4, 3), (1, 3)}
    if rank == 7:
        return {(0, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6)}
    return {(0, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7)}


def diagram_automorphism(series, rank, order):
    """The standard diagram automorphism of the given order, as a node map."""
    validate_type(series, rank)
    if order == 1:
        return tuple(range(rank))
    if order == 2:
        if series == "A" and rank >= 2:
            return tuple(rank - 1 - i for i in range(rank))
        if series == "D" and rank >= 3:
            perm = list(range(rank))
            perm[rank - 2], perm[rank - 1] = perm[rank - 1], perm[rank - 2]
            return tuple(perm)
        if series == "E" and rank == 6:
            return (5, 1, 4, 3, 2, 0)
        raise InvalidTwistError(series, rank, order)
    if order == 3:
        if series == "D" and rank == 4:
            return (2, 1, 3, 0)
        raise InvalidTwistError(series, rank, order)
    raise InvalidTwistError(series, rank, order)


def InvalidTwistError(series, rank, order):
    from .errors import InvalidTwist

    return InvalidTwist(f"type {series}{rank} admits no pinned automorphism of order {order}")


def positive_roots(cartan):
    """All positive roots as integer coefficient tuples over the simples.

    Standard closure: walk up root strings using the Cartan pairings.
    """
    rank = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots = set(simples)
    frontier = set(simples)
    while frontier:
        new = set()
        for beta in frontier:
            for i in range(rank):
                pairing = sum(beta[j] * cartan[i][j] for j in range(rank))
                # length of the downward string through beta in direction i
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    t = tuple(cur)
                    if t in roots or (sum(abs(x) for x in t) == 0):
                        if sum(abs(x) for x in t) == 0:
                            break
                        p += 1
                    else:
                        break
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    t = tuple(up)
                    if t not in roots:
                        new.add(t)
        roots |= new
        frontier = new
    return sorted(roots, key=lambda v: (sum(v), v))


def classify_component(nodes, adj, lengths):
    """Name one connected diagram component.

    ``nodes``: node ids; ``adj``: {node: {other: bond multiplicity}};
    ``lengths``: {node: squared length of the simple root}.  Returns a
    (letter, rank) pair.  A rank-2 double bond is reported as C2.
    """
    n = len(nodes)
    if n == 1:
        return ("A", 1)
    mults = [adj[i][j] for i in nodes for j in adj[i] if i < j]
    if any(m == 3 for m in mults):
        if n != 2:
            raise InvalidType("triple bond in a component of rank != 2")
        return ("G", 2)
    if any(m == 2 for m in mults):
        pair = next((i, j) for i in nodes for j in adj[i] if i < j and adj[i][j] == 2)
        if n == 2:
            return ("C", 2)
        degrees = {i: len(adj[i]) for i in nodes}
        if any(d > 2 for d in degrees.values()):
            raise InvalidType("branch node in a multiply laced component")
        end = any(degrees[i] == 1 for i in pair)
        if not end:
            if n != 4:
                raise InvalidType("interior double bond outside F4")
            return ("F", 4)
        # B vs C: count how many simple roots are short
        short = min(lengths[i] for i in nodes)
        nshort = sum(1 for i in nodes if lengths[i] == short)
        return ("B", n) if nshort == 1 else ("C", n)
    degrees = {i: len(adj[i]) for i in nodes}
    branch = [i for i in nodes if degrees[i] == 3]
    if not branch:
        return ("A", n)
    if len(branch) > 1 or any(d > 3 for d in degrees.values()):
        raise InvalidType("diagram is not of finite type")
    b = branch[0]
    arms = []
    for start in adj[b]:
        length = 1
        prev, cur = b, start
        while True:
            nxt = [k for k in adj[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4) and n in (6, 7, 8):
        return ("E", n)
    raise InvalidType("diagram is not of finite type")
