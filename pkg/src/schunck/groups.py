"""Small solvable groups built from permutations or matrices."""

import itertools

import numpy as np

from .algebra import FiniteGroup


def closure(gens, mul, identity):
    """All products of ``gens``; elements must be hashable and sortable."""
    elts = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elts:
                    elts.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(elts)


def from_elements(elts, mul, identity, name=""):
    pos = {x: i for i, x in enumerate(elts)}
    table = np.array([[pos[mul(a, b)] for b in elts] for a in elts], dtype=np.int64)
    return FiniteGroup(table, pos[identity], name=name)


def perm_mul(a, b):
    """(a*b)(i) = a(b(i))"""
    return tuple(a[i] for i in b)


def perm_group(gens, name=""):
    n = len(gens[0])
    ident = tuple(range(n))
    return from_elements(closure(gens, perm_mul, ident), perm_mul, ident, name)


def matrix_group(gens, p, name=""):
    gens = [tuple(map(tuple, np.asarray(g) % p)) for g in gens]
    n = len(gens[0])
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def mul(a, b):
        return tuple(map(tuple, (np.array(a) @ np.array(b) % p).tolist()))

    return from_elements(closure(gens, mul, ident), mul, ident, name)


def cycle(n, pts, total):
    p = list(range(total))
    for i, x in enumerate(pts):
        p[x] = pts[(i + 1) % len(pts)]
    return tuple(p)


def cyclic(n):
    return perm_group([cycle(n, list(range(n)), n)], name=f"C{n}")


def dihedral(n):
    """Dihedral group of order 2n."""
    r = tuple((i + 1) % n for i in range(n))
    s = tuple((-i) % n for i in range(n))
    return perm_group([r, s], name=f"D{n}" if n != 4 else "D4")


def symmetric(n):
    gens = [cycle(n, [0, 1], n)]
    if n > 2:
        gens.append(cycle(n, list(range(n)), n))
    return perm_group(gens, name=f"S{n}")


def alternating4():
    return perm_group([cycle(3, [0, 1, 2], 4), cycle(3, [1, 2, 3], 4)], name="A4")


def quaternion():
    return matrix_group([[[0, 1], [2, 0]], [[1, 1], [1, 2]]], 3, name="Q8")


def sl23():
    return matrix_group([[[1, 1], [0, 1]], [[1, 0], [1, 1]]], 3, name="SL(2,3)")


def dicyclic12():
    """C3 x| C4 with the generator of C4 inverting C3."""
    a = cycle(7, [0, 1, 2], 7)
    b = perm_mul(cycle(7, [0, 1], 7), cycle(7, [3, 4, 5, 6], 7))
    return perm_group([a, b], name="C3:C4")


def direct_product(g, h, name=""):
    out = g.direct_product(h)
    out.name = name or f"{g.name}x{h.name}"
    return out


def semidirect(m_dim, p, q, action, name=""):
    """F_p^m_dim x| q where ``action[g]`` is the matrix of g in q."""
    from .algebra import FiniteGroup

    vecs = list(itertools.product(range(p), repeat=m_dim))
    pos = {v: i for i, v in enumerate(vecs)}
    nv, nq = len(vecs), q.order_
    arr = np.array(vecs, dtype=np.int64).reshape(nv, m_dim)
    table = np.empty((nq * nv, nq * nv), dtype=np.int64)
    for g1 in range(nq):
        moved = (arr @ np.asarray(action[g1]).T) % p
        for i1 in range(nv):
            for g2 in range(nq):
                g = q.mul(g1, g2)
                for i2 in range(nv):
                    v = tuple(((arr[i1] + moved[i2]) % p).tolist())
                    table[g1 * nv + i1, g2 * nv + i2] = g * nv + pos[v]
    return FiniteGroup(table, q.identity * nv + pos[(0,) * m_dim], name=name)
