"""Isomorphism search between small Lie algebras and between small groups.

Both searches backtrack over images of a generating set, pruned by cheap
invariants of single elements.
"""

import numpy as np

from . import ff
from .algebra import is_lie
from .errors import ResourceCapError

SEARCH_CAP = 2_000_000


def _annihilator(sub, n, p):
    """Columns c with v in sub iff v @ c == 0."""
    if sub.dim == 0:
        return ff.eye(n)
    return ff.kernel_basis(sub.basis, p)


def lie_invariants(alg):
    """Per-element invariant used to prune image candidates (cached on the algebra)."""
    cached = getattr(alg, "_iso_inv", None)
    if cached is not None:
        return cached
    p, n = alg.p, alg.dim
    elts = alg.all_elements()
    ads = np.einsum("vi,ijk->vkj", elts, alg.struct) % p
    in_d = ~((elts @ _annihilator(alg.derived(), n, p)) % p).any(axis=1)
    in_z = ~((elts @ _annihilator(alg.center(), n, p)) % p).any(axis=1)
    memo = {}
    inv = {}
    for v, a, d, z in zip(elts.tolist(), ads, in_d.tolist(), in_z.tolist()):
        key = a.tobytes()
        if key not in memo:
            memo[key] = (ff.rank(a, p), ff.charpoly(a, p))
        inv[tuple(v)] = memo[key] + (d, z)
    alg._iso_inv = inv
    return inv


def lie_fingerprint(alg):
    """Isomorphism invariant of a Lie algebra (hashable)."""
    inv = lie_invariants(alg)
    counts = {}
    for val in inv.values():
        counts[val] = counts.get(val, 0) + 1
    dims = tuple(s.dim for s in alg.derived_series())
    return (alg.p, alg.dim, dims, alg.center().dim, tuple(sorted(counts.items())))


def lie_isomorphisms(a, b, first=False, cap=SEARCH_CAP):
    """All isomorphisms a -> b as matrices M (columns = images of a's basis).

    With ``first=True`` stop after one.
    """
    if a.p != b.p or a.dim != b.dim:
        return []
    p, n = a.p, a.dim
    if n == 0:
        return [ff.zeros(0, 0)]
    ia, ib = lie_invariants(a), lie_invariants(b)
    cands = []
    for e in ff.eye(n):
        key = ia[tuple(e.tolist())]
        cands.append([np.array(v, dtype=np.int64) for v, k in ib.items() if k == key and any(v)])
    # a bracket [e_i, e_j] can be checked once every basis vector in its support is placed
    ready = {}
    for i in range(n):
        for j in range(i + 1, n):
            sup = [k for k, c in enumerate(a.struct[i, j].tolist()) if c]
            ready.setdefault(max([j] + sup), []).append((i, j))
    cands = [np.array(c, dtype=np.int64).reshape(-1, n) for c in cands]
    out = []
    steps = [0]
    img = [None] * n

    def survivors(level):
        """Candidates for e_level compatible with every bracket that becomes checkable."""
        c = cands[level]
        keep = np.ones(len(c), dtype=bool)
        x = lambda k: img[k][None, :] if k < level else c
        for i, j in ready.get(level, []):
            lhs = np.zeros((len(c), n), dtype=np.int64)
            for k, coef in enumerate(a.struct[i, j].tolist()):
                if coef:
                    lhs = lhs + coef * x(k)
            xi, xj = np.broadcast_to(x(i), c.shape), np.broadcast_to(x(j), c.shape)
            rhs = np.einsum("mj,mjk->mk", xj, np.tensordot(xi, b.struct, axes=(1, 0)))
            keep &= ~((lhs - rhs) % p).any(axis=1)
        return c[keep]

    def go(level, span):
        if level == n:
            out.append(np.array(img, dtype=np.int64).T % p)
            return first
        for v in survivors(level):
            steps[0] += 1
            if steps[0] > cap:
                raise ResourceCapError("isomorphism search above cap")
            if tuple(v.tolist()) in span:
                continue
            img[level] = v
            wider = span if level == n - 1 else {tuple(((np.array(s) + c * v) % p).tolist())
                                                 for s in span for c in range(p)}
            if go(level + 1, wider):
                return True
        img[level] = None
        return False

    go(0, {(0,) * n})
    return out


def is_lie_isomorphic(a, b):
    if lie_fingerprint(a) != lie_fingerprint(b):
        return False
    return bool(lie_isomorphisms(a, b, first=True))


def group_homomorphism(g, h, images):
    """Extend generator images to a map g -> h; None if not a homomorphism."""
    gens = g.generators
    f = {g.identity: h.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(gens, images):
                y = g.mul(x, s)
                fy = h.mul(f[x], t)
                if y in f:
                    if f[y] != fy:
                        return None
                else:
                    f[y] = fy
                    nxt.append(y)
        frontier = nxt
    return [f[x] for x in range(g.order_)]


def group_isomorphisms(g, h, first=False, cap=SEARCH_CAP):
    """All isomorphisms g -> h as lists ``f[x]``."""
    if g.order_ != h.order_:
        return []
    gens = g.generators
    if not gens:
        return [[h.identity]]
    cands = [[y for y in range(h.order_) if h.elt_order[y] == g.elt_order[s]] for s in gens]
    out, seen = [], set()
    steps = 0
    idx = [0] * len(gens)

    def rec(level, chosen):
        nonlocal steps
        if level == len(gens):
            steps += 1
            if steps > cap:
                raise ResourceCapError("isomorphism search above cap")
            f = group_homomorphism(g, h, chosen)
            if f is not None and len(set(f)) == h.order_ and tuple(f) not in seen:
                seen.add(tuple(f))
                out.append(f)
                return first
            return False
        for y in cands[level]:
            if rec(level + 1, chosen + [y]):
                return True
        return False

    rec(0, [])
    return out


def group_fingerprint(g):
    orders = sorted(int(x) for x in g.elt_order)
    return (g.order_, tuple(orders), len(g.derived()), len(g.center()), len(g.ideals()))


def is_group_isomorphic(g, h):
    if group_fingerprint(g) != group_fingerprint(h):
        return False
    return bool(group_isomorphisms(g, h, first=True))


def fingerprint(alg):
    return lie_fingerprint(alg) if is_lie(alg) else group_fingerprint(alg)


def is_isomorphic(a, b):
    if is_lie(a) != is_lie(b):
        return False
    return is_lie_isomorphic(a, b) if is_lie(a) else is_group_isomorphic(a, b)
