"""H^0, H^1 and Ext^1 by direct linear algebra on cocycles.

Cocycles are flat vectors: for a Lie algebra the values f(e_1), ..., f(e_n)
concatenated; for a group the values f(g) for every element g in index order.
"""

from dataclasses import dataclass
import itertools

import numpy as np

from . import ff
from .algebra import is_lie
from .errors import InputError, ResourceCapError
from .modules import Module, hom_module, hom_to_matrix

MAX_UNKNOWNS = 2000


@dataclass
class CocycleSpace:
    z1_basis: np.ndarray  # rows
    b1_basis: np.ndarray  # rows
    h1_dim: int
    block: int  # module dimension (length of one value)

    def is_coboundary(self, c):
        return ff.in_span(c, self.b1_basis, self._p)

    def complement_reps(self):
        """Cocycles whose classes form a basis of H^1."""
        out = []
        e = ff.row_basis(self.b1_basis, self._p) if self.b1_basis.shape[0] else self.b1_basis
        cur = e
        for z in self.z1_basis:
            if not ff.in_span(z, cur, self._p):
                out.append(z)
                cur = ff.row_basis(np.vstack([cur, z]), self._p)
        return out


@dataclass
class ExtResult:
    dim: int
    representative_cocycles: list
    space: CocycleSpace


def h0(m):
    """Invariants: joint kernel of the action (Lie) / joint fixed space (group)."""
    p = m.p
    if m.dim == 0:
        return ff.zeros(0, 0)
    if is_lie(m.owner):
        rows = list(m.mats)
    else:
        rows = [(m.mats[g] - ff.eye(m.dim)) % p for g in m.owner.generators]
    if not rows:
        return ff.eye(m.dim)
    return ff.kernel_basis(np.vstack(rows), p).T


def cocycle_equations(m, full=False):
    """Matrix whose kernel is Z^1.

    Groups: the relation f(gh) = f(g) + g f(h) is imposed for every g and every
    generator h (which implies it for all h); ``full=True`` imposes it for all
    pairs.
    """
    a, d, p = m.owner, m.dim, m.p
    rows = []
    if is_lie(a):
        n = a.dim
        if n * d > MAX_UNKNOWNS:
            raise ResourceCapError("cocycle system above cap")
        for i in range(n):
            for j in range(i + 1, n):
                blk = ff.zeros(d, n * d)
                for k, c in enumerate(a.struct[i, j].tolist()):
                    if c:
                        blk[:, k * d:(k + 1) * d] += c * ff.eye(d)
                blk[:, j * d:(j + 1) * d] -= m.mats[i]
                blk[:, i * d:(i + 1) * d] += m.mats[j]
                rows.append(blk % p)
        width = n * d
    else:
        n = a.order_
        if n * d > MAX_UNKNOWNS:
            raise ResourceCapError("cocycle system above cap")
        hs = range(n) if full else a.generators
        for g in range(n):
            for h in hs:
                blk = ff.zeros(d, n * d)
                gh = a.mul(g, h)
                blk[:, gh * d:(gh + 1) * d] += ff.eye(d)
                blk[:, g * d:(g + 1) * d] -= ff.eye(d)
                blk[:, h * d:(h + 1) * d] -= m.mats[g]
                rows.append(blk % p)
        e = a.identity
        blk = ff.zeros(d, n * d)
        blk[:, e * d:(e + 1) * d] = ff.eye(d)
        rows.append(blk)
        width = n * d
    if not rows:
        return ff.zeros(0, width)
    return np.vstack(rows) % p


def coboundaries(m):
    a, d, p = m.owner, m.dim, m.p
    vecs = []
    for v in ff.eye(d):
        if is_lie(a):
            vecs.append(np.concatenate([x @ v % p for x in m.mats]))
        else:
            vecs.append(np.concatenate([(x @ v - v) % p for x in m.mats]))
    width = (a.dim if is_lie(a) else a.order_) * d
    if not vecs:
        return ff.zeros(0, width)
    return ff.row_basis(np.array(vecs), p)


def h1(m, full=False):
    """Z^1, B^1 and dim H^1(owner, m)."""
    p = m.p
    eq = cocycle_equations(m, full)
    width = eq.shape[1]
    z = ff.kernel_basis(eq, p).T if eq.shape[0] else ff.eye(width)
    b = coboundaries(m)
    for v in b:
        assert ff.in_span(v, z, p), "coboundary is not a cocycle"
    cs = CocycleSpace(z, b, z.shape[0] - b.shape[0], m.dim)
    cs._p = p
    return cs


def ext1(v, w):
    """Ext^1(v, w): extensions with submodule w and quotient v."""
    cs = h1(hom_module(v, w))
    return ExtResult(cs.h1_dim, cs.complement_reps(), cs)


def cocycle_values(c, owner, vdim, wdim):
    """Split a flat Hom(V, W)-valued cocycle into per-element w x v matrices."""
    k = vdim * wdim
    count = owner.dim if is_lie(owner) else owner.order_
    return [hom_to_matrix(c[i * k:(i + 1) * k], vdim, wdim) for i in range(count)]


def extension_from_cocycle(v, w, c):
    """The extension module on W + V (W first, a submodule; V the quotient).

    Lie: x -> [[w_x, c(x)], [0, v_x]]. Groups: g -> [[w_g, c(g) v_g], [0, v_g]].
    """
    if v.owner is not w.owner or v.p != w.p:
        raise InputError("modules must share owner and field")
    h = hom_module(v, w)
    c = np.asarray(c, dtype=np.int64) % v.p
    eq = cocycle_equations(h)
    if c.shape != (eq.shape[1],) or (eq @ c % v.p).any():
        raise InputError("not a cocycle")
    vals = cocycle_values(c, v.owner, v.dim, w.dim)
    p, dv, dw = v.p, v.dim, w.dim
    mats = []
    for i, f in enumerate(vals):
        x = ff.zeros(dw + dv, dw + dv)
        x[:dw, :dw] = w.mats[i]
        x[dw:, dw:] = v.mats[i]
        x[:dw, dw:] = f if is_lie(v.owner) else f @ v.mats[i]
        mats.append(x % p)
    return Module(v.owner, p, mats, name="ext")


def invariant_complements(x, wdim, limit=None):
    """Invariant complements to the submodule spanned by the first ``wdim`` coordinates.

    Exhaustive over the graphs of all linear maps V -> W.
    """
    p = x.p
    vdim = x.dim - wdim
    if p ** (vdim * wdim) > (limit or 200_000):
        raise ResourceCapError("complement search above cap")
    from .modules import is_invariant

    out = []
    for phi in itertools.product(range(p), repeat=vdim * wdim):
        f = np.array(phi, dtype=np.int64).reshape(wdim, vdim)
        rows = np.hstack([f.T, ff.eye(vdim)]) % p
        if is_invariant(x, rows):
            out.append(rows)
    return out


def is_split(x, wdim):
    return bool(invariant_complements(x, wdim))
