"""F_p-representations of Lie algebras and finite groups.

A :class:`Module` stores one matrix per basis element (Lie) or per group
element (groups). Matrices act on column vectors.
"""

from dataclasses import dataclass, field
import math
import random

import numpy as np

from . import ff
from .algebra import LieAlgebra, Subspace, is_lie
from .errors import InputError, ValidationError

EXHAUSTIVE_BITS = 16


class Module:
    def __init__(self, owner, p, mats, name="", validate=True, dim=None):
        self.owner = owner
        self.p = p
        self.mats = tuple(np.asarray(m, dtype=np.int64).reshape(np.shape(m)) % p for m in mats)
        for m in self.mats:
            m.setflags(write=False)
        if self.mats:
            self.dim = self.mats[0].shape[0]
        elif dim is None:
            raise InputError("dim is required when there are no acting matrices")
        else:
            self.dim = dim
        self.name = name
        self._fp = None
        if validate:
            self.validate()

    @property
    def gens(self):
        """Matrices whose span/products generate the action."""
        if is_lie(self.owner):
            return self.mats
        return [self.mats[g] for g in self.owner.generators]

    def act(self, x):
        if is_lie(self.owner):
            x = np.asarray(x, dtype=np.int64)
            out = ff.zeros(self.dim, self.dim)
            for c, m in zip(x.tolist(), self.mats):
                if c:
                    out = out + c * m
            return out % self.p
        return self.mats[int(x)]

    def validate(self):
        p, n, d = self.p, self.owner, self.dim
        if is_lie(n):
            if len(self.mats) != n.dim:
                raise ValidationError("need one matrix per basis element")
            for i in range(n.dim):
                for j in range(i + 1, n.dim):
                    lhs = self.act(n.struct[i, j])
                    a, b = self.mats[i], self.mats[j]
                    if np.any((lhs - (a @ b - b @ a)) % p):
                        raise ValidationError(f"action fails the bracket relation on ({n.names[i]}, {n.names[j]})")
        else:
            if len(self.mats) != n.order_:
                raise ValidationError("need one matrix per group element")
            if np.any(self.mats[n.identity] != ff.eye(d)):
                raise ValidationError("identity does not act as the identity matrix")
            for g in range(n.order_):
                for h in n.generators:
                    if np.any((self.mats[g] @ self.mats[h]) % p != self.mats[n.mul(g, h)]):
                        raise ValidationError(f"action is not a homomorphism at ({g}, {h})")

    def fingerprint(self):
        """Isomorphism invariant: dim plus the charpoly of every acting matrix."""
        if self._fp is None:
            mats = self.mats
            self._fp = (self.dim, tuple(ff.charpoly(m, self.p) for m in mats))
        return self._fp

    def is_trivial(self):
        if is_lie(self.owner):
            return not any(m.any() for m in self.mats)
        return all(np.array_equal(m, ff.eye(self.dim)) for m in self.mats)

    def __repr__(self):
        return f"Module({self.name or '?'}, dim={self.dim}, p={self.p})"


def trivial(owner, p):
    if is_lie(owner):
        return Module(owner, p, [ff.zeros(1, 1)] * owner.dim, "F", validate=False, dim=1)
    return Module(owner, p, [ff.eye(1)] * owner.order_, "F", validate=False)


def _same_owner(m, n):
    if m.owner is not n.owner or m.p != n.p:
        raise InputError("modules must share owner and field")


# constructions -------------------------------------------------------------

class Reducer:
    """Projection of F_p^n onto the coordinates complementary to an RREF basis."""

    def __init__(self, basis, n, p):
        self.basis, self.p = np.asarray(basis, dtype=np.int64), p
        self.piv = [int(np.nonzero(r)[0][0]) for r in self.basis]
        self.keep = [i for i in range(n) if i not in self.piv]

    def reduce(self, v):
        v = np.asarray(v, dtype=np.int64) % self.p
        for r, c in zip(self.basis, self.piv):
            if v[c]:
                v = (v - v[c] * r) % self.p
        return v

    def project(self, v):
        return self.reduce(v)[self.keep]


def chief_factor_module(alg, upper, lower, p=None, check=True):
    """The section upper/lower as a module, written additively.

    Lie: x acts by [x, -]. Groups: g acts by conjugation, g[a] = [g a g^-1].
    """
    if is_lie(alg):
        p = alg.p
        if not (alg.is_ideal(upper) and alg.is_ideal(lower) and lower <= upper):
            raise InputError("chief factor needs ideals lower <= upper")
        red = Reducer(lower.basis, alg.dim, p)
        reps = ff.row_basis(np.array([red.reduce(v) for v in upper.basis]).reshape(-1, alg.dim), p)
        mats = []
        for e in ff.eye(alg.dim):
            cols = [red.reduce(alg.bracket(e, r)) for r in reps]
            if reps.shape[0]:
                mats.append(ff.coords(np.array(cols), reps, p).T)
            else:
                mats.append(ff.zeros(0, 0))
        m = Module(alg, p, mats, name="[A/B]", dim=reps.shape[0])
    else:
        m = _group_section_module(alg, upper, lower, p)
    if check and not is_irreducible(m):
        raise InputError("section is not a chief factor (module is reducible)")
    return m


def section_coordinates(g, upper, lower):
    """Identify upper/lower (elementary abelian) with F_q^k.

    Returns ``(q, gens, coord)`` where ``coord[a]`` is the coordinate tuple of
    the coset of ``a`` for every a in upper.
    """
    from .algebra import section_prime

    if not (g.is_ideal(upper) and g.is_ideal(lower) and lower <= upper):
        raise InputError("section needs normal subgroups lower <= upper")
    q = section_prime(g, upper, lower)
    gens = []
    h = lower
    for a in sorted(upper):
        if a not in h:
            gens.append(a)
            h = g.subgroup_closure(set(h) | {a})
    if len(h) != len(upper):
        raise InputError("section generation failed")
    if len(upper) // len(lower) != q ** len(gens):
        raise InputError("section is not elementary abelian")
    coord = {}
    import itertools

    for exps in itertools.product(range(q), repeat=len(gens)):
        x = g.identity
        for a, e in zip(gens, exps):
            x = g.mul(x, g.power(a, e))
        for b in lower:
            y = g.mul(x, b)
            if y in coord and coord[y] != exps:
                raise InputError("section is not elementary abelian")
            coord[y] = exps
    return q, gens, coord


def _group_section_module(g, upper, lower, p=None):
    q, gens, coord = section_coordinates(g, upper, lower)
    if p is not None and p != q:
        raise InputError(f"section has characteristic {q}, not {p}")
    k = len(gens)
    mats = []
    for x in range(g.order_):
        m = ff.zeros(k, k)
        for j, a in enumerate(gens):
            m[:, j] = coord[g.conj(x, a)]
        mats.append(m)
    return Module(g, q, mats, name="[A/B]")


def dual(m):
    p = m.p
    if is_lie(m.owner):
        mats = [(-a.T) % p for a in m.mats]
    else:
        inv = m.owner.inverse
        mats = [m.mats[inv[g]].T for g in range(m.owner.order_)]
    return Module(m.owner, p, mats, name=f"{m.name}*" if m.name else "", validate=False, dim=m.dim)


def tensor(m, n):
    _same_owner(m, n)
    p = m.p
    if is_lie(m.owner):
        im, in_ = ff.eye(m.dim), ff.eye(n.dim)
        mats = [(np.kron(a, in_) + np.kron(im, b)) % p for a, b in zip(m.mats, n.mats)]
    else:
        mats = [np.kron(a, b) % p for a, b in zip(m.mats, n.mats)]
    return Module(m.owner, p, mats, name=f"({m.name} (x) {n.name})", validate=False, dim=m.dim * n.dim)


def hom_module(m, n):
    """Hom(m, n) realised as dual(m) (x) n.

    A map F (an n.dim x m.dim matrix) has coordinate vector ``F.T.flatten()``.
    """
    return tensor(dual(m), n)


def hom_to_matrix(vec, m_dim, n_dim):
    return np.asarray(vec).reshape(m_dim, n_dim).T


def matrix_to_hom(f):
    return np.asarray(f).T.reshape(-1)


def check_hom_natural(m, n):
    """The identification Hom(m,n) = m* (x) n is equivariant on the basis."""
    h = hom_module(m, n)
    p = m.p
    for idx in range(h.dim):
        vec = ff.eye(h.dim)[idx]
        f = hom_to_matrix(vec, m.dim, n.dim)
        for x in _acting_elements(m.owner):
            if is_lie(m.owner):
                expect = (n.act(x) @ f - f @ m.act(x)) % p
            else:
                expect = (n.act(x) @ f @ m.act(m.owner.inverse[x])) % p
            if not np.array_equal(hom_to_matrix(h.act(x) @ vec % p, m.dim, n.dim), expect):
                return False
    return True


def _acting_elements(owner):
    if is_lie(owner):
        return list(ff.eye(owner.dim))
    return list(owner.generators)


def direct_sum(m, n):
    _same_owner(m, n)
    mats = []
    for a, b in zip(m.mats, n.mats):
        z = ff.zeros(m.dim + n.dim, m.dim + n.dim)
        z[: m.dim, : m.dim] = a
        z[m.dim:, m.dim:] = b
        mats.append(z)
    return Module(m.owner, m.p, mats, validate=False, dim=m.dim + n.dim)


# submodules ----------------------------------------------------------------

class Echelon:
    """Incrementally maintained RREF basis."""

    def __init__(self, n, p):
        self.n, self.p = n, p
        self.rows = []
        self.piv = []

    def reduce(self, v):
        v = np.asarray(v, dtype=np.int64) % self.p
        for r, c in zip(self.rows, self.piv):
            if v[c]:
                v = (v - v[c] * r) % self.p
        return v

    def add(self, v):
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return None
        c = int(nz[0])
        v = v * ff.inv(v[c], self.p) % self.p
        for i, r in enumerate(self.rows):
            if r[c]:
                self.rows[i] = (r - r[c] * v) % self.p
        self.rows.append(v)
        self.piv.append(c)
        return v

    def __len__(self):
        return len(self.rows)

    def basis(self):
        if not self.rows:
            return ff.zeros(0, self.n)
        return ff.row_basis(np.array(self.rows), self.p)


def spin(m, vecs):
    """Smallest invariant subspace containing ``vecs`` (RREF row basis)."""
    e = Echelon(m.dim, m.p)
    queue = []
    for v in vecs:
        w = e.add(v)
        if w is not None:
            queue.append(w)
    gens = m.gens
    while queue:
        u = queue.pop()
        for a in gens:
            w = e.add(a @ u % m.p)
            if w is not None:
                queue.append(w)
            if len(e) == m.dim:
                return ff.eye(m.dim)
    return e.basis()


def is_invariant(m, basis):
    basis = np.asarray(basis, dtype=np.int64).reshape(-1, m.dim)
    if basis.shape[0] == 0:
        return True
    return all(ff.in_span(a @ v % m.p, basis, m.p) for a in m.gens for v in basis)


def submodule(m, basis):
    basis = ff.row_basis(np.asarray(basis, dtype=np.int64).reshape(-1, m.dim), m.p)
    if not is_invariant(m, basis):
        raise InputError("subspace is not invariant")
    k = basis.shape[0]
    mats = []
    for a in m.mats:
        mats.append(ff.coords((a @ basis.T % m.p).T, basis, m.p).T if k else ff.zeros(0, 0))
    return Module(m.owner, m.p, mats, validate=False, dim=k)


def quotient_module(m, basis):
    basis = ff.row_basis(np.asarray(basis, dtype=np.int64).reshape(-1, m.dim), m.p)
    red = Reducer(basis, m.dim, m.p)
    e = ff.eye(m.dim)
    mats = []
    for a in m.mats:
        cols = [red.project(a @ e[j] % m.p) for j in red.keep]
        k = len(red.keep)
        mats.append(np.array(cols, dtype=np.int64).reshape(k, k).T if k else ff.zeros(0, 0))
    return Module(m.owner, m.p, mats, validate=False, dim=len(red.keep))


def _seeds(m, seed):
    """Seeded random vectors, then (below the cap) every projective point."""
    rng = random.Random(seed)
    for _ in range(min(8, m.p ** m.dim)):
        v = np.array([rng.randrange(m.p) for _ in range(m.dim)], dtype=np.int64)
        if v.any():
            yield v
    if m.dim * math.log2(m.p) <= EXHAUSTIVE_BITS:
        yield from ff.projective_points(m.dim, m.p)
    else:
        for _ in range(400):
            v = np.array([rng.randrange(m.p) for _ in range(m.dim)], dtype=np.int64)
            if v.any():
                yield v


def proper_submodule(m, seed=0):
    """A proper nonzero invariant subspace, or None if there is none.

    Every cyclic submodule is tried when dim*log2(p) is at most
    ``EXHAUSTIVE_BITS``, so ``None`` is a proof of irreducibility; above that
    only sampled vectors are spun and an unsuccessful search raises
    ResourceCapError.
    """
    if m.dim <= 1:
        return None
    # eigenvectors of the first generators are cheap candidates
    for a in m.gens[:3]:
        for lam in range(m.p):
            k = ff.kernel_basis((a - lam * ff.eye(m.dim)) % m.p, m.p)
            if 0 < k.shape[1]:
                s = spin(m, [k[:, 0]])
                if s.shape[0] < m.dim:
                    return s
    for v in _seeds(m, seed):
        s = spin(m, [v])
        if s.shape[0] < m.dim:
            return s
    if m.dim * math.log2(m.p) > EXHAUSTIVE_BITS:
        from .errors import ResourceCapError

        raise ResourceCapError(f"irreducibility of a {m.dim}-dim module over F_{m.p} not decided by sampling")
    return None


def is_irreducible(m, seed=0):
    return m.dim > 0 and proper_submodule(m, seed) is None


@dataclass
class CompositionList:
    factors: list  # (Module, multiplicity)
    chain_dims: list = field(default_factory=list)

    @property
    def total_dim(self):
        return sum(f.dim * k for f, k in self.factors)

    def modules(self):
        return [f for f, _ in self.factors]


def chop(m, seed=0):
    """Irreducible composition factors, in submodule-chain order."""
    if m.dim == 0:
        return []
    s = proper_submodule(m, seed)
    if s is None:
        return [m]
    return chop(submodule(m, s), seed) + chop(quotient_module(m, s), seed)


def composition_factors(m, seed=0):
    raw = chop(m, seed)
    groups = []
    for f in raw:
        for i, (g, k) in enumerate(groups):
            if is_isomorphic(f, g, irreducible=True):
                groups[i] = (g, k + 1)
                break
        else:
            groups.append((f, 1))
    return CompositionList(groups, [f.dim for f in raw])


def intertwiners(m, n):
    """Basis of Hom_owner(m, n) as a list of n.dim x m.dim matrices."""
    _same_owner(m, n)
    p = m.p
    im, in_ = ff.eye(m.dim), ff.eye(n.dim)
    if is_lie(m.owner):
        pairs = zip(m.mats, n.mats)
    else:
        pairs = ((m.mats[g], n.mats[g]) for g in m.owner.generators)
    rows = [(np.kron(in_, a.T) - np.kron(b, im)) % p for a, b in pairs]
    if not rows or m.dim * n.dim == 0:
        k = ff.eye(m.dim * n.dim)
    else:
        k = ff.kernel_basis(np.vstack(rows), p)
    return [k[:, j].reshape(n.dim, m.dim) for j in range(k.shape[1])]


RANDOM_TRIES = 4000


def is_isomorphic(m, n, irreducible=None):
    """Isomorphism test.

    For irreducibles, Schur's lemma makes a nonzero intertwiner invertible.
    Otherwise an invertible intertwiner is searched for: exhaustively when
    the intertwiner space is small, else by seeded random combinations. Units
    are a large fraction of a finite endomorphism ring, so a miss after many
    tries is reported as undecided (ResourceCapError), never as "no".
    """
    if m.dim != n.dim or m.p != n.p:
        return False
    if m.dim == 0:
        return True
    if m.fingerprint() != n.fingerprint():
        return False
    ts = intertwiners(m, n)
    if not ts:
        return False
    if irreducible or (irreducible is None and is_irreducible(m) and is_irreducible(n)):
        assert ff.rank(ts[0], m.p) == m.dim, "Schur: nonzero map between irreducibles must be invertible"
        return True
    if m.p ** len(ts) <= 4096:
        import itertools

        for cs in itertools.product(range(m.p), repeat=len(ts)):
            t = sum(c * x for c, x in zip(cs, ts)) % m.p
            if ff.rank(t, m.p) == m.dim:
                return True
        return False
    if not multiset_equal(composition_factors(m), composition_factors(n)):
        return False
    rng = random.Random(0)
    for _ in range(RANDOM_TRIES):
        t = sum(rng.randrange(m.p) * x for x in ts) % m.p
        if ff.rank(t, m.p) == m.dim:
            return True
    from .errors import ResourceCapError

    raise ResourceCapError("isomorphism undecided: no invertible intertwiner found by random search")


def multiset_equal(a, b):
    left = list(b.factors)
    for f, k in a.factors:
        for i, (g, j) in enumerate(left):
            if j == k and is_isomorphic(f, g, irreducible=True):
                left.pop(i)
                break
        else:
            return False
    return not left


# change of algebra ---------------------------------------------------------

def restrict(m, sub):
    """Restriction to a subalgebra/subgroup; the result's owner is ``sub`` as an algebra."""
    if is_lie(m.owner):
        alg, rows = m.owner.subalgebra(sub)
        mats = [m.act(r) for r in rows]
    else:
        alg, elts = m.owner.subgroup(sub)
        mats = [m.mats[g] for g in elts]
    return Module(alg, m.p, mats, name=f"{m.name}|", validate=True, dim=m.dim)


def inflate(m, q):
    """A module of ``q.algebra`` pulled back along the projection of ``q``."""
    parent = q.parent
    if is_lie(parent):
        mats = [m.act(q.project(e)) for e in ff.eye(parent.dim)]
    else:
        mats = [m.mats[q.project(g)] for g in range(parent.order_)]
    return Module(parent, m.p, mats, name=m.name, validate=False, dim=m.dim)


def deflate(m, q):
    """A module of ``q.parent`` on which ``q.kernel`` acts trivially, over the quotient."""
    parent = q.parent
    if is_lie(parent):
        if any(m.act(v).any() for v in q.kernel.basis):
            raise InputError("kernel does not act trivially")
        mats = [m.act(q.lift(e)) for e in ff.eye(q.algebra.dim)]
    else:
        if any(not np.array_equal(m.mats[g], ff.eye(m.dim)) for g in q.kernel):
            raise InputError("kernel does not act trivially")
        mats = [m.mats[q.lift(i)] for i in range(q.algebra.order_)]
    return Module(q.algebra, m.p, mats, name=m.name, validate=False, dim=m.dim)


def action_kernel(m):
    """The ideal/normal subgroup acting trivially."""
    owner = m.owner
    if is_lie(owner):
        if m.dim == 0 or owner.dim == 0:
            return owner.whole()
        a = np.array([x.reshape(-1) for x in m.mats]).T
        return Subspace(ff.kernel_basis(a, m.p).T, m.p, owner.dim)
    return frozenset(g for g in range(owner.order_) if np.array_equal(m.mats[g], ff.eye(m.dim)))


def acts_trivially(m, sub):
    if is_lie(m.owner):
        return all(not m.act(v).any() for v in sub.basis)
    return all(np.array_equal(m.mats[g], ff.eye(m.dim)) for g in sub)


# evaluation ----------------------------------------------------------------

def evaluation_map(v, w, a_basis):
    """Matrix of eps: V (x) A -> W where A has row basis ``a_basis`` inside Hom(V, W)."""
    cols = []
    for i in range(v.dim):
        for f in a_basis:
            cols.append(hom_to_matrix(f, v.dim, w.dim)[:, i])
    if not cols:
        return ff.zeros(w.dim, 0)
    return np.array(cols, dtype=np.int64).T % v.p


def evaluation_image(v, w, a_basis, check=True):
    """eps(V (x) A) = span{f(x)} as an RREF row basis of an invariant subspace of W.

    ``a_basis`` is a row basis of an invariant subspace of hom_module(v, w).
    """
    _same_owner(v, w)
    h = hom_module(v, w)
    a_basis = ff.row_basis(np.asarray(a_basis, dtype=np.int64).reshape(-1, h.dim), v.p)
    if not is_invariant(h, a_basis):
        raise InputError("A is not a submodule of Hom(V, W)")
    e = evaluation_map(v, w, a_basis)
    if check and a_basis.shape[0]:
        a_mod = submodule(h, a_basis)
        src = tensor(v, a_mod)
        for x in _acting_elements(v.owner):
            assert np.array_equal(e @ src.act(x) % v.p, w.act(x) @ e % v.p), "evaluation is not a module map"
    img = ff.row_basis(e.T, v.p) if e.shape[1] else ff.zeros(0, w.dim)
    assert is_invariant(w, img)
    return img
