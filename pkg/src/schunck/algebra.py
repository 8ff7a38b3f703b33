"""Solvable Lie algebras over F_p and finite solvable groups.

Both classes expose the same structural vocabulary so that everything
downstream (modules, blocks, classes) can be written once:

* substructures: :class:`Subspace` for Lie algebras, ``frozenset`` of
  element indices for groups;
* ``ideals``, ``minimal_ideals``, ``centralizer``, ``quotient``,
  ``chief_series``, ``is_primitive``, ``complements``, ``frattini``,
  ``nilpotent_length``.

"Ideal" means normal subgroup for groups throughout.
"""

from dataclasses import dataclass, field
import itertools
import random

import numpy as np

from . import ff
from .errors import InputError, ResourceCapError, ValidationError


@dataclass
class Caps:
    max_dim: int = 6
    max_order: int = 48
    max_search: int = 600_000


CAPS = Caps()


class Subspace:
    """A subspace of F_p^n held as a canonical RREF row basis."""

    __slots__ = ("basis", "p", "_key")

    def __init__(self, rows, p, n=None):
        rows = np.asarray(rows, dtype=np.int64)
        if rows.size == 0:
            rows = ff.zeros(0, n if n is not None else rows.shape[-1])
        self.basis = ff.row_basis(rows % p, p)
        self.basis.setflags(write=False)
        self.p = p
        self._key = (self.basis.shape[1], tuple(map(tuple, self.basis.tolist())))

    @property
    def dim(self):
        return self.basis.shape[0]

    @property
    def ambient(self):
        return self.basis.shape[1]

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        return isinstance(other, Subspace) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def sort_key(self):
        return (self.dim, self._key[1])

    def __le__(self, other):
        return all(ff.in_span(v, other.basis, self.p) for v in self.basis)

    def __lt__(self, other):
        return self.dim < other.dim and self <= other

    def contains(self, v):
        return ff.in_span(v, self.basis, self.p)

    def __add__(self, other):
        return Subspace(np.vstack([self.basis, other.basis]), self.p, self.ambient)

    def __and__(self, other):
        return Subspace(ff.intersect(self.basis, other.basis, self.p), self.p, self.ambient)

    def __repr__(self):
        if not self.dim:
            return "0"
        return "span(" + ", ".join(str(list(r)) for r in self.basis.tolist()) + ")"


def sort_subs(subs):
    return sorted(subs, key=lambda s: s.sort_key() if isinstance(s, Subspace) else (len(s), tuple(sorted(s))))


@dataclass
class Quotient:
    """``parent / kernel`` with its canonical transversal."""

    parent: object
    kernel: object
    algebra: object
    _project: object = field(repr=False)
    _lift: object = field(repr=False)

    def project(self, x):
        return self._project(x)

    def lift(self, y):
        return self._lift(y)

    def image(self, sub):
        return self.algebra.span_of([self.project(x) for x in self.parent.elements_of(sub)])

    def preimage(self, sub):
        return self.parent.join(self.kernel, self.parent.span_of([self.lift(y) for y in self.algebra.elements_of(sub)]))


class Algebra:
    """Operations shared by Lie algebras and groups."""

    name = ""

    # subclasses provide: zero, whole, size, join, meet, le, span_of,
    # elements_of, ideal_closure, is_ideal, centralizer, quotient,
    # candidate_ideal_generators, subalgebras

    def minimal_ideals(self):
        cyc = set()
        for g in self.candidate_ideal_generators():
            cyc.add(self.ideal_closure([g]))
        cyc = [c for c in cyc if self.size(c) > self.size(self.zero())]
        mins = [c for c in cyc if not any(self.le(d, c) and d != c for d in cyc)]
        return sort_subs(mins)

    def ideals(self):
        """All ideals, by closing the cyclic ideals under sums."""
        cyc = {self.ideal_closure([g]) for g in self.candidate_ideal_generators()}
        found = {self.zero()}
        frontier = [self.zero()]
        while frontier:
            nxt = []
            for i in frontier:
                for c in cyc:
                    j = self.join(i, c)
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
            frontier = nxt
        return sort_subs(found)

    def relative_minimal_ideals(self, n):
        """Ideals M with n < M and M/n minimal in self/n."""
        q = self.quotient(n)
        return [q.preimage(m) for m in q.algebra.minimal_ideals()]

    def chief_series(self, rng=None):
        """Canonical chief series (first minimal ideal at each step).

        ``rng`` (a ``random.Random``) picks a random minimal ideal instead,
        giving other valid refinements.
        """
        terms = [self.zero()]
        while terms[-1] != self.whole():
            cands = self.relative_minimal_ideals(terms[-1])
            terms.append(cands[rng.randrange(len(cands))] if rng else cands[0])
        return ChiefSeries(self, terms)

    def chief_factors(self, rng=None):
        s = self.chief_series(rng)
        return list(zip(s.terms[1:], s.terms[:-1]))

    def is_primitive(self):
        found = [k for k in self.minimal_ideals() if self.centralizer(k) == k]
        if not found:
            return False, None
        assert len(found) == 1, "self-centralizing minimal ideal must be unique"
        return True, found[0]

    def socle(self):
        ok, k = self.is_primitive()
        if not ok:
            raise InputError(f"{self.name or 'algebra'} is not primitive")
        return k

    def maximal_subalgebras(self):
        subs = [s for s in self.subalgebras() if s != self.whole()]
        return [s for s in subs if not any(self.le(s, t) and s != t for t in subs)]

    def frattini(self):
        ms = self.maximal_subalgebras()
        out = self.whole()
        for m in ms:
            out = self.meet(out, m)
        return out

    def fitting(self):
        """Intersection of the centralizers of the chief factors."""
        out = self.whole()
        for upper, lower in self.chief_factors():
            out = self.meet(out, self.centralizer(upper, lower))
        return out

    def nilpotent_length(self):
        n, a = 0, self
        while a.size(a.whole()) > a.size(a.zero()):
            f = a.fitting()
            a = a.quotient(f).algebra
            n += 1
        return n

    def is_nilpotent(self):
        return self.fitting() == self.whole()

    def primitive_quotients(self):
        """``(N, quotient)`` for every ideal N with primitive quotient."""
        out = []
        for n in self.ideals():
            q = self.quotient(n)
            if q.algebra.is_primitive()[0]:
                out.append((n, q))
        return out


@dataclass
class ChiefSeries:
    algebra: object
    terms: list

    def factors(self):
        return list(zip(self.terms[1:], self.terms[:-1]))

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


# Lie algebras --------------------------------------------------------------

class LieAlgebra(Algebra):
    """Lie algebra by structure constants: ``struct[i, j]`` holds [e_i, e_j]."""

    kind = "lie"

    def __init__(self, p, struct, names=None, name="", validate=True):
        self.p = p
        self.struct = np.asarray(struct, dtype=np.int64) % p
        self.dim = self.struct.shape[0]
        self.names = list(names) if names else [f"e{i + 1}" for i in range(self.dim)]
        self.name = name
        self.struct.setflags(write=False)
        self._ad = None
        if validate:
            self.validate()

    @classmethod
    def from_brackets(cls, p, dim, brackets, **kw):
        """``brackets`` maps (i, j) with i < j (0-based) to a coefficient vector."""
        c = np.zeros((dim, dim, dim), dtype=np.int64)
        for (i, j), v in brackets.items():
            if not i < j:
                raise InputError(f"bracket ({i}, {j}) must have i < j")
            c[i, j] = np.asarray(v) % p
            c[j, i] = (-np.asarray(v)) % p
        return cls(p, c, **kw)

    def brackets(self):
        return {(i, j): self.struct[i, j].copy() for i in range(self.dim)
                for j in range(i + 1, self.dim) if self.struct[i, j].any()}

    def validate(self):
        p, c, n = self.p, self.struct, self.dim
        if not ff.is_prime(p):
            raise ValidationError(f"p={p} is not prime")
        if c.shape != (n, n, n):
            raise ValidationError("structure tensor must be dim x dim x dim")
        if np.any((c + c.transpose(1, 0, 2)) % p) or np.any(c[np.arange(n), np.arange(n)]):
            raise ValidationError("bracket is not antisymmetric")
        for i, j, k in itertools.combinations(range(n), 3):
            e = ff.eye(n)
            s = (self.bracket(e[i], self.bracket(e[j], e[k]))
                 + self.bracket(e[j], self.bracket(e[k], e[i]))
                 + self.bracket(e[k], self.bracket(e[i], e[j]))) % p
            if s.any():
                raise ValidationError(
                    f"Jacobi identity fails on ({self.names[i]}, {self.names[j]}, {self.names[k]}): "
                    f"sum = {self.format_vector(s)}")
        if not self.is_solvable():
            raise ValidationError("algebra is not solvable")

    def format_vector(self, v):
        terms = []
        for x, nm in zip(np.asarray(v).tolist(), self.names):
            if x:
                terms.append(nm if x == 1 else f"{x}*{nm}")
        return " + ".join(terms) or "0"

    def __repr__(self):
        return f"LieAlgebra({self.name or '?'}, p={self.p}, dim={self.dim})"

    # elements

    def bracket(self, u, v):
        return np.einsum("i,j,ijk->k", np.asarray(u, dtype=np.int64), np.asarray(v, dtype=np.int64), self.struct) % self.p

    def ad(self, x):
        """Matrix of ad(x) acting on column vectors."""
        return np.einsum("i,ijk->kj", np.asarray(x, dtype=np.int64), self.struct) % self.p

    @property
    def ad_basis(self):
        if self._ad is None:
            self._ad = [self.ad(e) for e in ff.eye(self.dim)]
        return self._ad

    def identity_element(self):
        return ff.zeros(1, self.dim)[0]

    def all_elements(self):
        return ff.all_vectors(self.dim, self.p)

    # substructures

    def zero(self):
        return Subspace(ff.zeros(0, self.dim), self.p, self.dim)

    def whole(self):
        return Subspace(ff.eye(self.dim), self.p, self.dim)

    def size(self, s):
        return s.dim

    def order(self, s):
        return self.p ** s.dim

    def join(self, a, b):
        return a + b

    def meet(self, a, b):
        return a & b

    def le(self, a, b):
        return a <= b

    def span_of(self, vecs):
        vecs = [np.asarray(v) for v in vecs]
        if not vecs:
            return self.zero()
        return Subspace(np.vstack(vecs), self.p, self.dim)

    def elements_of(self, s):
        return list(s.basis)

    def subspace(self, rows):
        return Subspace(np.atleast_2d(np.asarray(rows, dtype=np.int64)), self.p, self.dim)

    def is_subalgebra(self, s):
        return all(s.contains(self.bracket(u, v)) for u, v in itertools.combinations(s.basis, 2))

    def is_ideal(self, s):
        return all(s.contains(m @ v % self.p) for m in self.ad_basis for v in s.basis)

    def ideal_closure(self, vecs):
        s = self.span_of(vecs)
        while True:
            t = self.span_of(list(s.basis) + [m @ v % self.p for m in self.ad_basis for v in s.basis])
            if t == s:
                return s
            s = t

    def candidate_ideal_generators(self):
        return list(ff.projective_points(self.dim, self.p))

    def derived(self, s=None):
        s = self.whole() if s is None else s
        return self.span_of([self.bracket(u, v) for u, v in itertools.combinations(s.basis, 2)])

    def derived_series(self):
        out = [self.whole()]
        while True:
            d = self.derived(out[-1])
            if d == out[-1]:
                return out
            out.append(d)

    def is_solvable(self):
        return self.derived_series()[-1].dim == 0

    def center(self):
        return self.centralizer(self.whole())

    def centralizer(self, a, b=None):
        """{x : [x, a] in b} for ideals b <= a (b defaults to 0)."""
        b = self.zero() if b is None else b
        if not (self.is_ideal(a) and self.is_ideal(b) and b <= a):
            raise InputError("centralizer needs ideals b <= a")
        q = self.quotient(b)
        # x -> ([x, a_i] mod b)_i, linear in x
        blocks = []
        for v in a.basis:
            img = np.array([q.project(self.bracket(e, v)) for e in ff.eye(self.dim)], dtype=np.int64)
            blocks.append(img.T if img.size else ff.zeros(0, self.dim))
        m = np.vstack(blocks) if blocks else ff.zeros(0, self.dim)
        k = ff.kernel_basis(m, self.p) if m.shape[0] else ff.eye(self.dim)
        return Subspace(k.T, self.p, self.dim)

    def quotient(self, n):
        if not self.is_ideal(n):
            raise InputError(f"{n} is not an ideal")
        p = self.p
        piv = [int(np.nonzero(r)[0][0]) for r in n.basis]
        keep = [i for i in range(self.dim) if i not in piv]
        nb = n.basis

        def project(v):
            v = np.asarray(v, dtype=np.int64) % p
            for r, c in zip(nb, piv):
                if v[c]:
                    v = (v - v[c] * r) % p
            return v[keep]

        def lift(w):
            v = ff.zeros(1, self.dim)[0]
            v[keep] = w
            return v

        k = len(keep)
        struct = np.zeros((k, k, k), dtype=np.int64)
        e = ff.eye(self.dim)
        for a, i in enumerate(keep):
            for b, j in enumerate(keep):
                struct[a, b] = project(self.bracket(e[i], e[j]))
        names = [self.names[i] for i in keep]
        alg = LieAlgebra(p, struct, names, name=f"{self.name}/{n!r}" if self.name else "", validate=False)
        return Quotient(self, n, alg, project, lift)

    def subalgebra(self, s, name=""):
        """``s`` as a Lie algebra in its RREF basis, plus the embedding matrix (rows)."""
        if not self.is_subalgebra(s):
            raise InputError(f"{s} is not a subalgebra")
        k = s.dim
        struct = np.zeros((k, k, k), dtype=np.int64)
        for a in range(k):
            for b in range(k):
                br = self.bracket(s.basis[a], s.basis[b])
                struct[a, b] = ff.coords(br, s.basis, self.p)[0] if k else br
        return LieAlgebra(self.p, struct, name=name, validate=False), s.basis

    def subalgebras(self):
        if self.dim > CAPS.max_dim:
            raise ResourceCapError(f"subalgebra enumeration above dim cap {CAPS.max_dim}")
        out = []
        for m in ff.all_subspaces(self.dim, self.p):
            s = Subspace(m, self.p, self.dim)
            if self.is_subalgebra(s):
                out.append(s)
        return sort_subs(out)

    def complements(self, k):
        """All subalgebras U with U + k = L and U & k = 0 (exhaustive)."""
        if not self.is_ideal(k):
            raise InputError(f"{k} is not an ideal")
        p, n = self.p, self.dim
        piv = [int(np.nonzero(r)[0][0]) for r in k.basis]
        free = [i for i in range(n) if i not in piv]
        if p ** (len(free) * k.dim) > CAPS.max_search:
            raise ResourceCapError("complement search above cap")
        w = ff.eye(n)[free]
        out = []
        for phi in ff.all_matrices(len(free), k.dim, p):
            rows = (w + phi @ k.basis) % p if k.dim else w
            u = Subspace(rows, p, n)
            if self.is_subalgebra(u):
                out.append(u)
        return sort_subs(out)

    def inner_automorphism(self, a):
        """The map 1 + ad(a); only an automorphism when ad(a)^2 = 0 (checked)."""
        m = self.ad(a)
        if (m @ m % self.p).any():
            raise InputError("ad(a)^2 != 0")
        return (ff.eye(self.dim) + m) % self.p

    def image_under(self, mat, s):
        return Subspace((mat @ s.basis.T % self.p).T, self.p, self.dim)

    def direct_sum(self, other):
        n, m = self.dim, other.dim
        c = np.zeros((n + m,) * 3, dtype=np.int64)
        c[:n, :n, :n] = self.struct
        c[n:, n:, n:] = other.struct
        return LieAlgebra(self.p, c, self.names + [f"{x}'" for x in other.names], validate=False)


# groups -------------------------------------------------------------------

class FiniteGroup(Algebra):
    """A finite group by its full multiplication table."""

    kind = "group"

    def __init__(self, table, identity=0, name="", validate=True):
        self.table = np.asarray(table, dtype=np.int64)
        self.order_ = self.table.shape[0]
        self.identity = int(identity)
        self.name = name
        if validate:
            self.validate()
        self.table.setflags(write=False)
        n = self.order_
        self.inverse = np.array([int(np.nonzero(self.table[g] == self.identity)[0][0]) for g in range(n)])
        self.elt_order = [self._element_order(g) for g in range(n)]
        self.generators = self._greedy_generators()

    def validate(self):
        t, n = self.table, self.table.shape[0]
        if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
            raise ValidationError("table must be n x n with entries in [0, n)")
        e = self.identity
        if not (0 <= e < n) or np.any(t[e] != np.arange(n)) or np.any(t[:, e] != np.arange(n)):
            raise ValidationError(f"{e} is not a two-sided identity")
        for r in range(n):
            if len(set(t[r].tolist())) != n or len(set(t[:, r].tolist())) != n:
                raise ValidationError(f"row/column {r} is not a permutation (no inverses)")
        idx = np.arange(n)
        lhs = t[t[idx][:, :, None], idx[None, None, :]]
        rhs = t[idx[:, None, None], t[idx][None, :, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            a, b, c = bad[0]
            raise ValidationError(f"associativity fails on ({a}, {b}, {c})")
        if not self._solvable_table():
            raise ValidationError("group is not solvable")

    def _solvable_table(self):
        s = frozenset(range(self.table.shape[0]))
        while len(s) > 1:
            comms = {int(self._comm_raw(a, b)) for a in s for b in s}
            d = self._close_raw(comms)
            if d == s:
                return False
            s = d
        return True

    def _comm_raw(self, a, b):
        t = self.table
        e = self.identity
        ia = int(np.nonzero(t[a] == e)[0][0])
        ib = int(np.nonzero(t[b] == e)[0][0])
        return t[t[t[a, b], ia], ib]

    def _close_raw(self, gens):
        gens = np.fromiter(sorted({int(g) for g in gens}), dtype=np.int64)
        mask = np.zeros(self.table.shape[0], dtype=bool)
        mask[self.identity] = True
        mask[gens] = True
        frontier = np.nonzero(mask)[0]
        while frontier.size and gens.size:
            ys = np.unique(self.table[np.ix_(frontier, gens)])
            frontier = ys[~mask[ys]]
            mask[frontier] = True
        return frozenset(np.nonzero(mask)[0].tolist())

    def _element_order(self, g):
        k, x = 1, g
        while x != self.identity:
            x = int(self.table[x, g])
            k += 1
        return k

    def _greedy_generators(self):
        gens = []
        h = frozenset([self.identity])
        for g in sorted(range(self.order_), key=lambda g: (-self.elt_order[g], g)):
            if g not in h:
                gens.append(g)
                h = self.subgroup_closure(gens)
            if len(h) == self.order_:
                break
        return gens

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order_})"

    def mul(self, a, b):
        return int(self.table[a, b])

    def conj(self, g, a):
        """g a g^-1"""
        return int(self.table[self.table[g, a], self.inverse[g]])

    def comm(self, a, b):
        return int(self._comm_raw(a, b))

    def power(self, g, k):
        x = self.identity
        for _ in range(k):
            x = self.mul(x, g)
        return x

    def identity_element(self):
        return self.identity

    def all_elements(self):
        return list(range(self.order_))

    # substructures

    def zero(self):
        return frozenset([self.identity])

    def whole(self):
        return frozenset(range(self.order_))

    def size(self, s):
        return len(s)

    def order(self, s):
        return len(s)

    def le(self, a, b):
        return a <= b

    def meet(self, a, b):
        return a & b

    def join(self, a, b):
        return self.subgroup_closure(a | b)

    def span_of(self, elts):
        return self.subgroup_closure(elts)

    def elements_of(self, s):
        return sorted(s)

    def subgroup_closure(self, gens):
        return self._close_raw({int(g) for g in gens})

    def is_subgroup(self, s):
        return all(self.table[a, b] in s for a in s for b in s)

    def is_ideal(self, s):
        return self.is_subgroup(s) and all(self.conj(g, a) in s for g in self.generators for a in s)

    def ideal_closure(self, gens):
        s = self.subgroup_closure(gens)
        while True:
            t = self.subgroup_closure(set(s) | {self.conj(g, a) for g in self.generators for a in s})
            if t == s:
                return s
            s = t

    def candidate_ideal_generators(self):
        return list(range(self.order_))

    def derived(self, s=None):
        s = self.whole() if s is None else s
        return self.subgroup_closure({self.comm(a, b) for a in s for b in s})

    def derived_series(self):
        out = [self.whole()]
        while True:
            d = self.derived(out[-1])
            if d == out[-1]:
                return out
            out.append(d)

    def is_solvable(self):
        return len(self.derived_series()[-1]) == 1

    def is_abelian(self, s=None):
        s = self.whole() if s is None else s
        return all(self.table[a, b] == self.table[b, a] for a in s for b in s)

    def center(self):
        return self.centralizer(self.whole())

    def centralizer(self, a, b=None):
        """{g : [g, x] in b for all x in a}."""
        b = self.zero() if b is None else b
        if not (self.is_ideal(a) and self.is_ideal(b) and b <= a):
            raise InputError("centralizer needs normal subgroups b <= a")
        return frozenset(g for g in range(self.order_) if all(self.comm(g, x) in b for x in a))

    def cosets(self, n):
        seen, out = set(), []
        for g in range(self.order_):
            if g in seen:
                continue
            c = sorted({self.mul(g, x) for x in n})
            seen.update(c)
            out.append(c)
        return out

    def quotient(self, n):
        if not self.is_ideal(n):
            raise InputError("not a normal subgroup")
        cos = self.cosets(n)
        where = {}
        for i, c in enumerate(cos):
            for g in c:
                where[g] = i
        k = len(cos)
        table = np.array([[where[self.mul(cos[i][0], cos[j][0])] for j in range(k)] for i in range(k)])
        alg = FiniteGroup(table, where[self.identity], name=f"{self.name}/N{len(n)}" if self.name else "", validate=False)
        return Quotient(self, n, alg, lambda g: where[int(g)], lambda i: cos[int(i)][0])

    def subgroup(self, s, name=""):
        """``s`` as a group (elements relabelled in sorted order) and the label list."""
        if not self.is_subgroup(s):
            raise InputError("not a subgroup")
        elts = sorted(s)
        pos = {g: i for i, g in enumerate(elts)}
        table = np.array([[pos[self.mul(a, b)] for b in elts] for a in elts])
        return FiniteGroup(table, pos[self.identity], name=name, validate=False), elts

    def subalgebras(self):
        if self.order_ > CAPS.max_order:
            raise ResourceCapError(f"subgroup enumeration above order cap {CAPS.max_order}")
        cyc = {self.subgroup_closure([g]) for g in range(self.order_)}
        found = {self.zero()}
        frontier = [self.zero()]
        while frontier:
            nxt = []
            for h in frontier:
                for c in cyc:
                    j = self.join(h, c)
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
            frontier = nxt
        return sort_subs(found)

    def complements(self, k):
        if not self.is_ideal(k):
            raise InputError("not a normal subgroup")
        target = self.order_ // len(k)
        return [u for u in self.subalgebras() if len(u) == target and len(u & k) == 1]

    def direct_product(self, other):
        n, m = self.order_, other.order_
        table = np.empty((n * m, n * m), dtype=np.int64)
        for a in range(n * m):
            for b in range(n * m):
                table[a, b] = self.mul(a // m, b // m) * m + other.mul(a % m, b % m)
        return FiniteGroup(table, self.identity * m + other.identity, validate=False)

    def is_elementary_abelian(self, s):
        if not self.is_abelian(s):
            return False
        ords = {self.elt_order[g] for g in s} - {1}
        return len(ords) <= 1 and all(ff.is_prime(o) for o in ords)


def is_lie(a):
    return isinstance(a, LieAlgebra)


def section_prime(alg, upper, lower):
    """Characteristic of the chief factor upper/lower."""
    if is_lie(alg):
        return alg.p
    idx = len(upper) // len(lower)
    ps = ff.prime_factors(idx)
    if len(ps) != 1:
        raise InputError("section is not a p-group")
    return ps[0]


def section_dim(alg, upper, lower):
    if is_lie(alg):
        return upper.dim - lower.dim
    q = section_prime(alg, upper, lower)
    n, d = len(upper) // len(lower), 0
    while n > 1:
        n //= q
        d += 1
    return d


def permuted_chief_series(alg, count=5, seed=0):
    """``count`` chief series: the canonical one, then seeded random refinements."""
    out = [alg.chief_series()]
    for i in range(count - 1):
        out.append(alg.chief_series(random.Random(seed + i + 1)))
    return out
