"""Desk-scale catalogs of solvable Lie algebras and small solvable groups.

Lie algebras of dimension <= 3 are enumerated exhaustively: every solvable
L of dimension n has an ideal I of codimension 1 (any I containing L'), so
L = F x + I with ad x acting on I by a derivation. Running over the
isomorphism classes of dimension n - 1 and all their derivations reaches
every class; duplicates are removed by an isomorphism search.
"""

from dataclasses import dataclass, field
import hashlib
import itertools
import json
from pathlib import Path

import numpy as np

from . import ff, groups
from .algebra import LieAlgebra, is_lie
from .errors import InputError
from .formats import dump_algebra, load_file
from .iso import fingerprint, is_isomorphic, lie_fingerprint, lie_isomorphisms

LIE_FIELDS = (2, 3, 5)
MAX_LIE_DIM = 4


@dataclass
class CatalogEntry:
    id: str
    algebra: object
    provenance: str  # "exhaustive" or "curated"
    _fp: str = field(default=None, repr=False)
    _prim: tuple = field(default=None, repr=False)
    _series: object = field(default=None, repr=False)

    @property
    def kind(self):
        return "lie" if is_lie(self.algebra) else "group"

    @property
    def field(self):
        return self.algebra.p if is_lie(self.algebra) else None

    @property
    def size(self):
        return self.algebra.dim if is_lie(self.algebra) else self.algebra.order_

    @property
    def fingerprint(self):
        if self._fp is None:
            self._fp = hashlib.sha256(repr(fingerprint(self.algebra)).encode()).hexdigest()[:16]
        return self._fp

    @property
    def chief_series(self):
        if self._series is None:
            self._series = self.algebra.chief_series()
        return self._series

    @property
    def primitive(self):
        if self._prim is None:
            self._prim = self.algebra.is_primitive()
        return self._prim[0]

    def index_record(self):
        return {"id": self.id, "kind": self.kind, "field": self.field, "size": self.size,
                "fingerprint": self.fingerprint, "provenance": self.provenance,
                "file": self.id + (".lie" if self.kind == "lie" else ".grp")}


@dataclass
class Catalog:
    entries: list

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def get(self, entry_id):
        for e in self.entries:
            if e.id == entry_id:
                return e
        raise InputError(f"no catalog entry {entry_id!r}")

    def primitives(self):
        return [e for e in self.entries if e.primitive]

    def find_isomorphic(self, alg):
        """The entry isomorphic to ``alg`` (or None)."""
        fp = hashlib.sha256(repr(fingerprint(alg)).encode()).hexdigest()[:16]
        for e in self.entries:
            if e.fingerprint == fp and is_isomorphic(e.algebra, alg):
                return e
        return None

    def __add__(self, other):
        ids = {e.id for e in self.entries}
        clash = [e.id for e in other.entries if e.id in ids]
        if clash:
            raise InputError(f"duplicate catalog ids: {clash}")
        return Catalog(self.entries + other.entries)

    def counts(self):
        out = {}
        for e in self.entries:
            key = f"{e.kind}-p{e.field}-d{e.size}" if e.kind == "lie" else "group"
            out[key] = out.get(key, 0) + 1
        return out

    def write(self, out_dir):
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        lines = []
        for e in self.entries:
            rec = e.index_record()
            (out_dir / rec["file"]).write_text(dump_algebra(e.algebra), encoding="utf-8")
            lines.append(json.dumps(rec, sort_keys=True))
        (out_dir / "index.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")

    @classmethod
    def read(cls, path):
        path = Path(path)
        index = path / "index.jsonl"
        if not index.exists():
            raise InputError(f"{path} is not a catalog directory (no index.jsonl)")
        entries = []
        for line in index.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            rec = json.loads(line)
            alg = load_file(path / rec["file"])
            alg.name = rec["id"]
            e = CatalogEntry(rec["id"], alg, rec["provenance"])
            if e.fingerprint != rec["fingerprint"]:
                raise InputError(f"fingerprint mismatch for {rec['id']}")
            entries.append(e)
        return cls(entries)


# Lie catalog -----------------------------------------------------------------

def derivation_basis(alg):
    """Basis of Der(alg) as n x n matrices acting on columns."""
    n, p = alg.dim, alg.p
    if n == 0:
        return []
    # unknown D[r, c] at index r * n + c; D e_c = sum_r D[r, c] e_r
    rows = []
    e = ff.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            # D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j] = 0, one equation per output coordinate
            blk = np.zeros((n, n * n), dtype=np.int64)
            for k, c in enumerate(alg.struct[i, j].tolist()):
                if c:
                    for r in range(n):
                        blk[r, r * n + k] += c
            for r in range(n):
                br = alg.bracket(e[r], e[j])
                for s in range(n):
                    blk[s, r * n + i] -= br[s]
                br = alg.bracket(e[i], e[r])
                for s in range(n):
                    blk[s, r * n + j] -= br[s]
            rows.append(blk % p)
    if not rows:
        return [m.reshape(n, n) for m in ff.eye(n * n)]
    k = ff.kernel_basis(np.vstack(rows), p)
    return [k[:, t].reshape(n, n) for t in range(k.shape[1])]


def extend_by_derivation(alg, d):
    """F x + alg with [x, v] = d v; x becomes the first basis vector."""
    n, p = alg.dim, alg.p
    s = np.zeros((n + 1,) * 3, dtype=np.int64)
    s[1:, 1:, 1:] = alg.struct
    for j in range(n):
        s[0, j + 1, 1:] = d[:, j]
        s[j + 1, 0, 1:] = (-d[:, j]) % p
    return LieAlgebra(p, s, validate=False)


def _simplicity(alg):
    s = alg.struct
    # fewest constants, then smallest ones, then nonzero entries as early as possible
    return (int(np.count_nonzero(s)), int(s.sum()), tuple(-x for x in s.reshape(-1).tolist()))


def dedupe(algs):
    """Keep the first algebra of each isomorphism class (input order)."""
    reps = []
    buckets = {}
    for a in algs:
        fp = lie_fingerprint(a)
        bucket = buckets.setdefault(fp, [])
        if any(lie_isomorphisms(b, a, first=True) for b in bucket):
            continue
        bucket.append(a)
        reps.append(a)
    return reps


def outer_derivations(alg):
    """Derivations spanning a complement of the inner ones."""
    p = alg.p
    inner = ff.row_basis(np.array([a.reshape(-1) for a in alg.ad_basis]).reshape(-1, alg.dim ** 2), p)
    cur, out = inner, []
    for d in derivation_basis(alg):
        v = d.reshape(-1)
        if not ff.in_span(v, cur, p):
            out.append(d)
            cur = ff.row_basis(np.vstack([cur, v]), p)
    return out


def exhaustive_lie(p, dim):
    """Isomorphism-class representatives of solvable Lie algebras of dimension ``dim``.

    Derivations that differ by an inner derivation or by a nonzero scalar give
    isomorphic extensions, so only outer classes with leading coefficient 1
    are tried. Representatives are the simplest structure tensors found
    (fewest nonzero constants first).
    """
    if dim == 1:
        return [LieAlgebra(p, np.zeros((1, 1, 1), dtype=np.int64))]
    cands = []
    for base in exhaustive_lie(p, dim - 1):
        der = outer_derivations(base)
        for coeffs in itertools.product(range(p), repeat=len(der)):
            lead = next((c for c in coeffs if c), 1)
            if lead != 1:
                continue
            d = sum((c * m for c, m in zip(coeffs, der)), np.zeros((dim - 1, dim - 1), dtype=np.int64)) % p
            cands.append(extend_by_derivation(base, d))
    cands.sort(key=_simplicity)
    return dedupe(cands)


def _almost_abelian(p, m):
    """F x + F^k with [x, v] = m v."""
    k = m.shape[0]
    return extend_by_derivation(LieAlgebra(p, np.zeros((k, k, k), dtype=np.int64)), np.asarray(m) % p)


def _companion(f):
    n = len(f) - 1
    c = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n):
        c[i, i - 1] = 1
    c[:, -1] = [-x for x in f[:-1]]
    return c


def curated_dim4(p):
    """Hand-picked solvable 4-dim algebras (not a classification)."""
    zero = lambda n: LieAlgebra(p, np.zeros((n, n, n), dtype=np.int64))
    laff = LieAlgebra.from_brackets(p, 2, {(0, 1): [0, 1]})
    h3 = LieAlgebra.from_brackets(p, 3, {(0, 1): [0, 0, 1]})
    out = [
        ("abelian", zero(4)),
        ("h3+line", h3.direct_sum(zero(1))),
        ("laff+line+line", laff.direct_sum(zero(2))),
        ("laff+laff", laff.direct_sum(laff)),
        ("aa-identity", _almost_abelian(p, ff.eye(3))),
        ("aa-nilpotent-jordan", _almost_abelian(p, np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0]]))),
        ("aa-jordan-1", _almost_abelian(p, np.array([[1, 0, 0], [1, 1, 0], [0, 1, 1]]))),
        ("aa-irreducible-cubic", _almost_abelian(p, _companion(ff.irreducibles(p, 3)[0]))),
        ("aa-diag-1-1-0", _almost_abelian(p, np.diag([1, 1, 0]))),
        ("h3-derivation-1-0-1", extend_by_derivation(h3, np.diag([1, 0, 1]))),
        ("h3-derivation-1-1-2", extend_by_derivation(h3, np.diag([1, 1, 2]))),
    ]
    out = [(nm, a) for nm, a in out if a.dim == 4]
    for _, a in out:
        a.validate()
    keep, seen = [], []
    for nm, a in out:
        if any(is_isomorphic(a, b) for b in seen):
            continue
        seen.append(a)
        keep.append((nm, a))
    return keep


def generate_lie_catalog(p, maxdim):
    if p not in LIE_FIELDS:
        raise InputError(f"field must be one of {LIE_FIELDS}")
    if not 1 <= maxdim <= MAX_LIE_DIM:
        raise InputError(f"maxdim must be between 1 and {MAX_LIE_DIM}")
    entries = []
    for d in range(1, min(maxdim, 3) + 1):
        for k, a in enumerate(exhaustive_lie(p, d)):
            a.name = f"lie-p{p}-d{d}-{k + 1:02d}"
            entries.append(CatalogEntry(a.name, a, "exhaustive"))
    if maxdim >= 4:
        for k, (nm, a) in enumerate(curated_dim4(p)):
            a.name = f"lie-p{p}-d4-{k + 1:02d}"
            entries.append(CatalogEntry(a.name, a, "curated"))
    return Catalog(entries)


# group catalog ---------------------------------------------------------------

def _group_id(name):
    return "grp-" + name.replace("(", "").replace(")", "").replace(",", "_").replace(":", "x")


def builtin_group_catalog(max_order=24):
    c2, c3 = groups.cyclic(2), groups.cyclic(3)
    s3 = groups.symmetric(3)
    items = [
        c2, c3, groups.cyclic(4), groups.direct_product(c2, c2, "C2xC2"), groups.cyclic(6), s3,
        groups.dihedral(4), groups.quaternion(), groups.cyclic(8), groups.dicyclic12(),
        groups.dihedral(6), groups.alternating4(), groups.direct_product(c3, s3, "C3xS3"),
        groups.symmetric(4), groups.sl23(),
    ]
    entries = []
    for g in items:
        if g.order_ > max_order:
            continue
        g.name = _group_id(g.name)
        entries.append(CatalogEntry(g.name, g, "curated"))
    return Catalog(entries)


def check_no_duplicates(cat):
    """Pairs of isomorphic entries of the same kind and field (should be empty)."""
    bad = []
    for a, b in itertools.combinations(cat.entries, 2):
        if a.kind == b.kind and a.field == b.field and a.size == b.size and a.fingerprint == b.fingerprint:
            if is_isomorphic(a.algebra, b.algebra):
                bad.append((a.id, b.id))
    return bad
