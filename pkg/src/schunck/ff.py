"""Exact linear algebra and polynomial factorization over prime fields F_p.

Matrices are plain ``numpy`` integer arrays whose entries are kept in
``[0, p)``; every function takes the characteristic ``p`` explicitly.
Polynomials are tuples of residues, lowest degree first.
"""

from dataclasses import dataclass
from functools import lru_cache
import itertools

import numpy as np

from .errors import InputError


@dataclass(frozen=True)
class FieldSpec:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")


def is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        while n % d == 0:
            if d not in out:
                out.append(d)
            n //= d
        d += 1
    if n > 1 and n not in out:
        out.append(n)
    return out


def inv(x, p):
    return pow(int(x), -1, p)


def mat(rows, p):
    a = np.array(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else np.zeros((0, 0), dtype=np.int64)
    return a % p


def zeros(r, c):
    return np.zeros((r, c), dtype=np.int64)


def eye(n):
    return np.eye(n, dtype=np.int64)


def mul(a, b, p):
    return (a @ b) % p


def rref(a, p):
    """Reduced row echelon form. Returns ``(r, pivots)``."""
    r = np.array(a, dtype=np.int64) % p
    rows, cols = r.shape
    pivots = []
    row = 0
    for c in range(cols):
        if row >= rows:
            break
        nz = np.nonzero(r[row:, c])[0]
        if nz.size == 0:
            continue
        k = row + nz[0]
        if k != row:
            r[[row, k]] = r[[k, row]]
        r[row] = (r[row] * inv(r[row, c], p)) % p
        col = r[:, c].copy()
        col[row] = 0
        if col.any():
            r = (r - np.outer(col, r[row])) % p
        pivots.append(c)
        row += 1
    return r, pivots


def rank(a, p):
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def row_basis(a, p):
    """Canonical (RREF, zero rows dropped) basis of the row space."""
    a = np.asarray(a, dtype=np.int64)
    if a.shape[0] == 0:
        return zeros(0, a.shape[1])
    r, piv = rref(a, p)
    return r[: len(piv)]


def rref_solve(a, b, p):
    """Solve ``a @ x = b``. Returns ``(x or None, rank(a))``.

    ``b`` may have several columns; ``x`` then has one column per column of b.
    """
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    if a.shape[0] != b.shape[0]:
        raise InputError("row count mismatch")
    n = a.shape[1]
    aug = np.hstack([a, b])
    r, piv = rref(aug, p)
    rk = sum(1 for c in piv if c < n)
    if any(c >= n for c in piv):
        return None, rk
    x = zeros(n, b.shape[1])
    for i, c in enumerate(piv):
        x[c] = r[i, n:]
    return x, rk


def kernel_basis(a, p):
    """Right null space; columns of the result form a canonical basis."""
    a = np.asarray(a, dtype=np.int64) % p
    rows, n = a.shape
    if rows == 0:
        return eye(n)
    r, piv = rref(a, p)
    free = [c for c in range(n) if c not in piv]
    k = zeros(n, len(free))
    for j, f in enumerate(free):
        k[f, j] = 1
        for i, c in enumerate(piv):
            k[c, j] = (-r[i, f]) % p
    if k.shape[1]:
        # canonical echelon form on the transposed basis
        k = row_basis(k.T, p).T
    return k


def left_kernel(a, p):
    """Rows ``y`` with ``y @ a = 0``, as an RREF row basis."""
    return kernel_basis(np.asarray(a).T, p).T


def inverse(a, p):
    n = a.shape[0]
    x, rk = rref_solve(a, eye(n), p)
    if x is None or rk < n:
        raise ZeroDivisionError("singular matrix")
    return x


def in_span(v, basis, p):
    """Is the row vector ``v`` in the row span of ``basis``?"""
    if basis.shape[0] == 0:
        return not np.any(np.asarray(v) % p)
    x, _ = rref_solve(basis.T, np.asarray(v).reshape(-1, 1), p)
    return x is not None


def coords(v, basis, p):
    """Coordinates of row vector(s) ``v`` w.r.t. the independent rows of ``basis``."""
    v = np.atleast_2d(np.asarray(v, dtype=np.int64))
    x, _ = rref_solve(basis.T, v.T, p)
    if x is None:
        raise ValueError("vector not in span")
    return x.T


def intersect(u, w, p):
    """Intersection of two row spaces (both given as row bases)."""
    n = u.shape[1]
    if u.shape[0] == 0 or w.shape[0] == 0:
        return zeros(0, n)
    k = kernel_basis(np.vstack([u, (-w) % p]).T, p)
    if k.shape[1] == 0:
        return zeros(0, n)
    return row_basis(k[: u.shape[0]].T @ u % p, p)


def all_vectors(n, p):
    """Every vector of F_p^n as rows of an array (lexicographic order)."""
    if n == 0:
        return zeros(1, 0)
    return np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64)


def projective_points(n, p):
    """One representative per 1-dim subspace: first nonzero coordinate is 1."""
    if n == 0:
        return zeros(0, 0)
    out = []
    for v in itertools.product(range(p), repeat=n):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            out.append(v)
    return np.array(out, dtype=np.int64).reshape(-1, n)


def all_subspaces(n, p, dim=None):
    """Enumerate subspaces of F_p^n as RREF row bases (optionally of one dimension)."""
    dims = range(n + 1) if dim is None else [dim]
    for k in dims:
        for piv in itertools.combinations(range(n), k):
            free = [(i, c) for i in range(k) for c in range(piv[i] + 1, n) if c not in piv]
            for vals in itertools.product(range(p), repeat=len(free)):
                m = zeros(k, n)
                for i, c in enumerate(piv):
                    m[i, c] = 1
                for (i, c), v in zip(free, vals):
                    m[i, c] = v
                yield m


def all_matrices(r, c, p):
    for vals in itertools.product(range(p), repeat=r * c):
        yield np.array(vals, dtype=np.int64).reshape(r, c)


def general_linear(n, p):
    """Every invertible n x n matrix over F_p (brute force; small n only)."""
    for m in all_matrices(n, n, p):
        if rank(m, p) == n:
            yield m


# polynomials -----------------------------------------------------------

def poly_trim(c):
    c = [int(x) for x in c]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return poly_trim(out)


def poly_add(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return poly_trim((x + y) % p for x, y in zip(a, b))


def poly_scale(a, s, p):
    return poly_trim((x * s) % p for x in a)


def poly_divmod(a, b, p):
    a = list(poly_trim(a))
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 0)
    lead = inv(b[-1], p)
    while len(a) >= len(b) and a:
        s = (a[-1] * lead) % p
        shift = len(a) - len(b)
        q[shift] = s
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - s * y) % p
        a = list(poly_trim(a))
    return poly_trim(q), tuple(a)


def poly_str(c, var="t"):
    terms = []
    for i in range(len(c) - 1, -1, -1):
        x = c[i]
        if not x:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            terms.append(str(x))
        else:
            terms.append(mono if x == 1 else f"{x}{mono}")
    return " + ".join(terms) or "0"


@lru_cache(maxsize=None)
def irreducibles(p, degree):
    """Monic irreducible polynomials of exactly ``degree`` over F_p, sorted."""
    if degree == 1:
        return tuple((a, 1) for a in range(p))
    smaller = [f for d in range(1, degree // 2 + 1) for f in irreducibles(p, d)]
    out = []
    for tail in itertools.product(range(p), repeat=degree):
        f = tuple(tail) + (1,)
        if f[0] == 0:
            continue
        if all(poly_divmod(f, g, p)[1] for g in smaller):
            out.append(f)
    return tuple(out)


def charpoly(a, p):
    """Characteristic polynomial det(tI - a) via Hessenberg reduction."""
    h = np.array(a, dtype=np.int64) % p
    n = h.shape[0]
    if h.shape != (n, n):
        raise InputError("charpoly needs a square matrix")
    for j in range(n - 2):
        nz = np.nonzero(h[j + 1:, j])[0]
        if nz.size == 0:
            continue
        i = j + 1 + nz[0]
        if i != j + 1:
            h[[i, j + 1]] = h[[j + 1, i]]
            h[:, [i, j + 1]] = h[:, [j + 1, i]]
        piv = inv(h[j + 1, j], p)
        for k in range(j + 2, n):
            u = (h[k, j] * piv) % p
            if u:
                h[k] = (h[k] - u * h[j + 1]) % p
                h[:, j + 1] = (h[:, j + 1] + u * h[:, k]) % p
    polys = [(1,)]
    for m in range(1, n + 1):
        cur = poly_mul(((-h[m - 1, m - 1]) % p, 1), polys[m - 1], p)
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = (prod * h[i, i - 1]) % p
            if not prod:
                break
            term = poly_scale(polys[i - 1], (h[i - 1, m - 1] * prod) % p, p)
            cur = poly_add(cur, poly_scale(term, p - 1, p), p)
        polys.append(cur)
    return polys[n]


def factor_poly(f, p):
    """Factor a monic polynomial into sorted (irreducible, multiplicity) pairs."""
    f = poly_trim(f)
    out = []
    d = 1
    while len(f) > 1:
        if 2 * d > len(f) - 1:
            out.append((f, 1))
            break
        for g in irreducibles(p, d):
            m = 0
            while True:
                q, r = poly_divmod(f, g, p)
                if r:
                    break
                f, m = q, m + 1
            if m:
                out.append((g, m))
        d += 1
    merged = {}
    for g, m in out:
        merged[g] = merged.get(g, 0) + m
    return sorted(merged.items(), key=lambda gm: (len(gm[0]), gm[0][::-1]))


def factor_charpoly(a, p):
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError("factor_charpoly needs a square matrix")
    return factor_poly(charpoly(a, p), p)
