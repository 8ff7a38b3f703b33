"""Classes of primitive algebras, X-centrality and closure checks.

A class X is given by a :class:`ClassSpec`: a builtin predicate on primitive
algebras or an and/or/not combination of such.

Eigenvalue classes look at every chief factor A/B of a primitive P and at
the characteristic polynomial of each test element acting on A/B. For Lie
algebras the allowed eigenvalues form either a union of subfields F_{p^d}
or an explicit Frobenius-closed set of monic irreducibles; for groups the
allowed set is the subgroup of the multiplicative group generated by the
roots of the supplied polynomials (the subfield form gives F_{q^d}^x).
"""

from dataclasses import dataclass, field
import itertools
import math
import re

import numpy as np

from . import ff
from .algebra import LieAlgebra, Subspace, is_lie, section_dim, section_prime
from .errors import InputError, ResourceCapError
from .modules import (
    Module, action_kernel, chief_factor_module, composition_factors, deflate, dual, restrict, tensor,
)

# Lie algebras with at most this many elements have every element tested
ELEMENT_CAP = 1024
SUBDIRECT_DIM_CAP = 6
SUBDIRECT_ORDER_CAP = 600

BUILTINS = ("supersoluble", "soc_dim_le", "eigenvalue", "eigenvalue_set", "all_primitives")
_ALIASES = {"edef": "eigenvalue", "soc-dim-le": "soc_dim_le", "eigenvalue-set": "eigenvalue_set",
            "all-primitives": "all_primitives"}


# eigenvalue sets -------------------------------------------------------------

def root_order(f, p):
    """Multiplicative order of a root of the irreducible ``f`` (None for the root 0)."""
    f = ff.poly_trim(f)
    if f == (0, 1):
        return None
    d = len(f) - 1
    n = p ** d - 1
    # order of t modulo f divides p^d - 1; strip prime factors while t^(n/q) = 1
    for q in ff.prime_factors(n):
        while n % q == 0 and _pow_mod(n // q, f, p) == (1,):
            n //= q
    return n


def _pow_mod(e, f, p):
    out, base = (1,), (0, 1)
    base = ff.poly_divmod(base, f, p)[1]
    while e:
        if e & 1:
            out = ff.poly_divmod(ff.poly_mul(out, base, p), f, p)[1]
        base = ff.poly_divmod(ff.poly_mul(base, base, p), f, p)[1]
        e >>= 1
    return out


def parse_poly(text, p):
    """'t^2 + 1' / 'x^2+2x+2' -> monic coefficient tuple (low degree first)."""
    s = text.replace(" ", "").replace("x", "t")
    coeffs = {}
    for tok in re.findall(r"[+-]?[^+-]+", s):
        m = re.fullmatch(r"([+-]?)(\d*)\*?(t(?:\^(\d+))?)?", tok)
        if not m or (not m.group(2) and not m.group(3)):
            raise InputError(f"cannot parse polynomial term {tok!r}")
        sign, c, var, e = m.groups()
        c = int(c) if c else 1
        deg = (int(e) if e else 1) if var else 0
        coeffs[deg] = coeffs.get(deg, 0) + (-c if sign == "-" else c)
    top = max(coeffs) if coeffs else 0
    f = ff.poly_trim([coeffs.get(i, 0) % p for i in range(top + 1)])
    if not f or f[-1] != 1:
        raise InputError(f"polynomial {text!r} is not monic over F_{p}")
    return f


@dataclass(frozen=True)
class LambdaSpec:
    """Allowed eigenvalues.

    Subfield form: ``degrees`` = {d}, eigenvalues allowed in F_{p^d}.
    Explicit form: ``polys`` = monic irreducibles over F_``p`` whose roots are allowed.
    """

    degrees: frozenset = None
    polys: frozenset = None
    p: int = None

    def __post_init__(self):
        if (self.degrees is None) == (self.polys is None):
            raise InputError("give either subfield degrees or an explicit polynomial set")
        if self.degrees is not None and (not self.degrees or any(d < 1 for d in self.degrees)):
            raise InputError("subfield degrees must be positive integers")
        if self.polys is not None:
            if self.p is None or not ff.is_prime(self.p):
                raise InputError("explicit eigenvalue set needs a prime field")
            for f in self.polys:
                if len(ff.factor_poly(f, self.p)) != 1 or ff.factor_poly(f, self.p)[0][1] != 1:
                    raise InputError(f"{ff.poly_str(f)} is not irreducible over F_{self.p}")

    @classmethod
    def subfields(cls, *degrees):
        return cls(degrees=frozenset(degrees))

    @classmethod
    def residues(cls, p, values, polys=()):
        fs = {ff.poly_trim(((-a) % p, 1)) for a in values} | {ff.poly_trim(f) for f in polys}
        return cls(polys=frozenset(fs), p=p)

    def allows(self, factor, q, lie=True):
        """Whether the roots of the irreducible ``factor`` over F_q are allowed."""
        deg = len(factor) - 1
        if self.degrees is not None:
            return any(d % deg == 0 for d in self.degrees)
        if q != self.p:
            if lie:
                raise InputError(f"eigenvalue set is over F_{self.p}, algebra is over F_{q}")
            return True
        if lie:
            return factor in self.polys
        n = self._group_exponent()
        r = root_order(factor, q)
        return r is not None and n % r == 0

    def _group_exponent(self):
        n = 1
        for f in self.polys:
            r = root_order(f, self.p)
            if r is not None:
                n = n * r // math.gcd(n, r)
        return n

    def describe(self):
        if self.degrees is not None:
            return "subfield " + " ".join(map(str, sorted(self.degrees)))
        return f"set over F_{self.p}: " + ", ".join(ff.poly_str(f) for f in sorted(self.polys))


# class specs -----------------------------------------------------------------

@dataclass(frozen=True)
class ClassSpec:
    kind: str  # "builtin", "and", "or", "not"
    name: str = ""
    k: int = None
    lam: LambdaSpec = None
    children: tuple = ()
    label: str = field(default="", compare=False)

    @classmethod
    def builtin(cls, name, k=None, lam=None, label=""):
        name = _ALIASES.get(name, name)
        if name not in BUILTINS:
            raise InputError(f"unknown class {name!r}")
        if name == "soc_dim_le" and (k is None or k < 0):
            raise InputError("soc_dim_le needs a nonnegative bound")
        if name in ("eigenvalue", "eigenvalue_set") and lam is None:
            raise InputError(f"{name} needs a lambda line")
        if name == "eigenvalue" and lam.degrees is None:
            raise InputError("eigenvalue takes 'lambda subfield ...'; use eigenvalue_set for explicit sets")
        if name == "eigenvalue_set" and lam.polys is None:
            raise InputError("eigenvalue_set takes 'lambda set ...'")
        return cls("builtin", name, k, lam, label=label or name)

    def describe(self):
        if self.kind == "builtin":
            extra = f"({self.k})" if self.name == "soc_dim_le" else f"[{self.lam.describe()}]" if self.lam else ""
            return self.name + extra
        if self.kind == "not":
            return f"not {self.children[0].describe()}"
        return f" {self.kind} ".join(f"({c.describe()})" for c in self.children)


def supersoluble():
    return ClassSpec.builtin("supersoluble")


def edef(*degrees):
    return ClassSpec.builtin("eigenvalue", lam=LambdaSpec.subfields(*degrees))


def eigenvalue_set(p, values, polys=()):
    return ClassSpec.builtin("eigenvalue_set", lam=LambdaSpec.residues(p, values, polys))


def _lines(text):
    out = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            indent = len(body) - len(body.lstrip())
            out.append((indent, body.strip()))
    return out


def parse_class_spec(text, label=""):
    """Parse a class file (grammar in README.md)."""
    lines = _lines(text)
    specs, i = _parse_block(lines, 0, lines[0][0] if lines else 0)
    if i != len(lines):
        raise InputError(f"unexpected line {lines[i][1]!r}")
    if len(specs) != 1:
        raise InputError("a class file must define exactly one top-level class")
    s = specs[0]
    if label:
        s = ClassSpec(s.kind, s.name, s.k, s.lam, s.children, label=label)
    return s


def _parse_block(lines, i, indent):
    specs = []
    while i < len(lines) and lines[i][0] >= indent:
        ind, text = lines[i]
        if ind > indent:
            raise InputError(f"unexpected indentation at {text!r}")
        words = text.split()
        head = words[0]
        if head in ("all-of:", "any-of:", "not:"):
            if i + 1 >= len(lines) or lines[i + 1][0] <= ind:
                raise InputError(f"{head} needs an indented block")
            kids, i = _parse_block(lines, i + 1, lines[i + 1][0])
            kind = {"all-of:": "and", "any-of:": "or", "not:": "not"}[head]
            if kind == "not" and len(kids) != 1:
                raise InputError("not: takes exactly one class")
            specs.append(ClassSpec(kind, children=tuple(kids)))
            continue
        if head != "class" or len(words) != 2:
            raise InputError(f"expected 'class <name>', got {text!r}")
        name = words[1]
        i += 1
        params = {}
        while i < len(lines) and lines[i][0] >= ind and lines[i][1].split()[0] in ("lambda", "soc-dim", "field"):
            params[lines[i][1].split()[0]] = lines[i][1].split()[1:]
            i += 1
        specs.append(_make_builtin(name, params))
    return specs, i


def _make_builtin(name, params):
    k = lam = None
    if "soc-dim" in params:
        try:
            k = int(params["soc-dim"][0])
        except (IndexError, ValueError):
            raise InputError("soc-dim needs an integer") from None
        if name == "supersoluble":
            name = "soc_dim_le"
    if "lambda" in params:
        words = params["lambda"]
        if not words or words[0] not in ("subfield", "set"):
            raise InputError("lambda line must be 'lambda subfield d..' or 'lambda set a..'")
        if words[0] == "subfield":
            try:
                lam = LambdaSpec.subfields(*map(int, words[1:]))
            except ValueError:
                raise InputError("subfield degrees must be integers") from None
        else:
            if "field" not in params:
                raise InputError("'lambda set' needs a 'field p=..' line")
            m = re.fullmatch(r"p?=?(\d+)", "".join(params["field"]))
            if not m:
                raise InputError("bad field line")
            p = int(m.group(1))
            vals, polys = [], []
            for w in " ".join(words[1:]).split(","):
                for tok in ([w] if re.search(r"[tx]", w) else w.split()):
                    tok = tok.strip()
                    if not tok:
                        continue
                    if re.fullmatch(r"-?\d+", tok):
                        vals.append(int(tok))
                    else:
                        polys.append(parse_poly(tok, p))
            lam = LambdaSpec.residues(p, vals, polys)
    return ClassSpec.builtin(name, k=k, lam=lam)


def load_class_spec(path):
    from pathlib import Path

    path = Path(path)
    if not path.exists():
        raise InputError(f"no such file: {path}")
    return parse_class_spec(path.read_text(encoding="utf-8"), label=path.stem)


# membership ------------------------------------------------------------------

def socle_dim(p_alg):
    soc = p_alg.socle()
    return section_dim(p_alg, soc, p_alg.zero())


def test_elements(alg, explicit=False):
    """Elements whose action is tested, and a note on coverage."""
    if not is_lie(alg):
        return list(range(alg.order_)), "all elements"
    basis = list(ff.eye(alg.dim))
    if explicit:
        return basis, "basis elements"
    if alg.p ** alg.dim <= ELEMENT_CAP:
        return list(alg.all_elements()), "all elements"
    pairs = [(a + b) % alg.p for a, b in itertools.combinations(basis, 2)]
    return basis + pairs, "basis elements and pairwise sums"


def chief_factor_modules(alg):
    return [chief_factor_module(alg, up, lo, check=False) for up, lo in alg.chief_factors()]


def eigenvalue_violation(lam, alg, explicit=False):
    """First (factor index, element, bad irreducible) with a disallowed eigenvalue, else None."""
    lie = is_lie(alg)
    elts, _ = test_elements(alg, explicit)
    cache = {}
    for k, m in enumerate(chief_factor_modules(alg)):
        for x in elts:
            a = m.act(x)
            key = (m.p, a.tobytes(), a.shape)
            if key not in cache:
                cache[key] = ff.factor_charpoly(a, m.p)
            for f, _ in cache[key]:
                if not lam.allows(f, m.p, lie):
                    return {"factor": k, "element": x.tolist() if lie else int(x), "poly": list(f), "p": m.p}
    return None


def _require_primitive(p_alg):
    ok, _ = p_alg.is_primitive()
    if not ok:
        raise InputError("class membership is defined for primitive algebras only")


def member(spec, p_alg, check=True):
    """Whether the primitive algebra ``p_alg`` is in the class."""
    if check:
        _require_primitive(p_alg)
    if spec.kind == "and":
        return all(member(c, p_alg, False) for c in spec.children)
    if spec.kind == "or":
        return any(member(c, p_alg, False) for c in spec.children)
    if spec.kind == "not":
        return not member(spec.children[0], p_alg, False)
    n = spec.name
    if n == "all_primitives":
        return True
    if n == "supersoluble":
        return socle_dim(p_alg) <= 1
    if n == "soc_dim_le":
        return socle_dim(p_alg) <= spec.k
    if n == "eigenvalue":
        return eigenvalue_violation(spec.lam, p_alg) is None
    if n == "eigenvalue_set":
        return eigenvalue_violation(spec.lam, p_alg, explicit=True) is None
    raise InputError(f"unknown class {n!r}")


def explain(spec, p_alg):
    """Reason a primitive fails an eigenvalue class (None when not applicable)."""
    if spec.kind == "builtin" and spec.name in ("eigenvalue", "eigenvalue_set"):
        return eigenvalue_violation(spec.lam, p_alg, explicit=spec.name == "eigenvalue_set")
    if spec.kind == "builtin" and spec.name in ("supersoluble", "soc_dim_le"):
        return {"socle_dim": socle_dim(p_alg)}
    return None


# split extensions ------------------------------------------------------------

def split_extension(q, m, name=""):
    """The semidirect sum/product of the module ``m`` by its owner ``q``.

    Lie: basis = q's basis then the module basis, [x, v] = x.v.
    Groups: elements indexed g * p^d + v (see groups.semidirect).
    """
    if m.owner is not q:
        raise InputError("module must be over q")
    p, d = m.p, m.dim
    if is_lie(q):
        if q.p != p:
            raise InputError("field mismatch")
        k = q.dim
        n = k + d
        s = np.zeros((n, n, n), dtype=np.int64)
        s[:k, :k, :k] = q.struct
        for i in range(k):
            s[i, k:, k:] = m.mats[i].T
            s[k:, i, k:] = (-m.mats[i].T) % p
        names = list(q.names) + [f"v{j + 1}" for j in range(d)]
        return LieAlgebra(p, s, names, name=name, validate=False)
    from .groups import semidirect

    return semidirect(d, p, q, m.mats, name=name)


def extension_by_acting_quotient(alg, m, name=""):
    """The split extension of ``m`` by alg / C_alg(m)."""
    k = action_kernel(m)
    q = alg.quotient(k)
    return split_extension(q.algebra, deflate(m, q), name=name)


def central_extension_of_factor(alg, upper, lower):
    """Split extension of the chief factor upper/lower by alg / C(upper/lower)."""
    m = chief_factor_module(alg, upper, lower)
    r = extension_by_acting_quotient(alg, m)
    assert r.is_primitive()[0], "split extension of a chief factor must be primitive"
    return r


def is_x_central(spec, alg, upper, lower):
    return member(spec, central_extension_of_factor(alg, upper, lower), check=False)


# subdirect sums --------------------------------------------------------------

def direct_sum(q1, q2):
    """q1 (+) q2: Lie basis q1 then q2; group element a * |q2| + b."""
    if is_lie(q1):
        n, m = q1.dim, q2.dim
        c = np.zeros((n + m,) * 3, dtype=np.int64)
        c[:n, :n, :n] = q1.struct
        c[n:, n:, n:] = q2.struct
        return LieAlgebra(q1.p, c, list(q1.names) + [f"{x}'" for x in q2.names], validate=False)
    return q1.direct_product(q2)


def subdirect_sums(q1, q2, cap=None):
    """(D, subs): D = q1 (+) q2 and every substructure of D projecting onto both factors.

    Goursat: pairs of ideals N1, N2 with an isomorphism q1/N1 -> q2/N2.
    """
    from .iso import group_isomorphisms, lie_isomorphisms

    lie = is_lie(q1)
    if lie != is_lie(q2):
        raise InputError("both factors must be Lie algebras or both groups")
    if lie:
        if q1.p != q2.p:
            raise InputError("field mismatch")
        cap = SUBDIRECT_DIM_CAP if cap is None else cap
        if q1.dim + q2.dim > cap:
            raise ResourceCapError(f"subdirect sum enumeration above dim cap {cap}")
    else:
        cap = SUBDIRECT_ORDER_CAP if cap is None else cap
        if q1.order_ * q2.order_ > cap:
            raise ResourceCapError(f"subdirect product enumeration above order cap {cap}")
    d = direct_sum(q1, q2)
    found = set()
    for n1 in q1.ideals():
        r1 = q1.quotient(n1)
        for n2 in q2.ideals():
            r2 = q2.quotient(n2)
            if lie:
                if r1.algebra.dim != r2.algebra.dim:
                    continue
                for theta in lie_isomorphisms(r1.algebra, r2.algebra):
                    found.add(_lie_graph(q1, q2, n1, n2, r1, r2, theta))
            else:
                if r1.algebra.order_ != r2.algebra.order_:
                    continue
                for theta in group_isomorphisms(r1.algebra, r2.algebra):
                    m = q2.order_
                    found.add(frozenset(a * m + b for a in range(q1.order_) for b in range(m)
                                        if theta[r1.project(a)] == r2.project(b)))
    from .algebra import sort_subs

    return d, sort_subs(found)


def _lie_graph(q1, q2, n1, n2, r1, r2, theta):
    p, k1, k2 = q1.p, q1.dim, q2.dim
    rows = []
    for v in n1.basis:
        rows.append(np.concatenate([v, np.zeros(k2, dtype=np.int64)]))
    for v in n2.basis:
        rows.append(np.concatenate([np.zeros(k1, dtype=np.int64), v]))
    for i, e in enumerate(ff.eye(r1.algebra.dim)):
        rows.append(np.concatenate([r1.lift(e), r2.lift(theta[:, i])]))
    if not rows:
        return Subspace(ff.zeros(0, k1 + k2), p, k1 + k2)
    return Subspace(np.array(rows, dtype=np.int64), p, k1 + k2)


def subdirect_sums_bruteforce(q1, q2):
    """Oracle: every substructure of the direct sum whose projections are onto."""
    d = direct_sum(q1, q2)
    out = []
    if is_lie(q1):
        k1 = q1.dim
        for s in d.subalgebras():
            if Subspace(s.basis[:, :k1], q1.p, k1).dim == k1 and Subspace(s.basis[:, k1:], q1.p, q2.dim).dim == q2.dim:
                out.append(s)
    else:
        m = q2.order_
        for s in d.subalgebras():
            if {x // m for x in s} == set(range(q1.order_)) and {x % m for x in s} == set(range(m)):
                out.append(s)
    return d, out


def _sum_module(d, q1, q2, m, first):
    """A q1- (first) or q2-module pulled back to q1 (+) q2 along the projection."""
    if is_lie(d):
        z = [np.zeros((m.dim, m.dim), dtype=np.int64)]
        mats = list(m.mats) + z * q2.dim if first else z * q1.dim + list(m.mats)
    else:
        k = q2.order_
        mats = [m.mats[x // k] if first else m.mats[x % k] for x in range(d.order_)]
    return Module(d, m.p, mats, validate=False, dim=m.dim)


def socle_module(p_alg):
    """Soc(P) as a module for P / Soc(P), with the quotient."""
    soc = p_alg.socle()
    q = p_alg.quotient(soc)
    m = chief_factor_module(p_alg, soc, p_alg.zero(), check=False)
    return deflate(m, q), q


def subtensor_products(p_alg, q_alg, cap=None):
    """Yield (sub, factor index, R) for every primitive subtensor product of P and Q."""
    if is_lie(p_alg) != is_lie(q_alg):
        return
    ma, qa = socle_module(p_alg)
    mb, qb = socle_module(q_alg)
    if ma.p != mb.p:
        return
    d, subs = subdirect_sums(qa.algebra, qb.algebra, cap)
    t = tensor(_sum_module(d, qa.algebra, qb.algebra, ma, True),
               _sum_module(d, qa.algebra, qb.algebra, mb, False))
    for s in subs:
        tl = restrict(t, s)
        for k, c in enumerate(composition_factors(tl).modules()):
            r = extension_by_acting_quotient(tl.owner, c)
            assert r.is_primitive()[0], "subtensor product must be primitive"
            yield s, k, c, r


# closure checks --------------------------------------------------------------

CLOSURE_KINDS = ("pq", "cf", "dual", "subtensor", "paired")
PAIRED_NOTE = ("paired condition concerns Leibniz pairs only; for Lie algebras and groups "
               "it is regarded as always satisfied")


@dataclass
class ClosureReport:
    kind: str
    verdict: str
    counterexample: dict = None
    checked: int = 0
    witnesses: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def to_record(self, spec_id=""):
        return {"check": f"closure-{self.kind}", "spec": spec_id, "verdict": self.verdict,
                "checked": self.checked, "witnesses": self.witnesses, "skipped": self.skipped,
                "counterexample": self.counterexample, "notes": self.notes}


def _named(witnesses):
    out = []
    for i, w in enumerate(witnesses):
        if isinstance(w, tuple):
            out.append(w)
        else:
            out.append((w.name or f"w{i}", w))
    return out


def _describe(alg):
    from .formats import dump_algebra

    return dump_algebra(alg)


def check_closure(spec, kind, witnesses, cap=None):
    """Test one closure condition over a finite witness list.

    ``witnesses`` holds algebras or (id, algebra) pairs. Witnesses that are
    not primitive members of the class are skipped. PASS is relative to the
    witnesses; FAIL carries the first counterexample in canonical order.
    """
    if kind not in CLOSURE_KINDS:
        raise InputError(f"unknown closure kind {kind!r}")
    rep = ClosureReport(kind, "PASS")
    if kind == "paired":
        rep.notes.append(PAIRED_NOTE)
        return rep
    use = []
    for wid, w in _named(witnesses):
        ok, _ = w.is_primitive()
        if not ok:
            rep.skipped.append({"witness": wid, "reason": "not primitive"})
        elif not member(spec, w, check=False):
            rep.skipped.append({"witness": wid, "reason": "not in class"})
        else:
            use.append((wid, w))
    rep.witnesses = [wid for wid, _ in use]

    def fail(data):
        rep.verdict = "FAIL"
        rep.counterexample = data
        return rep

    try:
        if kind == "pq":
            for wid, w in use:
                for n, q in w.primitive_quotients():
                    rep.checked += 1
                    if not member(spec, q.algebra, check=False):
                        return fail({"witness": wid, "ideal": _sub_repr(n), "quotient": _describe(q.algebra),
                                     "reason": explain(spec, q.algebra)})
        elif kind == "cf":
            for wid, w in use:
                for idx, (up, lo) in enumerate(w.chief_factors()):
                    r = central_extension_of_factor(w, up, lo)
                    rep.checked += 1
                    if not member(spec, r, check=False):
                        return fail({"witness": wid, "chief_factor": idx, "upper": _sub_repr(up),
                                     "lower": _sub_repr(lo), "extension": _describe(r),
                                     "reason": explain(spec, r)})
        elif kind == "dual":
            for wid, w in use:
                soc = w.socle()
                m = chief_factor_module(w, soc, w.zero(), check=False)
                r = extension_by_acting_quotient(w, dual(m))
                assert r.is_primitive()[0], "dual socle extension must be primitive"
                rep.checked += 1
                if not member(spec, r, check=False):
                    data = {"witness": wid, "socle": _sub_repr(soc), "extension": _describe(r),
                            "reason": explain(spec, r)}
                    data.update(_dual_eigen_note(w, m))
                    return fail(data)
        elif kind == "subtensor":
            for (pid, pa), (qid, qa) in itertools.product(use, repeat=2):
                for s, k, c, r in subtensor_products(pa, qa, cap):
                    rep.checked += 1
                    if not member(spec, r, check=False):
                        return fail({"witness": [pid, qid], "subdirect": _sub_repr(s), "factor": k,
                                     "factor_dim": c.dim, "extension": _describe(r),
                                     "reason": explain(spec, r)})
    except ResourceCapError as e:
        rep.verdict = "BOUNDED"
        rep.notes.append(str(e))
    return rep


def _roots(a, p):
    """Eigenvalues in F_p (roots of the linear factors) and the remaining factors."""
    roots, rest = [], []
    for f, _ in ff.factor_charpoly(a, p):
        if len(f) == 2:
            roots.append((-f[0]) % p)
        else:
            rest.append(ff.poly_str(f))
    return sorted(roots), rest


def _dual_eigen_note(w, m):
    """Eigenvalues of each basis element on the socle and on its dual."""
    p = m.p
    if not is_lie(w):
        return {}
    out = []
    for i, a in enumerate(m.mats):
        r, rest = _roots(a, p)
        rd, rest_d = _roots((-a.T) % p, p)
        out.append({"element": w.names[i], "socle_eigenvalues": r, "dual_eigenvalues": rd,
                    "socle_other_factors": rest, "dual_other_factors": rest_d})
    return {"eigen": out}


def _sub_repr(s):
    if isinstance(s, Subspace):
        return s.basis.tolist()
    return sorted(int(x) for x in s)
