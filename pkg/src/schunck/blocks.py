"""Truncated module universes, linkage graphs and the principal block.

The set of all irreducibles is not enumerable, so a universe holds the
composition factors of tensor words of bounded length over the chief-factor
modules and their duals. "Principal block" below always means the component
of the trivial module inside such a truncated universe.
"""

from dataclasses import dataclass, field

import numpy as np

from . import ff
from .algebra import is_lie, section_prime
from .cohomology import ext1
from .errors import BoundedSearchError, InputError, ResourceCapError
from .modules import (
    Module, acts_trivially, chief_factor_module, chop, dual, evaluation_image, hom_module,
    inflate, intertwiners, is_isomorphic, tensor, trivial,
)

UNIVERSE_CAP = 60


def default_primes(alg):
    return [alg.p] if is_lie(alg) else ff.prime_factors(alg.order_)


@dataclass
class Universe:
    algebra: object
    p: int
    depth: int
    members: list
    words: list  # per member: tuple of base labels (empty for the trivial module)
    base: list  # (label, Module) for chief-factor modules and duals
    chop_chains: list = field(default_factory=list)

    def __len__(self):
        return len(self.members)

    def find(self, m):
        """Index of the member isomorphic to the irreducible ``m`` (or None)."""
        for i, u in enumerate(self.members):
            if is_isomorphic(m, u, irreducible=True):
                return i
        return None

    @property
    def trivial_index(self):
        return 0


def chief_factor_base(alg, p, series=None):
    """(label, module) for each p-chief factor of ``series`` and its dual, deduplicated."""
    series = series or alg.chief_series()
    out = []
    for i, (upper, lower) in enumerate(series.factors()):
        if section_prime(alg, upper, lower) != p:
            continue
        m = chief_factor_module(alg, upper, lower)
        for label, mod in ((f"[A{i + 1}/A{i}]", m), (f"[A{i + 1}/A{i}]*", dual(m))):
            mod.name = label
            if not any(is_isomorphic(mod, x, irreducible=True) for _, x in out):
                out.append((label, mod))
    return out


def generate_universe(alg, depth=3, p=None, series=None, cap=UNIVERSE_CAP):
    if depth < 1:
        raise InputError("depth must be >= 1")
    p = p or default_primes(alg)[0]
    base = chief_factor_base(alg, p, series)
    triv = trivial(alg, p)
    u = Universe(alg, p, depth, [triv], [()], base, [[]])

    def add(m, word, chain):
        if u.find(m) is None:
            m.name = " (x) ".join(word) if word else "F"
            u.members.append(m)
            u.words.append(word)
            u.chop_chains.append(chain)
            if len(u.members) > cap:
                raise ResourceCapError(f"universe exceeds {cap} members", partial=u)

    for label, m in base:
        add(m, (label,), [m.dim])
    for k in range(2, depth + 1):
        layer = [i for i, w in enumerate(u.words) if len(w) == k - 1]
        for i in layer:
            for label, c in base:
                prod = tensor(u.members[i], c)
                factors = chop(prod)
                chain = [f.dim for f in factors]
                for f in factors:
                    add(f, u.words[i] + (label,), chain)
    for m in list(u.members):
        assert u.find(dual(m)) is not None, "universe is not closed under duals"
    return u


@dataclass
class LinkageGraph:
    universe: Universe
    ext: dict  # (i, j) -> dim Ext^1(V_i, V_j)
    edges: set
    principal_component: set

    def component_of(self, i):
        seen, stack = {i}, [i]
        while stack:
            a = stack.pop()
            for x, y in self.edges:
                for s, t in ((x, y), (y, x)):
                    if s == a and t not in seen:
                        seen.add(t)
                        stack.append(t)
        return seen

    def components(self):
        left, out = set(range(len(self.universe))), []
        while left:
            c = self.component_of(min(left))
            out.append(sorted(c))
            left -= c
        return out

    def path(self, i, j):
        """A chain of linked members from i to j (BFS), or None."""
        prev = {i: None}
        frontier = [i]
        while frontier:
            nxt = []
            for a in frontier:
                for x, y in sorted(self.edges):
                    for s, t in ((x, y), (y, x)):
                        if s == a and t not in prev:
                            prev[t] = a
                            nxt.append(t)
            frontier = nxt
        if j not in prev:
            return None
        out = [j]
        while prev[out[-1]] is not None:
            out.append(prev[out[-1]])
        return out[::-1]


def linkage_graph(u):
    n = len(u)
    ext = {}
    for i in range(n):
        for j in range(n):
            ext[(i, j)] = ext1(u.members[i], u.members[j]).dim
    edges = {(min(i, j), max(i, j)) for (i, j), d in ext.items() if d and i != j}
    g = LinkageGraph(u, ext, edges, set())
    g.principal_component = g.component_of(u.trivial_index)
    return g


def in_principal_block(graph, m):
    i = graph.universe.find(m)
    return i is not None and i in graph.principal_component, i


def record(check, algebra_id, depth, verdict, witness):
    return {"check": check, "algebra_id": algebra_id, "depth": depth, "verdict": verdict, "witness": witness}


def check_chiefsB0(alg, depth=3, series_count=5, algebra_id=None):
    """Every p-chief factor module (of several chief series) lies in B_0."""
    from .algebra import permuted_chief_series

    algebra_id = algebra_id or alg.name
    all_series = permuted_chief_series(alg, series_count)
    findings, verdict = [], "PASS"
    for p in default_primes(alg):
        try:
            u = generate_universe(alg, depth, p, all_series[0])
        except ResourceCapError as e:
            return record("chiefsB0", algebra_id, depth, "BOUNDED", {"reason": str(e)})
        g = linkage_graph(u)
        for s_idx, s in enumerate(all_series):
            for k, (upper, lower) in enumerate(s.factors()):
                if section_prime(alg, upper, lower) != p:
                    continue
                m = chief_factor_module(alg, upper, lower)
                ok, idx = in_principal_block(g, m)
                if not ok:
                    verdict = "FAIL"
                    findings.append({"p": p, "series": s_idx, "factor": k, "universe_index": idx,
                                     "path": None if idx is None else g.path(0, idx)})
        findings.append({"p": p, "universe_size": len(u), "block_sizes": [len(c) for c in g.components()],
                         "principal_size": len(g.principal_component)})
    return record("chiefsB0", algebra_id, depth, verdict, findings)


@dataclass
class TensorWitness:
    a_module: object
    a_index: int
    surjection: np.ndarray
    target: object


def tens_witness(graph, i, j):
    """W = V_j is a quotient of V_i (x) A with A in the principal block.

    A is realised as a minimal submodule of Hom(V, W): the image of a nonzero
    intertwiner from a principal-block member.
    """
    u = graph.universe
    v, w = u.members[i], u.members[j]
    if graph.ext[(i, j)] == 0:
        raise InputError("ext1(V, W) = 0: no non-split extension to witness")
    h = hom_module(v, w)
    for k in sorted(graph.principal_component):
        ts = intertwiners(u.members[k], h)
        if not ts:
            continue
        a_basis = ff.row_basis(ts[0].T, v.p)
        img = evaluation_image(v, w, a_basis)
        if img.shape[0] != w.dim:
            raise AssertionError("evaluation of a nonzero submodule onto an irreducible must be onto")
        from .modules import evaluation_map

        return TensorWitness(u.members[k], k, evaluation_map(v, w, a_basis), w)
    raise BoundedSearchError(f"no principal-block submodule of Hom(V{i}, V{j}) found within depth {u.depth}")


def chiefs_witness(graph, i):
    u = graph.universe
    if i not in graph.principal_component:
        raise InputError("module is not in the principal block")
    return {"word": list(u.words[i]), "k": len(u.words[i]), "chop_chain": u.chop_chains[i]}


# group lemmas --------------------------------------------------------------

def _p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def check_gp_sole(g, depth=3):
    out = []
    mins = g.minimal_ideals()
    for p in ff.prime_factors(g.order_):
        if len(mins) != 1 or not _p_power(len(mins[0]), p):
            continue
        a = mins[0]
        if g.complements(a):
            continue
        ma = chief_factor_module(g, a, g.zero())
        for b in g.relative_minimal_ideals(a):
            entry = {"p": p, "A": len(a), "B": len(b)}
            if not _p_power(len(b) // len(a), p):
                entry["verdict"] = "FAIL"
                entry["reason"] = "B/A is not a p-group"
                out.append(entry)
                continue
            mb = chief_factor_module(g, b, a)
            if not g.is_abelian(b):
                entry["case"] = 1
                entry["verdict"] = "PASS" if _commutator_map_ok(g, a, b, ma, mb) else "FAIL"
            elif any(g.power(x, p) != g.identity for x in b):
                entry["case"] = 2
                ok = _power_map_ok(g, a, b, ma, mb, p) and is_isomorphic(ma, mb, irreducible=True)
                entry["verdict"] = "PASS" if ok else "FAIL"
            else:
                entry["case"] = None
                entry["verdict"] = "SKIP"
                entry["reason"] = "B abelian of exponent p: no claim"
            out.append(entry)
    return out


def _section_maps(g, a, b):
    from .modules import section_coordinates

    _, gens_b, cb = section_coordinates(g, b, a)
    _, gens_a, ca = section_coordinates(g, a, g.zero())
    return gens_b, cb, gens_a, ca


def _commutator_map_ok(g, a, b, ma, mb):
    """[b1] (x) [b2] -> [b1 b2 b1^-1 b2^-1] is a well-defined module map onto [A]."""
    p = ma.p
    gens_b, cb, _, ca = _section_maps(g, a, b)
    k = len(gens_b)
    t = ff.zeros(ma.dim, k * k)
    for i, x in enumerate(gens_b):
        for j, y in enumerate(gens_b):
            t[:, i * k + j] = ca[g.comm(x, y)]
    for x in b:
        for y in b:
            v = np.kron(np.array(cb[x]), np.array(cb[y])) % p
            if not np.array_equal(t @ v % p, np.array(ca[g.comm(x, y)]) % p):
                return False
    src = tensor(mb, mb)
    for h in range(g.order_):
        if not np.array_equal(t @ src.mats[h] % p, ma.mats[h] @ t % p):
            return False
    return ff.rank(t, p) == ma.dim


def _power_map_ok(g, a, b, ma, mb, p):
    """[b] -> [b^p] is a well-defined module isomorphism [B/A] -> [A]."""
    gens_b, cb, _, ca = _section_maps(g, a, b)
    t = np.array([ca[g.power(x, p)] for x in gens_b], dtype=np.int64).T
    for x in b:
        if not np.array_equal(t @ np.array(cb[x]) % p, np.array(ca[g.power(x, p)]) % p):
            return False
    for h in range(g.order_):
        if not np.array_equal(t @ mb.mats[h] % p, ma.mats[h] @ t % p):
            return False
    return t.shape[0] == t.shape[1] and ff.rank(t, p) == ma.dim


def check_lemma(g, which, depth=3, algebra_id=None):
    """Run one group lemma check; returns a report record."""
    algebra_id = algebra_id or g.name
    if is_lie(g):
        raise InputError("group lemma checks need a group")
    if which == "gp-sole":
        entries = check_gp_sole(g, depth)
        return record(which, algebra_id, depth, _combine(entries), entries)
    entries = []
    for p in ff.prime_factors(g.order_):
        u = generate_universe(g, depth, p)
        graph = linkage_graph(u)
        if which == "dual":
            for i in sorted(graph.principal_component):
                j = u.find(dual(u.members[i]))
                ok = j is not None and j in graph.principal_component
                entries.append({"p": p, "V": i, "dual": j, "verdict": "PASS" if ok else "FAIL"})
        elif which == "b0ker":
            for a in g.minimal_ideals():
                for i in sorted(graph.principal_component):
                    ok = acts_trivially(u.members[i], a)
                    entries.append({"p": p, "A": len(a), "V": i, "verdict": "PASS" if ok else "FAIL"})
        elif which == "diffK":
            entries += _diffk_entries(g, u, p)
        elif which == "qgpblock":
            entries += _qgpblock_entries(g, p, depth)
        else:
            raise InputError(f"unknown lemma {which!r}")
    return record(which, algebra_id, depth, _combine(entries), entries)


def regular_module(g, p):
    mats = []
    for x in range(g.order_):
        m = ff.zeros(g.order_, g.order_)
        for h in range(g.order_):
            m[g.mul(x, h), h] = 1
        mats.append(m)
    return Module(g, p, mats, name="F_pG", validate=False)


def all_irreducibles(g, p):
    """Every irreducible F_pG-module: the composition factors of the regular module."""
    out = [trivial(g, p)]
    for f in chop(regular_module(g, p)):
        if not any(is_isomorphic(f, x, irreducible=True) for x in out):
            out.append(f)
    return out


def _diffk_entries(g, u, p):
    out = []
    irr = all_irreducibles(g, p)
    for a in g.minimal_ideals():
        triv_on = [i for i, m in enumerate(irr) if acts_trivially(m, a)]
        nontriv = [i for i in range(len(irr)) if i not in triv_on]
        if not nontriv:
            out.append({"p": p, "A": len(a), "verdict": "SKIP",
                        "reason": "no irreducible F_pG-module on which A acts non-trivially"})
            continue
        for i in triv_on:
            for j in nontriv:
                d1 = ext1(irr[i], irr[j]).dim
                d2 = ext1(irr[j], irr[i]).dim
                out.append({"p": p, "A": len(a), "V": i, "W": j, "ext_VW": d1, "ext_WV": d2,
                            "verdict": "PASS" if d1 == d2 == 0 else "FAIL"})
    return out


def diffk_instance(g, a, v, w):
    """diffK on explicit modules; SKIP (with the reason) when hypotheses fail."""
    from .modules import is_irreducible

    entry = {"A": len(a), "ext_VW": ext1(v, w).dim, "ext_WV": ext1(w, v).dim}
    if not (is_irreducible(v) and is_irreducible(w)):
        entry.update(verdict="SKIP", reason="V or W is reducible; lemma needs irreducibles")
    elif not acts_trivially(v, a) or acts_trivially(w, a):
        entry.update(verdict="SKIP", reason="A must act trivially on V and non-trivially on W")
    else:
        entry["verdict"] = "PASS" if entry["ext_VW"] == entry["ext_WV"] == 0 else "FAIL"
    return entry


def _qgpblock_entries(g, p, depth):
    out = []
    for n in g.ideals():
        if len(n) in (1, g.order_):
            continue
        q = g.quotient(n)
        uq = generate_universe(q.algebra, depth, p)
        gq = linkage_graph(uq)
        for i, j in sorted(gq.edges):
            for s, t in ((i, j), (j, i)):
                if gq.ext[(s, t)]:
                    vs, vt = inflate(uq.members[s], q), inflate(uq.members[t], q)
                    d = ext1(vs, vt).dim
                    out.append({"p": p, "N": len(n), "link": [s, t], "ext_G": d,
                                "verdict": "PASS" if d else "FAIL"})
                    break
    return out


def _combine(entries):
    vs = {e["verdict"] for e in entries}
    if "FAIL" in vs:
        return "FAIL"
    if "PASS" in vs:
        return "PASS"
    return "SKIP"
