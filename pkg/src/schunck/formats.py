"""Text formats for Lie algebras, groups and module dumps.

Lie file::

    field p=3
    dim 2
    basis e1 e2
    bracket e1 e2 = e2

Group file::

    order 2
    identity 0
    0 1
    1 0
"""

import re

import numpy as np

from .algebra import FiniteGroup, LieAlgebra, is_lie
from .errors import InputError

_TERM = re.compile(r"^\s*([+-]?)\s*(\d*)\s*\*?\s*([A-Za-z_][\w']*)?\s*$")


def _strip(lines):
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_combination(text, names, p):
    """'2*e1 - e3' -> coefficient vector."""
    v = np.zeros(len(names), dtype=np.int64)
    text = text.strip()
    if text == "0":
        return v
    for tok in re.findall(r"[+-]?[^+-]+", text.replace(" ", "")):
        m = _TERM.match(tok)
        if not m or not m.group(3):
            raise InputError(f"cannot parse term {tok!r}")
        sign, coef, nm = m.groups()
        if nm not in names:
            raise InputError(f"unknown basis element {nm!r}")
        c = int(coef) if coef else 1
        v[names.index(nm)] += -c if sign == "-" else c
    return v % p


def parse_lie(text, name=""):
    p = dim = None
    names = None
    brackets = {}
    for line in _strip(text.splitlines()):
        parts = line.split()
        key = parts[0]
        if key == "field":
            m = re.match(r"field\s+p\s*=\s*(\d+)$", line)
            if not m:
                raise InputError(f"bad field line: {line!r}")
            p = int(m.group(1))
        elif key == "dim":
            dim = int(parts[1])
        elif key == "basis":
            names = parts[1:]
        elif key == "bracket":
            m = re.match(r"bracket\s+(\S+)\s+(\S+)\s*=\s*(.+)$", line)
            if names is None and dim is not None:
                names = [f"e{i + 1}" for i in range(dim)]
            if not m or names is None or p is None:
                raise InputError(f"bad bracket line (field/basis must come first): {line!r}")
            a, b, rhs = m.groups()
            if a not in names or b not in names:
                raise InputError(f"unknown basis element in {line!r}")
            i, j = names.index(a), names.index(b)
            if not i < j:
                raise InputError(f"bracket needs i < j: {line!r}")
            if (i, j) in brackets:
                raise InputError(f"duplicate bracket {a} {b}")
            brackets[(i, j)] = parse_combination(rhs, names, p)
        else:
            raise InputError(f"unknown directive {key!r}")
    if p is None or dim is None:
        raise InputError("Lie file needs 'field p=..' and 'dim ..'")
    if names is None:
        names = [f"e{i + 1}" for i in range(dim)]
    if len(names) != dim:
        raise InputError(f"basis has {len(names)} names, dim is {dim}")
    return LieAlgebra.from_brackets(p, dim, brackets, names=names, name=name)


def dump_lie(alg):
    lines = [f"field p={alg.p}", f"dim {alg.dim}", "basis " + " ".join(alg.names)]
    for (i, j), v in sorted(alg.brackets().items()):
        lines.append(f"bracket {alg.names[i]} {alg.names[j]} = {alg.format_vector(v)}")
    return "\n".join(lines) + "\n"


def parse_group(text, name=""):
    n = ident = None
    rows = []
    for line in _strip(text.splitlines()):
        parts = line.split()
        if parts[0] == "order":
            n = int(parts[1])
        elif parts[0] == "identity":
            ident = int(parts[1])
        else:
            try:
                rows.append([int(x) for x in parts])
            except ValueError:
                raise InputError(f"bad table row: {line!r}") from None
    if n is None or ident is None:
        raise InputError("group file needs 'order' and 'identity'")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InputError(f"expected {n} rows of {n} entries")
    return FiniteGroup(np.array(rows), ident, name=name)


def dump_group(g):
    lines = [f"order {g.order_}", f"identity {g.identity}"]
    lines += [" ".join(map(str, r)) for r in g.table.tolist()]
    return "\n".join(lines) + "\n"


def load_algebra(source, kind=None, name=""):
    """Parse text; ``kind`` is 'lie' or 'group' (sniffed when omitted)."""
    if kind is None:
        kind = "lie" if re.search(r"^\s*field\b", source, re.M) else "group"
    if kind == "lie":
        return parse_lie(source, name)
    if kind == "group":
        return parse_group(source, name)
    raise InputError(f"unknown kind {kind!r}")


def load_file(path):
    from pathlib import Path

    path = Path(path)
    if not path.exists():
        raise InputError(f"no such file: {path}")
    kind = {".lie": "lie", ".grp": "group"}.get(path.suffix)
    return load_algebra(path.read_text(encoding="utf-8"), kind, name=path.stem)


def dump_algebra(alg):
    return dump_lie(alg) if is_lie(alg) else dump_group(alg)


def dump_module(m, algebra_id=""):
    lines = [f"module over {algebra_id or m.owner.name or '?'} dim {m.dim}"]
    labels = m.owner.names if is_lie(m.owner) else [str(g) for g in range(m.owner.order_)]
    for lab, a in zip(labels, m.mats):
        lines.append(f"act {lab}")
        lines += [" ".join(map(str, r)) for r in a.tolist()]
    return "\n".join(lines) + "\n"
