"""Command-line entry point. Every subcommand writes JSON lines.

Exit codes: 0 pass, 1 a FAIL record was written, 2 input error,
3 a resource cap was hit (BOUNDED).
"""

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import blocks, catalog
from .algebra import is_lie, section_dim, section_prime
from .classes import CLOSURE_KINDS, check_closure, load_class_spec
from .errors import BoundedSearchError, InputError, ResourceCapError
from .formats import dump_algebra, dump_module, load_file
from .verify import catalog_witnesses, verify_formation

LEMMAS = ("gp-sole", "dual", "b0ker", "diffK", "qgpblock")


def _plain(x):
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    raise TypeError(f"not serialisable: {type(x)}")


def _sub(s):
    if hasattr(s, "basis"):
        return s.basis.tolist()
    return sorted(int(x) for x in s)


def threads():
    """Worker bound from SCHUNCK_THREADS (work currently runs serially)."""
    try:
        return max(1, int(os.environ.get("SCHUNCK_THREADS", "1")))
    except ValueError:
        raise InputError("SCHUNCK_THREADS must be an integer") from None


class Writer:
    def __init__(self, path):
        self.path = path
        self.lines = []

    def emit(self, rec):
        self.lines.append(json.dumps(rec, sort_keys=True, default=_plain))

    def close(self):
        text = "\n".join(self.lines) + ("\n" if self.lines else "")
        if self.path:
            Path(self.path).parent.mkdir(parents=True, exist_ok=True)
            Path(self.path).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)

    def verdicts(self):
        out = set()
        for line in self.lines:
            rec = json.loads(line)
            if "verdict" in rec:
                out.add(rec["verdict"])
        return out


def _load(path, args):
    alg = load_file(path)
    if is_lie(alg) and alg.dim > args.max_dim:
        raise ResourceCapError(f"dim {alg.dim} above --max-dim {args.max_dim}")
    if not is_lie(alg) and alg.order_ > args.max_order:
        raise ResourceCapError(f"order {alg.order_} above --max-order {args.max_order}")
    return alg


def _load_catalogs(dirs, args):
    cat = None
    for d in dirs:
        c = catalog.Catalog.read(d)
        cat = c if cat is None else cat + c
    if cat is None:
        raise InputError("--catalog is required")
    keep = [e for e in cat if (e.kind == "lie" and e.size <= args.max_dim)
            or (e.kind == "group" and e.size <= args.max_order)]
    return catalog.Catalog(keep)


# subcommands -------------------------------------------------------------------

def cmd_chief_series(args, out):
    alg = _load(args.file, args)
    aid = alg.name
    s = alg.chief_series()
    for k, (up, lo) in enumerate(s.factors()):
        out.emit({"check": "chief-factor", "algebra_id": aid, "index": k, "upper": _sub(up), "lower": _sub(lo),
                  "dim": section_dim(alg, up, lo), "prime": section_prime(alg, up, lo),
                  "centralizer": _sub(alg.centralizer(up, lo))})
    out.emit({"check": "chief-series", "algebra_id": aid, "length": len(s.factors()),
              "factor_dims": [section_dim(alg, u, l) for u, l in s.factors()], "verdict": "PASS"})


def cmd_primitives(args, out):
    alg = _load(args.file, args)
    for n, q in alg.primitive_quotients():
        soc = q.algebra.socle()
        out.emit({"check": "primitive-quotient", "algebra_id": alg.name, "ideal": _sub(n),
                  "socle_dim": section_dim(q.algebra, soc, q.algebra.zero()),
                  "quotient": dump_algebra(q.algebra)})


def _universe(alg, args):
    p = args.prime or blocks.default_primes(alg)[0]
    u = blocks.generate_universe(alg, args.depth, p)
    return u, blocks.linkage_graph(u)


def cmd_blocks(args, out):
    alg = _load(args.file, args)
    u, g = _universe(alg, args)
    for i, m in enumerate(u.members):
        out.emit({"check": "universe-member", "algebra_id": alg.name, "index": i, "dim": m.dim,
                  "word": list(u.words[i]), "principal": i in g.principal_component})
        if args.dump_modules:
            d = Path(args.dump_modules)
            d.mkdir(parents=True, exist_ok=True)
            (d / f"{alg.name}-V{i}.mod").write_text(dump_module(m, alg.name), encoding="utf-8")
    for (i, j), e in sorted(g.ext.items()):
        if e:
            out.emit({"check": "ext1", "algebra_id": alg.name, "V": i, "W": j, "dim": e})
    out.emit({"check": "blocks", "algebra_id": alg.name, "depth": args.depth, "p": u.p,
              "components": g.components(), "principal_component": sorted(g.principal_component)})


def cmd_check_lemmas(args, out):
    alg = _load(args.file, args)
    if args.which == "chiefsB0":
        out.emit(blocks.check_chiefsB0(alg, args.depth))
        return
    which = LEMMAS if args.which == "all" else (args.which,)
    for w in which:
        out.emit(blocks.check_lemma(alg, w, args.depth, alg.name))


def cmd_check_class(args, out):
    spec = load_class_spec(args.spec)
    cat = _load_catalogs(args.catalog, args)
    kinds = CLOSURE_KINDS if args.kind == "all" else (args.kind,)
    for k in kinds:
        out.emit(check_closure(spec, k, catalog_witnesses(cat)).to_record(spec.label))


def cmd_verify_formation(args, out):
    spec = load_class_spec(args.spec)
    cat = _load_catalogs(args.catalog, args)
    rep = verify_formation(spec, cat, args.mode, spec.label)
    for rec in rep.records():
        out.emit(rec)


def cmd_witness(args, out):
    alg = _load(args.file, args)
    u, g = _universe(alg, args)
    try:
        i = int(str(args.module).lstrip("Vv"))
    except ValueError:
        raise InputError("--module takes a universe index such as 3 or V3") from None
    if not 0 <= i < len(u):
        raise InputError(f"module index {i} not in universe of size {len(u)}")
    base = {"algebra_id": alg.name, "depth": args.depth, "V": i}
    if i in g.principal_component:
        out.emit({"check": "chiefs-witness", **base, "verdict": "PASS", "witness": blocks.chiefs_witness(g, i)})
    else:
        out.emit({"check": "chiefs-witness", **base, "verdict": "SKIP", "witness": "not in principal block"})
    for j in range(len(u)):
        if g.ext[(i, j)] == 0:
            continue
        rec = {"check": "tens-witness", **base, "W": j}
        try:
            t = blocks.tens_witness(g, i, j)
            rec.update(verdict="PASS", witness={"A": t.a_index, "A_word": list(u.words[t.a_index]),
                                                "surjection": t.surjection})
        except BoundedSearchError as e:
            rec.update(verdict="BOUNDED", witness=str(e))
        out.emit(rec)


def cmd_catalog(args, out):
    if args.action != "generate":
        raise InputError("catalog supports only 'generate'")
    if args.groups:
        cat = catalog.builtin_group_catalog(args.max_order)
    else:
        if args.field is None or args.maxdim is None:
            raise InputError("catalog generate needs --field and --maxdim (or --groups)")
        cat = catalog.generate_lie_catalog(args.field, min(args.maxdim, args.max_dim))
    if not args.catalog_out:
        raise InputError("catalog generate needs --out <dir>")
    cat.write(args.catalog_out)
    for e in cat:
        out.emit({"check": "catalog-entry", **e.index_record(), "primitive": e.primitive})
    out.emit({"check": "catalog", "counts": cat.counts(), "entries": len(cat), "verdict": "PASS"})


# argument parsing ----------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write JSON lines here instead of stdout")
    common.add_argument("--max-dim", type=int, default=4)
    common.add_argument("--max-order", type=int, default=24)
    common.add_argument("--depth", type=int, default=3)

    ap = argparse.ArgumentParser(prog="schunck", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("chief-series", parents=[common])
    s.add_argument("file")
    s = sub.add_parser("primitives", parents=[common])
    s.add_argument("file")
    s = sub.add_parser("blocks", parents=[common])
    s.add_argument("file")
    s.add_argument("--prime", type=int)
    s.add_argument("--dump-modules", help="directory for module files")
    s = sub.add_parser("check-lemmas", parents=[common])
    s.add_argument("file")
    s.add_argument("--which", default="all", choices=LEMMAS + ("all", "chiefsB0"))
    s = sub.add_parser("check-class", parents=[common])
    s.add_argument("spec")
    s.add_argument("--catalog", action="append", default=[])
    s.add_argument("--kind", default="all", choices=CLOSURE_KINDS + ("all",))
    s = sub.add_parser("verify-formation", parents=[common])
    s.add_argument("spec")
    s.add_argument("--catalog", action="append", default=[])
    s.add_argument("--mode", default="full", choices=("full", "equivalence", "saturation", "corollary"))
    s = sub.add_parser("witness", parents=[common])
    s.add_argument("file")
    s.add_argument("--module", required=True)
    s.add_argument("--prime", type=int)
    s = sub.add_parser("catalog", parents=[common])
    s.add_argument("action", choices=("generate",))
    s.add_argument("--field", type=int)
    s.add_argument("--maxdim", type=int)
    s.add_argument("--groups", action="store_true", help="write the curated group catalog")
    s.add_argument("--dir", dest="catalog_out", help="catalog directory (alias of --out for catalog)")
    return ap


COMMANDS = {
    "chief-series": cmd_chief_series, "primitives": cmd_primitives, "blocks": cmd_blocks,
    "check-lemmas": cmd_check_lemmas, "check-class": cmd_check_class,
    "verify-formation": cmd_verify_formation, "witness": cmd_witness, "catalog": cmd_catalog,
}


def run(argv=None):
    """Parse ``argv``, run the subcommand and return the exit code."""
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    out_path = args.out
    if args.cmd == "catalog":
        # for catalog generate, --out names the catalog directory; records go to stdout
        args.catalog_out = args.catalog_out or args.out
        out_path = None
    out = Writer(out_path)
    code = 0
    try:
        threads()
        COMMANDS[args.cmd](args, out)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ResourceCapError as e:
        out.emit({"check": args.cmd, "verdict": "BOUNDED", "reason": str(e)})
        code = 3
    v = out.verdicts()
    out.close()
    if "FAIL" in v:
        return 1
    if code or "BOUNDED" in v:
        return 3
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
