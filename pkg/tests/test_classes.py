import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from schunck import classes, ff, groups
from schunck.algebra import LieAlgebra, Subspace
from schunck.classes import (
    ClassSpec, LambdaSpec, check_closure, edef, eigenvalue_set, is_x_central, member, parse_class_spec,
    subdirect_sums, subdirect_sums_bruteforce, supersoluble,
)
from schunck.errors import InputError
from schunck.iso import is_isomorphic


def line(p):
    return LieAlgebra(p, np.zeros((1, 1, 1)))


# membership ------------------------------------------------------------------------

def test_member_examples(l_aff):
    assert member(supersoluble(), l_aff)
    assert not member(supersoluble(), groups.alternating4())
    assert member(edef(1), l_aff)


def test_member_requires_primitive(h3):
    with pytest.raises(InputError):
        member(supersoluble(), h3)


def test_x_central_examples(l_aff):
    soc = l_aff.socle()
    assert is_x_central(supersoluble(), l_aff, soc, l_aff.zero())
    assert is_isomorphic(classes.central_extension_of_factor(l_aff, soc, l_aff.zero()), l_aff)
    # a central factor: the extension is the line, primitive with itself as socle
    h3 = LieAlgebra.from_brackets(3, 3, {(0, 1): [0, 0, 1]})
    z = h3.center()
    assert is_x_central(supersoluble(), h3, z, h3.zero())
    r = classes.central_extension_of_factor(h3, z, h3.zero())
    assert r.dim == 1
    a4 = groups.alternating4()
    v4 = a4.minimal_ideals()[0]
    assert not is_x_central(supersoluble(), a4, v4, a4.zero())
    assert is_isomorphic(classes.central_extension_of_factor(a4, v4, a4.zero()), a4)


def test_combinators():
    both = ClassSpec("and", children=(supersoluble(), edef(1)))
    either = ClassSpec("or", children=(supersoluble(), edef(1)))
    neither = ClassSpec("not", children=(supersoluble(),))
    a4 = groups.alternating4()
    s3 = groups.symmetric(3)
    assert member(both, s3) and member(either, s3) and not member(neither, s3)
    assert not member(both, a4) and member(neither, a4)


def test_edef_over_extension_fields():
    # the line acting on F_3^2 with irreducible characteristic polynomial
    c = np.array([[0, 1], [1, 2]])  # companion of t^2 - 2t - 1 = t^2 + t + 2
    assert ff.factor_charpoly(c, 3) == [((2, 1, 1), 1)]
    q = line(3)
    a = classes.split_extension(q, classes.Module(q, 3, [c]))
    assert a.is_primitive()[0]
    assert not member(edef(1), a)
    assert member(edef(2), a)
    assert member(edef(1, 2), a)


def test_group_lambda_reading():
    # S3 over F_3: the sign action has eigenvalue -1 = 2; roots of unity of order 2
    s3 = groups.symmetric(3)
    assert member(eigenvalue_set(3, [1, 2]), s3)
    assert not member(eigenvalue_set(3, [1]), s3)
    # A4: V4 over F_2 with the 3-cycle acting with eigenvalues of order 3
    a4 = groups.alternating4()
    assert not member(edef(1), a4)
    assert member(edef(2), a4)


def test_lambda_spec_validation():
    with pytest.raises(InputError):
        LambdaSpec()
    with pytest.raises(InputError):
        LambdaSpec(polys=frozenset({(1, 0, 1)}), p=2)  # t^2 + 1 = (t + 1)^2 over F_2
    with pytest.raises(InputError):
        ClassSpec.builtin("no_such_class")
    with pytest.raises(InputError):
        ClassSpec.builtin("eigenvalue")


# parser -----------------------------------------------------------------------------

def test_parse_files(root):
    s = classes.load_class_spec(root / "specs" / "supersoluble.cls")
    assert s.name == "supersoluble" and s.label == "supersoluble"
    s = classes.load_class_spec(root / "specs" / "eigset01_f3.cls")
    assert s == eigenvalue_set(3, [0, 1])
    s = classes.load_class_spec(root / "specs" / "edef_f3.cls")
    assert s == edef(1)
    s = classes.load_class_spec(root / "specs" / "soc_dim_2.cls")
    assert s.name == "soc_dim_le" and s.k == 2


def test_parse_combinators():
    text = """
all-of:
  class supersoluble
  not:
    class eigenvalue
      lambda subfield 1
"""
    s = parse_class_spec(text)
    assert s.kind == "and" and s.children[1].kind == "not"
    assert s.children[1].children[0] == edef(1)


def test_parse_polynomial_set():
    s = parse_class_spec("class eigenvalue_set\n  field p=3\n  lambda set 1, t^2+1\n")
    assert (1, 0, 1) in s.lam.polys and (2, 1) in s.lam.polys


@pytest.mark.parametrize("text", [
    "",
    "class\n",
    "class nonsense\n",
    "class eigenvalue\n",
    "class eigenvalue_set\n  lambda set 0 1\n",
    "class eigenvalue\n  lambda ring 1\n",
    "not:\n  class supersoluble\n  class supersoluble\n",
    "class supersoluble\nclass supersoluble\n",
])
def test_parse_errors(text):
    with pytest.raises(InputError):
        parse_class_spec(text)


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        classes.load_class_spec(tmp_path / "absent.cls")


# subdirect sums --------------------------------------------------------------------------

def test_subdirect_examples():
    d, subs = subdirect_sums(line(3), line(3))
    assert len(subs) == 3
    assert d.whole() in subs
    diag = sorted(s.basis.tolist() for s in subs if s.dim == 1)
    assert diag == [[[1, 1]], [[1, 2]]]

    zero = LieAlgebra(3, np.zeros((0, 0, 0)))
    d, subs = subdirect_sums(zero, line(3))
    assert subs == [d.whole()]

    c2 = groups.cyclic(2)
    d, subs = subdirect_sums(c2, c2)
    assert sorted(len(s) for s in subs) == [2, 4]


def test_subdirect_matches_bruteforce(full_catalog):
    quotients = []
    for e in full_catalog:
        a = e.algebra
        if e.kind == "lie" and a.dim <= 2 or e.kind == "group" and a.order_ <= 6:
            quotients.append(a)
    for q1 in quotients:
        for q2 in quotients:
            if classes.is_lie(q1) != classes.is_lie(q2):
                continue
            if classes.is_lie(q1) and q1.p != q2.p:
                continue
            _, fast = subdirect_sums(q1, q2)
            _, slow = subdirect_sums_bruteforce(q1, q2)
            assert set(fast) == set(slow), (q1, q2)


def test_subdirect_cap():
    from schunck.errors import ResourceCapError

    big = LieAlgebra(2, np.zeros((4, 4, 4)))
    with pytest.raises(ResourceCapError):
        subdirect_sums(big, big)


# closure checks ------------------------------------------------------------------------------

def test_subtensor_example(l_aff):
    r = check_closure(supersoluble(), "subtensor", [("l_aff", l_aff)])
    assert r.verdict == "PASS" and r.checked > 0


def test_dual_negative_control(l_aff):
    r = check_closure(eigenvalue_set(3, [0, 1]), "dual", [("l_aff", l_aff)])
    assert r.verdict == "FAIL"
    e1 = r.counterexample["eigen"][0]
    assert e1["socle_eigenvalues"] == [1] and e1["dual_eigenvalues"] == [2]


def test_paired_always_passes(l_aff):
    for spec in (supersoluble(), eigenvalue_set(3, [0, 1])):
        r = check_closure(spec, "paired", [l_aff])
        assert r.verdict == "PASS" and "always satisfied" in r.notes[0]


def test_closure_skips_non_members(h3):
    r = check_closure(supersoluble(), "pq", [("h3", h3), ("a4", groups.alternating4())])
    assert r.verdict == "PASS" and r.witnesses == []
    assert {s["reason"] for s in r.skipped} == {"not primitive", "not in class"}


def test_unknown_closure_kind(l_aff):
    with pytest.raises(InputError):
        check_closure(supersoluble(), "sideways", [l_aff])


def test_soc_dim_2_is_not_subtensor_closed(group_cat):
    wit = [(e.id, e.algebra) for e in group_cat if e.id in ("grp-A4", "grp-S4")]
    r = check_closure(ClassSpec.builtin("soc_dim_le", k=2), "subtensor", wit)
    assert r.verdict == "FAIL"
    assert r.counterexample["factor_dim"] > 2


def test_cf_implies_pq(full_catalog):
    """cf-closure implies pq-closure for every builtin spec over the catalog witnesses."""
    from schunck.verify import catalog_witnesses

    wit = catalog_witnesses(full_catalog)
    for spec in (supersoluble(), edef(1), ClassSpec.builtin("soc_dim_le", k=2)):
        cf = check_closure(spec, "cf", wit)
        if cf.verdict == "PASS":
            assert check_closure(spec, "pq", wit).verdict == "PASS"


# basis-change invariance of eigenvalue classes ----------------------------------------------------

def _primitives(p):
    from schunck import catalog

    return [e.algebra for e in catalog.generate_lie_catalog(p, 3) if e.primitive]


_PRIMS = {}


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(0, 10 ** 6), st.integers(0, 2 ** 32 - 1))
def test_edef_membership_is_basis_independent(p, pick, seed):
    if p not in _PRIMS:
        _PRIMS[p] = _primitives(p)
    a = _PRIMS[p][pick % len(_PRIMS[p])]
    rng = np.random.default_rng(seed)
    while True:
        g = rng.integers(0, p, size=(a.dim, a.dim))
        if ff.rank(g, p) == a.dim:
            break
    gi = ff.inverse(g, p)
    b = LieAlgebra(p, np.einsum("km,abm,ai,bj->ijk", gi, a.struct, g, g) % p)
    for spec in (edef(1), edef(2), supersoluble()):
        assert member(spec, a) == member(spec, b)


def test_socle_subspace_type(l_aff):
    assert isinstance(l_aff.socle(), Subspace)
    assert classes.socle_dim(l_aff) == 1
