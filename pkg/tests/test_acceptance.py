"""Acceptance gate: ten go/no-go criteria over the full check battery.

Run with `pytest tests/test_acceptance.py -v -s` to see one pass/fail line
per criterion.  Every comparison below is exact; a single nonzero residual
anywhere fails the criterion.
"""

import pytest

from hopftwist.constructors import elementary_abelian_2, group_algebra
from hopftwist.hopf_cochain import random_counital_two_cochain, twist, verify_quasi
from hopftwist.multilinear import with_series_ring
from hopftwist.suites import run_suite

SUITES = (
    "hopf-axioms",
    "group-cohomology",
    "octonions",
    "hopf-cochain",
    "pbw-gcl",
    "moyal",
    "graded-galois",
    "sharp-map",
    "heis-torus",
)


@pytest.fixture(scope="module")
def reports():
    return {name: run_suite(name) for name in SUITES}


def conclude(num, title, ok):
    print("criterion %2d: %s  %s" % (num, "PASS" if ok else "FAIL", title))
    assert ok, "criterion %d failed: %s" % (num, title)


def suite_clean(rep):
    return rep.ok and all(c.residual_term_count == 0 for c in rep.checks)


def ids(rep):
    return [c.id for c in rep.checks]


def test_criterion_01_hopf_axioms(reports):
    rep = reports["hopf-axioms"]
    have = ids(rep)
    hosts = ["k[Z2]", "k[Z3]", "k[Z2^3]", "k[S3]", "k[D4]", "k[P8]",
             "dual[Z2]", "dual[Z3]", "dual[Z2^3]", "dual[S3]", "dual[D4]",
             "dual[P8]", "taft2", "taft3", "taft5", "shuffle", "pareigis4"]
    covered = all(any(i.startswith(h + ":") for i in have) for h in hosts)
    antihom = sum(1 for i in have if i.endswith("antipode-antihomomorphism"))
    squares = sum(1 for i in have if i.endswith("antipode-square"))
    conclude(
        1,
        "hopf axioms on group, dual, taft, shuffle, pareigis hosts",
        suite_clean(rep) and covered and antihom >= 16 and squares >= 13,
    )


def test_criterion_02_octonions(reports):
    rep = reports["octonions"]
    have = ids(rep)
    need = [
        "quasi-associativity-512",
        "alternativity-basis",
        "norm-basis-pairs",
        "norm-seeded-100",
        "coboundary-sign-census",
        "twist-not-closed",
    ]
    conclude(
        2,
        "octonion quasi-associativity, alternativity, norms, sign census",
        suite_clean(rep) and all(n in have for n in need),
    )


def test_criterion_03_torus(reports):
    rep = reports["group-cohomology"]
    have = ids(rep)
    angles = ("torus-1/2", "torus-1/3", "torus-2/5")
    parts = ("cocycle", "unital", "commutation", "uv-phase-exact")
    covered = all("%s:%s" % (a, p) in have for a in angles for p in parts)
    conclude(
        3,
        "torus cochains: unital window cocycles with exact commutation",
        suite_clean(rep) and covered,
    )


def test_criterion_04_dsquared(reports):
    rep = reports["hopf-cochain"]
    have = ids(rep)
    unit_checks = [i for i in have if i.startswith("dsquared-unit:")]
    inv_checks = [i for i in have if i.startswith("dsquared-invariant:")]
    conclude(
        4,
        "double coboundaries trivial; pauli and pbw counterexamples exact",
        suite_clean(rep)
        and len(unit_checks) == 5
        and len(inv_checks) == 3
        and "pauli-counterexample" in have
        and "pbw-counterexample" in have,
    )


def test_criterion_05_twists(reports):
    rep = reports["hopf-cochain"]
    have = ids(rep)
    twists = [i for i in have if i.startswith("twist-quasi:")]
    noncomm = [i for i in twists if any(g in i for g in ("S3", "D4", "P8"))]
    # spot check: the per-twist battery includes triangle and pentagon
    H = with_series_ring(group_algebra(elementary_abelian_2(3)), 2)
    import random

    F = random_counital_two_cochain(H, random.Random(99))
    quasi_ids = [c.id for c in verify_quasi(twist(H, F))]
    conclude(
        5,
        "seeded counital twists are quasi-hopf; octonions via module twist",
        suite_clean(rep)
        and len(twists) == 5
        and len(noncomm) == 3
        and "octonion-module-twist" in have
        and "associator-counital" in quasi_ids
        and "associator-pentagon" in quasi_ids,
    )


def test_criterion_06_moyal(reports):
    rep = reports["moyal"]
    have = ids(rep)
    bch = [i for i in have if "bch-order-" in i]
    orders = {int(i.rsplit("-", 1)[1]) for i in bch}
    kappas = {i.split(":")[0] for i in bch}
    conclude(
        6,
        "moyal twist cocycle + gauge; bch closed form at orders 2-6",
        suite_clean(rep)
        and orders == {2, 3, 4, 5, 6}
        and kappas == {"kappa+1", "kappa-1"},
    )


def test_criterion_07_gcl(reports):
    rep = reports["pbw-gcl"]
    have = ids(rep)
    need = [
        "coassociator-seeded",
        "equal-angle-closed-form",
        "zero-angle-trivial",
        "twist-not-cocycle",
        "twist-not-equivariant",
        "zero-angle-is-cocycle",
    ]
    conclude(
        7,
        "gcl coassociator identity, closed form, cocycle failure witnesses",
        suite_clean(rep) and all(n in have for n in need),
    )


def test_criterion_08_graded(reports):
    rep = reports["graded-galois"]
    have = ids(rep)
    fourway = [i for i in have if i.startswith("fourway:")]
    conclude(
        8,
        "four-way strong-grading equivalence with negatives; ideal property",
        suite_clean(rep)
        and len(fourway) >= 8
        and "crossed-products-strong" in have
        and sum(1 for i in have if i.startswith("ideal:")) >= 8,
    )


def test_criterion_09_sharp(reports):
    rep = reports["sharp-map"]
    conclude(
        9,
        "sharp map laws exhaustive over tuples of length and entries <= 4",
        suite_clean(rep) and "laws-exhaustive-340-tuples" in ids(rep),
    )


def test_criterion_10_heis_torus(reports):
    rep = reports["heis-torus"]
    have = ids(rep)
    reparam = [i for i in have if i.startswith("reparam-iff:")]
    zak = [i for i in have if i.startswith("zak-")]
    conclude(
        10,
        "nilmanifold star: reparametrized associativity, zak module, pairing",
        suite_clean(rep)
        and "uv-commutation" in have
        and len(reparam) == 8
        and "alpha-composition-order5" in have
        and len(zak) == 4
        and "pairing-balanced" in have
        and "pairing-bimodule" in have,
    )
