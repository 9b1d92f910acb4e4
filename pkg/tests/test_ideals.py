"""Ideal calculus vs a brute-force oracle built only from multiply/left_divide.

The oracle represents an ideal as a membership predicate and never touches
the canonical forms, so agreement on windows is a genuine dual route.
"""

import random

import pytest

from lefthull import (AxPlusB, EMPTY, FreeMonoid, NumericalSemigroup,
                      PositiveCone, UsageError, clifford_check,
                      constructible_closure, independence_check, intersect,
                      lcm_integer, membership, preimage, principal, translate)
from lefthull.ideals import calculus

BACKENDS = [
    FreeMonoid(2),
    PositiveCone(1),
    PositiveCone(2),
    NumericalSemigroup((2, 3)),
    NumericalSemigroup((3, 5)),
    AxPlusB(),
]


def ids(sg):
    return sg.describe()


# predicate-level mirror of the calculus, defined from scratch

def o_full(sg):
    return lambda x: True


def o_principal(sg, s):
    return lambda x: sg.left_divide(s, x) is not None


def o_translate(sg, s, p):
    def inner(x):
        d = sg.left_divide(s, x)
        return d is not None and p(d)
    return inner


def o_preimage(sg, s, p):
    return lambda x: p(sg.multiply(s, x))


def o_intersect(p, q):
    return lambda x: p(x) and q(x)


def random_ideal(sg, rng, depth=3):
    """Parallel (canonical value, oracle predicate) pair built by random ops."""
    cal = calculus(sg)
    seeds = sg.window_of_size(10)
    X, p = cal.full(), o_full(sg)
    for _ in range(rng.randrange(depth + 1)):
        op = rng.choice(["translate", "preimage", "intersect"])
        s = seeds[rng.randrange(len(seeds))]
        if op == "translate":
            X, p = cal.translate(s, X), o_translate(sg, s, p)
        elif op == "preimage":
            X, p = cal.preimage(s, X), o_preimage(sg, s, p)
        else:
            t = seeds[rng.randrange(len(seeds))]
            X = cal.intersect(X, cal.principal(t))
            p = o_intersect(p, o_principal(sg, t))
    return X, p


@pytest.mark.parametrize("sg", BACKENDS, ids=ids)
def test_canonical_matches_oracle_on_windows(sg):
    rng = random.Random(101)
    cal = calculus(sg)
    win = sg.window_of_size(60)
    for _ in range(120):
        X, p = random_ideal(sg, rng)
        for x in win:
            assert cal.is_member(x, X) == p(x), (X, x)


@pytest.mark.parametrize("sg", BACKENDS, ids=ids)
def test_canonical_equality_is_set_equality(sg):
    # distinct canonical values must disagree somewhere in a window that
    # is large enough to separate everything the builder can produce
    rng = random.Random(102)
    win = sg.window_of_size(300)
    pairs = [random_ideal(sg, rng) for _ in range(60)]
    for X, p in pairs:
        for Y, q in pairs:
            same_set = all(p(x) == q(x) for x in win)
            assert (X == Y) == same_set, (X, Y)


@pytest.mark.parametrize("sg", BACKENDS, ids=ids)
def test_ideals_absorb_right_multiplication(sg):
    rng = random.Random(103)
    cal = calculus(sg)
    win = sg.window_of_size(25)
    for _ in range(25):
        X, _ = random_ideal(sg, rng)
        for x in win[:12]:
            if cal.is_member(x, X):
                for s in win[:12]:
                    assert cal.is_member(sg.multiply(x, s), X)


@pytest.mark.parametrize("sg", BACKENDS, ids=ids)
def test_translate_preimage_adjunction(sg):
    rng = random.Random(104)
    cal = calculus(sg)
    win = sg.window_of_size(30)
    for _ in range(40):
        X, _ = random_ideal(sg, rng)
        s = win[rng.randrange(len(win))]
        # membership transport
        pre = cal.preimage(s, X)
        for x in win[:15]:
            assert cal.is_member(x, pre) == cal.is_member(sg.multiply(s, x), X)
        # exact identities on canonical forms
        assert cal.preimage(s, cal.translate(s, X)) == X
        assert cal.translate(s, cal.preimage(s, X)) == \
            cal.intersect(cal.principal(s), X)


@pytest.mark.parametrize("sg", BACKENDS, ids=ids)
def test_semilattice_laws(sg):
    rng = random.Random(105)
    cal = calculus(sg)
    ideals = [random_ideal(sg, rng)[0] for _ in range(12)]
    full = cal.full()
    for X in ideals:
        assert cal.intersect(X, X) == X
        assert cal.intersect(full, X) == X
        assert cal.intersect(X, EMPTY if X is EMPTY else EMPTY) is EMPTY
        for Y in ideals:
            assert cal.intersect(X, Y) == cal.intersect(Y, X)
            for Z in ideals:
                assert cal.intersect(cal.intersect(X, Y), Z) == \
                    cal.intersect(X, cal.intersect(Y, Z))


@pytest.mark.parametrize("sg", [FreeMonoid(2), PositiveCone(2),
                                NumericalSemigroup((2, 3))], ids=ids)
def test_principal_meet_is_greatest_lower_bound(sg):
    # when sS n tS = rS, r is the preceq-glb of s and t
    cal = calculus(sg)
    win = sg.window_of_size(16)
    for s in win:
        for t in win:
            Z = cal.intersect(cal.principal(s), cal.principal(t))
            if Z is EMPTY:
                continue
            r = cal.principal_witness(Z)
            if r is None:
                continue
            assert sg.preceq(r, s) and sg.preceq(r, t)
            for w in win:
                if sg.preceq(w, s) and sg.preceq(w, t):
                    assert sg.preceq(w, r)


def test_frozen_principal_forms():
    num = NumericalSemigroup((2, 3))
    assert principal(num, 2) == (4, (2,))
    assert principal(num, 3) == (5, (3,))
    assert principal(num, 0) == (0, ())
    cone = PositiveCone(1)
    assert principal(cone, (2,)) == (2,)
    axb = AxPlusB()
    assert principal(axb, (3, 2)) == (1, 2)
    assert principal(axb, (-1, -2)) == (1, 2)
    fm = FreeMonoid(2)
    assert principal(fm, (0, 1)) == (0, 1)


def test_frozen_translate_preimage_intersect():
    num = NumericalSemigroup((2, 3))
    assert translate(num, 2, (5, ())) == (7, ())
    assert preimage(num, 2, (5, ())) == (3, ())
    assert intersect(num, principal(num, 2), principal(num, 3)) == (5, ())
    cone = PositiveCone(2)
    assert intersect(cone, principal(cone, (1, 0)),
                     principal(cone, (0, 1))) == (1, 1)
    assert preimage(cone, (2,) * 2, principal(cone, (5, 5))) == (3, 3)
    fm = FreeMonoid(2)
    assert preimage(fm, (0,), principal(fm, (1,))) is EMPTY
    assert preimage(fm, (0,), principal(fm, (0, 1))) == (1,)
    assert preimage(fm, (0, 1), principal(fm, (0,))) == ()
    axb = AxPlusB()
    assert intersect(axb, (0, 2), (1, 2)) is EMPTY
    assert intersect(axb, (0, 2), (0, 3)) == (0, 6)
    assert lcm_integer(4, 6) == 12
    assert lcm_integer(1, -7) == 7


def test_frozen_membership():
    cone = PositiveCone(1)
    assert membership(cone, (3,), principal(cone, (2,)))
    num = NumericalSemigroup((2, 3))
    assert membership(num, 6, (5, ()))
    assert not membership(num, 4, (5, ()))
    axb = AxPlusB()
    assert membership(axb, (7, 8), (1, 2))
    assert not membership(axb, (7, 9), (1, 2))
    with pytest.raises(UsageError):
        membership(num, 1, (5, ()))


def test_constructible_closure_frozen_families():
    cone = PositiveCone(1)
    assert constructible_closure(cone, 2, generators=((1,),)) == \
        ((0,), (1,), (2,))
    fm = FreeMonoid(2)
    assert constructible_closure(fm, 1) == ((), (0,), (1,), EMPTY)
    num = NumericalSemigroup((2, 3))
    fam = constructible_closure(num, 3)
    assert (1, ()) in fam  # the set {2,3,4,...}
    two_steps = preimage(num, 2, preimage(
        num, 2, intersect(num, principal(num, 2), principal(num, 3))))
    assert two_steps == (1, ())


@pytest.mark.parametrize("sg", BACKENDS, ids=ids)
def test_closure_properties(sg):
    fam = constructible_closure(sg, 2)
    cal = calculus(sg)
    assert fam == constructible_closure(sg, 2)  # deterministic
    assert cal.full() in fam
    assert len(set(fam)) == len(fam)
    for X in fam:
        for Y in fam:
            assert cal.intersect(X, Y) in fam
    shallow = set(constructible_closure(sg, 1))
    assert shallow <= set(fam)


def test_clifford_verdicts():
    assert clifford_check(FreeMonoid(2)).holds
    assert clifford_check(PositiveCone(2)).holds
    assert clifford_check(AxPlusB()).holds
    assert clifford_check(NumericalSemigroup((2,))).holds  # a copy of 2Z+
    v23 = clifford_check(NumericalSemigroup((2, 3)))
    assert v23.status == "fails"
    assert v23.witness == (2, 3, (5, ()))
    v46 = clifford_check(NumericalSemigroup((4, 6)))
    assert v46.status == "fails"
    # threshold 9: the set is {10,12,14,...} and 9 is not a member of S
    assert v46.witness == (4, 6, (9, ()))
    v35 = clifford_check(NumericalSemigroup((3, 5)))
    assert v35.status == "fails"
    assert v35.witness[:2] == (3, 5)


def test_clifford_witness_is_honest():
    # the reported intersection really is sS n tS and is not principal
    for gens in [(2, 3), (3, 5), (4, 6)]:
        sg = NumericalSemigroup(gens)
        cal = calculus(sg)
        s, t, X = clifford_check(sg).witness
        assert cal.intersect(cal.principal(s), cal.principal(t)) == X
        assert cal.principal_witness(X) is None


def test_independence_verdicts():
    num = NumericalSemigroup((2, 3))
    fam = constructible_closure(num, 3)
    verdict = independence_check(num, fam)
    assert not verdict.independent
    cover, target = verdict.witness
    assert cover == (principal(num, 2), principal(num, 3))
    assert target == (1, ())
    for sg in [FreeMonoid(2), PositiveCone(2), AxPlusB()]:
        assert independence_check(sg, constructible_closure(sg, 2)).independent
    assert independence_check(num, ((0, ()),)).independent  # singleton {Full}


@pytest.mark.parametrize("sg", BACKENDS, ids=ids)
def test_clifford_implies_independence(sg):
    if clifford_check(sg).holds:
        for depth in (1, 2, 3):
            fam = constructible_closure(sg, depth)
            assert independence_check(sg, fam).independent


def test_independence_witness_union_is_exact():
    num = NumericalSemigroup((2, 3))
    cal = calculus(num)
    cover, target = independence_check(
        num, constructible_closure(num, 3)).witness
    assert cal.union_equals(cover, target)
    for X in cover:
        assert cal.subset(X, target) and X != target
    # pointwise confirmation on a window
    for x in num.window(40):
        covered = any(cal.is_member(x, X) for X in cover)
        assert covered == cal.is_member(x, target)


def test_empty_propagates():
    fm = FreeMonoid(2)
    cal = calculus(fm)
    assert cal.translate((0,), EMPTY) is EMPTY
    assert cal.preimage((0,), EMPTY) is EMPTY
    assert cal.intersect(EMPTY, cal.full()) is EMPTY
    assert not cal.is_member((), EMPTY)
    assert cal.subset(EMPTY, EMPTY)
    assert not cal.subset(cal.full(), EMPTY)


def test_lcm_checks_against_axb_intersections():
    axb = AxPlusB()
    cal = calculus(axb)
    rng = random.Random(106)
    for _ in range(60):
        a = rng.choice([x for x in range(-9, 10) if x])
        b = rng.choice([x for x in range(-9, 10) if x])
        meet = cal.intersect(cal.principal((0, a)), cal.principal((0, b)))
        assert meet == (0, lcm_integer(a, b))
