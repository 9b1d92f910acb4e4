"""The left inverse hull: partial bijections x -> g.x with constructible
domains, represented exactly as (grade, domain) pairs.

A nonzero element is the pair (g, X): the map with domain X sending x to
g.x computed in the grading group and re-read in S.  The pair determines
the map and vice versa, so dataclass equality is semantic equality.  ZERO
is the empty map.

``materialize_word`` is the independent oracle: it replays an alternating
word pointwise on a finite window using only multiply and left_divide,
never consulting the (g, X) algebra.  Window exits are tracked as boundary
points and excluded from comparisons; a failed left_divide inside the
window is genuine undefinedness.
"""

from dataclasses import dataclass, field
import random

from .ideals import EMPTY, calculus, clifford_check
from .semigroups import (InvariantViolation, UnsupportedOperation, UsageError)


class _Zero:
    __slots__ = ()

    def __repr__(self):
        return "ZERO"


ZERO = _Zero()


@dataclass(frozen=True)
class HullElement:
    grade: object
    dom: object

    def __post_init__(self):
        if self.dom is EMPTY:
            raise UsageError("use ZERO for the empty map")


def identity_element(sg):
    return HullElement(sg.grading_group().identity(), calculus(sg).full())


def lambda_(sg, s):
    """Left translation by s, defined on all of S."""
    sg._check(s)
    return HullElement(sg.embed(s), calculus(sg).full())


def partial_identity(sg, X):
    if X is EMPTY:
        return ZERO
    return HullElement(sg.grading_group().identity(), X)


def star(sg, f):
    if f is ZERO:
        return ZERO
    G = sg.grading_group()
    return HullElement(G.inv(f.grade), calculus(sg).image(f.grade, f.dom))


def compose(sg, f, h):
    """f after h as partial maps; ZERO when the domain collapses."""
    if f is ZERO or h is ZERO:
        return ZERO
    cal = calculus(sg)
    G = sg.grading_group()
    ran_h = cal.image(h.grade, h.dom)
    meet = cal.intersect(f.dom, ran_h)
    if meet is EMPTY:
        return ZERO
    dom = cal.image(G.inv(h.grade), meet)
    return HullElement(G.mul(f.grade, h.grade), dom)


def apply_element(sg, f, x):
    """f(x), or None where undefined."""
    sg._check(x)
    if f is ZERO or not calculus(sg).is_member(x, f.dom):
        return None
    return sg.act(f.grade, x)


def is_idempotent(sg, f):
    return f is ZERO or f.grade == sg.grading_group().identity()


def grading(sg, f):
    if f is ZERO:
        raise UsageError("ZERO carries no grade")
    return f.grade


def evaluate_word(sg, pairs):
    """Left-to-right product of star(lambda(t)) lambda(s) over the pairs."""
    acc = identity_element(sg)
    for t, s in pairs:
        acc = compose(sg, acc, star(sg, lambda_(sg, t)))
        acc = compose(sg, acc, lambda_(sg, s))
    return acc


def recompose(sg, p, q):
    """lambda(p) lambda(q)*, the Clifford-condition normal shape."""
    return compose(sg, lambda_(sg, p), star(sg, lambda_(sg, q)))


def hull_sort_key(sg):
    G = sg.grading_group()
    cal = calculus(sg)

    def key(f):
        if f is ZERO:
            return (2,)
        return (1, G.key(f.grade), cal.key(f.dom))

    return key


def enumerate_hull(sg, length, generators=None):
    """All values of alternating words with at most ``length`` pairs whose
    letters run over the generators plus the identity; deterministic order.
    """
    if length < 0:
        raise UsageError("length must be >= 0")
    letters = (sg.identity(),) + tuple(generators if generators is not None
                                       else sg.generators())
    atoms = []
    for t in letters:
        for s in letters:
            atoms.append(compose(sg, star(sg, lambda_(sg, t)),
                                 lambda_(sg, s)))
    seen = {identity_element(sg)}
    level = [identity_element(sg)]
    for _ in range(length):
        nxt = []
        for f in level:
            if f is ZERO:
                continue  # absorbing
            for a in atoms:
                g = compose(sg, f, a)
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
        level = nxt
    return tuple(sorted(seen, key=hull_sort_key(sg)))


def render_element(sg, f):
    if f is ZERO:
        return "0"
    G = sg.grading_group()
    return "%s | %s" % (G.render(f.grade), calculus(sg).render(f.dom))


# ---------------------------------------------------------------------------
# materialization oracle


@dataclass(frozen=True, eq=True)
class PartialMap:
    mapping: dict = field(compare=True)
    boundary: frozenset = field(compare=True)

    def __post_init__(self):
        vals = list(self.mapping.values())
        if len(set(vals)) != len(vals):
            raise InvariantViolation("partial map is not injective")


def materialize_element(sg, f, window):
    wset = set(window)
    mapping, boundary = {}, set()
    if f is not ZERO:
        cal = calculus(sg)
        for x in window:
            if not cal.is_member(x, f.dom):
                continue
            y = sg.act(f.grade, x)
            if y in wset:
                mapping[x] = y
            else:
                boundary.add(x)
    return PartialMap(mapping, frozenset(boundary))


def materialize_word(sg, pairs, window):
    """Pointwise replay of the word using only multiply and left_divide."""
    wset = set(window)
    mapping, boundary = {}, set()
    for x in window:
        state = x
        verdict = "ok"
        for t, s in reversed(list(pairs)):
            state = sg.multiply(s, state)
            if state not in wset:
                verdict = "boundary"
                break
            state = sg.left_divide(t, state)
            if state is None:
                verdict = "undefined"
                break
            if state not in wset:
                verdict = "boundary"
                break
        if verdict == "ok":
            mapping[x] = state
        elif verdict == "boundary":
            boundary.add(x)
    return PartialMap(mapping, frozenset(boundary))


def maps_agree(a, b):
    """Equality of partial maps away from either boundary."""
    excluded = a.boundary | b.boundary
    za = {k: v for k, v in a.mapping.items() if k not in excluded}
    zb = {k: v for k, v in b.mapping.items() if k not in excluded}
    return za == zb


def random_word(sg, rng, pairs, pool=10):
    win = sg.window_of_size(pool)
    return [(win[rng.randrange(len(win))], win[rng.randrange(len(win))])
            for _ in range(pairs)]


# ---------------------------------------------------------------------------
# decision procedures on top of the algebra


def check_lift_relation(sg, f, s, window_size=20):
    """f lambda(s) = lambda(f(s)) whenever s lies in dom(f); checked both in
    the algebra and pointwise."""
    fs = apply_element(sg, f, s)
    if fs is None:
        raise UsageError("element %r is outside the domain" % (s,))
    lhs = compose(sg, f, lambda_(sg, s))
    rhs = lambda_(sg, fs)
    if lhs != rhs:
        return False
    win = sg.window_of_size(window_size)
    return maps_agree(materialize_element(sg, lhs, win),
                      materialize_element(sg, rhs, win))


def clifford_normal_form(sg, f, window_size=30):
    """Write f as lambda(p) lambda(q)* on backends where every nonempty
    intersection of principal ideals is principal; verified pointwise
    before returning.
    """
    verdict = clifford_check(sg)
    if not verdict.holds:
        raise UnsupportedOperation(
            "normal form needs principal intersections; counterexample %r"
            % (verdict.witness,), witness=verdict.witness)
    if f is ZERO:
        raise UsageError("ZERO has no normal form")
    cal = calculus(sg)
    q = cal.principal_witness(f.dom)
    if q is None:
        raise InvariantViolation(
            "domain %r is not principal on a backend passing the "
            "principality test" % (f.dom,))
    p = sg.act(f.grade, q)
    back = recompose(sg, p, q)
    win = sg.window_of_size(window_size)
    if back != f or not maps_agree(materialize_element(sg, back, win),
                                   materialize_element(sg, f, win)):
        raise InvariantViolation("normal form (%r, %r) does not recompose "
                                 "to %r" % (p, q, f))
    return (p, q)


def fell_grade_decompose(sg, terms):
    """Partition a formal sum of (coefficient, element) terms by grade."""
    out = {}
    for coeff, f in terms:
        if f is ZERO:
            raise UsageError("ZERO terms carry no grade")
        out.setdefault(f.grade, []).append((coeff, f))
    return out


@dataclass(frozen=True)
class EStarReport:
    mode: str             # "E-unitary" or "strongly E*-unitary"
    zero_present: bool
    samples: int
    premise_hits: int
    counterexamples: int
    proof: str


def estar_unitary_report(sg, sample=200, length=2, seed=7, window_size=20):
    """Idempotent purity of the grading, plus a sampled check that
    compose(f, e) = e forces f idempotent; counterexamples are hard
    failures since they would contradict the grading.
    """
    from .group_image import is_left_reversible

    rng = random.Random(seed)
    elements = [f for f in enumerate_hull(sg, length)]
    zero_present = ZERO in elements
    reversible = is_left_reversible(sg).holds
    if zero_present and reversible:
        raise InvariantViolation("ZERO reachable in a left reversible hull")
    win = sg.window_of_size(window_size)
    idems = [f for f in elements if f is not ZERO and is_idempotent(sg, f)]
    pool = [f for f in elements if f is not ZERO]
    hits = 0
    bad = 0
    for i in range(sample):
        if i % 2:
            f = pool[rng.randrange(len(pool))]
        else:
            w = random_word(sg, rng, rng.randrange(1, 3))
            f = evaluate_word(sg, w)
            if f is ZERO:
                f = idems[rng.randrange(len(idems))]
        e = idems[rng.randrange(len(idems))]
        algebra_premise = compose(sg, f, e) == e
        pointwise = maps_agree(
            materialize_element(sg, compose(sg, f, e), win),
            materialize_element(sg, e, win))
        if algebra_premise:
            hits += 1
            if not (is_idempotent(sg, f) and pointwise):
                bad += 1
    if bad:
        raise InvariantViolation("%d counterexamples to E*-unitarity" % bad)
    mode = "E-unitary" if reversible else "strongly E*-unitary"
    G = sg.grading_group()
    return EStarReport(mode=mode, zero_present=zero_present, samples=sample,
                       premise_hits=hits, counterexamples=0,
                       proof="idempotent-pure grading into %s" % G.describe())
