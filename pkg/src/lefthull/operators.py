"""Finite window compressions of the regular representations.

Everything here is an exact 0/1 matrix cut down to a finite basis window.
Truncation can only lose information at the boundary, so every relation
is asserted on a safe core: the columns whose full trajectory through
both sides of the relation provably stays inside the window.  A relation
failing on its safe core is a genuine counterexample, never an artifact.
"""

from dataclasses import dataclass

from .hull import (ZERO, apply_element, compose, enumerate_hull,
                   evaluate_word, hull_sort_key, is_idempotent, lambda_,
                   render_element, star)
from .ideals import EMPTY, calculus, constructible_closure
from .matrices import Matrix
from .semigroups import InvariantViolation, UsageError


class Window:
    """Ordered duplicate-free basis with an index map."""

    def __init__(self, elements):
        elements = tuple(elements)
        index = {}
        for i, x in enumerate(elements):
            if x in index:
                raise UsageError("duplicate window element %r" % (x,))
            index[x] = i
        self.elements = elements
        self.index = index

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def position(self, x):
        if x not in self.index:
            raise UsageError("%r is not in the window" % (x,))
        return self.index[x]


def s_window(sg, size=None, bound=None):
    """Basis window over the semigroup, by element count or by grade bound."""
    if (size is None) == (bound is None):
        raise UsageError("give exactly one of size and bound")
    elements = sg.window_of_size(size) if size is not None else sg.window(bound)
    return Window(elements)


def hull_window(sg, length, generators=None, include=None):
    """Hull elements of word length <= length; when a semigroup window is
    passed, the missing lambda(s) are appended so the intertwiner always
    has its targets."""
    elems = list(enumerate_hull(sg, length, generators))
    if include is not None:
        seen = set(elems)
        extra = [lambda_(sg, s) for s in include]
        extra = [f for f in extra if f not in seen]
        extra.sort(key=hull_sort_key(sg))
        elems.extend(extra)
    return Window(elems)


@dataclass(frozen=True)
class TruncatedOperator:
    """A window compression together with its exact column set."""

    matrix: Matrix
    row_window: Window
    col_window: Window
    safe: frozenset  # column indices whose action is fully visible


def isometry_matrix(sg, s, W):
    entries, safe = {}, set()
    for j, t in enumerate(W.elements):
        st = sg.multiply(s, t)
        if st in W.index:
            entries[(W.index[st], j)] = 1
            safe.add(j)
    n = len(W)
    return TruncatedOperator(Matrix(n, n, entries), W, W, frozenset(safe))


def char_projection(sg, X, W):
    cal = calculus(sg)
    entries = {(j, j): 1 for j, t in enumerate(W.elements)
               if cal.is_member(t, X)}
    n = len(W)
    return TruncatedOperator(Matrix(n, n, entries), W, W,
                             frozenset(range(n)))


def hull_matrix(sg, f, W):
    """The pointwise action of a hull element on the semigroup window."""
    n = len(W)
    if f is ZERO:
        return TruncatedOperator(Matrix.zeros(n, n), W, W,
                                 frozenset(range(n)))
    cal = calculus(sg)
    entries, safe = {}, set()
    for j, t in enumerate(W.elements):
        if cal.is_member(t, f.dom):
            ft = sg.act(f.grade, t)
            if ft in W.index:
                entries[(W.index[ft], j)] = 1
                safe.add(j)
        else:
            safe.add(j)  # genuinely annihilated, no truncation involved
    return TruncatedOperator(Matrix(n, n, entries), W, W, frozenset(safe))


def regular_rep_matrix(sg, f, HW):
    """Left regular representation on the hull window: q goes to f q
    exactly when star(f) f q = q, and to zero otherwise."""
    n = len(HW)
    entries, safe = {}, set()
    ff = ZERO if f is ZERO else compose(sg, star(sg, f), f)
    for j, q in enumerate(HW.elements):
        fq = compose(sg, f, q)
        if compose(sg, ff, q) == q:
            if fq in HW.index:
                entries[(HW.index[fq], j)] = 1
                safe.add(j)
        else:
            safe.add(j)
    return TruncatedOperator(Matrix(n, n, entries), HW, HW, frozenset(safe))


def intertwiner_matrix(sg, W, HW):
    """The isometry sending the semigroup basis vector at s to the hull
    basis vector at lambda(s)."""
    entries = {}
    for j, s in enumerate(W.elements):
        ls = lambda_(sg, s)
        if ls not in HW.index:
            raise UsageError("hull window misses lambda of %s" % sg.render(s))
        entries[(HW.index[ls], j)] = 1
    return TruncatedOperator(Matrix(len(HW), len(W), entries), HW, W,
                             frozenset(range(len(W))))


def conditional_expectation(op):
    """Diagonal part; the compression of the expectation onto the
    commutative corner."""
    if op.matrix.rows != op.matrix.cols:
        raise UsageError("expectation needs a square operator")
    return TruncatedOperator(op.matrix.diagonal(), op.row_window,
                             op.col_window, op.safe)


# ---------------------------------------------------------------------------
# trajectories: where does a basis vector really go, window or not


def _run_steps(sg, W, t, steps):
    """Apply multiply/divide/project steps in order to the basis vector at
    t.  Returns ("ok", end), ("zero",) for genuine annihilation, or
    ("out",) when any intermediate leaves the window."""
    cal = calculus(sg)
    cur = t
    for op, arg in steps:
        if op == "mul":
            cur = sg.multiply(arg, cur)
            if cur not in W.index:
                return ("out",)
        elif op == "div":
            u = sg.left_divide(arg, cur)
            if u is None:
                return ("zero",)
            if u not in W.index:
                return ("out",)
            cur = u
        elif op == "proj":
            if not cal.is_member(cur, arg):
                return ("zero",)
        else:
            raise UsageError("unknown step %r" % (op,))
    return ("ok", cur)


def _safe_columns(sg, W, steps):
    return frozenset(j for j, t in enumerate(W.elements)
                     if _run_steps(sg, W, t, steps)[0] != "out")


@dataclass(frozen=True)
class RelationReport:
    kind: str
    instances: tuple       # one description per verified instance
    checked_columns: int   # safe columns compared, summed over instances

    @property
    def count(self):
        return len(self.instances)


def _mismatch(kind, instance, detail=""):
    raise InvariantViolation("%s relation failed at %s%s"
                             % (kind, instance, detail))


def verify_relation(sg, kind, W, hull_win=None, depth=2, length=2,
                    generators=None):
    """Exact verification of one relation suite on its safe cores.

    kind: covariance | semilattice | isometry | cs-grade-one | intertwiner.
    Any mismatch on a safe column raises; the report lists every instance
    checked and how many columns that amounted to.
    """
    cal = calculus(sg)
    letters = tuple(generators if generators is not None else sg.generators())
    instances, checked = [], 0

    if kind == "covariance":
        # V_s e_X V_s* = e_{sX}
        family = constructible_closure(sg, depth, generators)
        for s in letters:
            V = isometry_matrix(sg, s, W)
            for X in family:
                lhs = V.matrix * char_projection(sg, X, W).matrix \
                    * V.matrix.transpose()
                rhs = char_projection(sg, cal.translate(s, X), W).matrix
                safe = _safe_columns(sg, W, (("div", s), ("proj", X),
                                             ("mul", s)))
                name = "covariance s=%s X=%s" % (sg.render(s), cal.render(X))
                if not lhs.columns_agree(rhs, safe):
                    _mismatch(kind, name)
                instances.append(name)
                checked += len(safe)

    elif kind == "semilattice":
        # e_X e_Y = e_{X meet Y}; diagonal, so every column is safe
        family = constructible_closure(sg, depth, generators)
        n = len(W)
        for i, X in enumerate(family):
            for Y in family[i:]:
                lhs = char_projection(sg, X, W).matrix \
                    * char_projection(sg, Y, W).matrix
                rhs = char_projection(sg, cal.intersect(X, Y), W).matrix
                name = "semilattice X=%s Y=%s" % (cal.render(X), cal.render(Y))
                if lhs != rhs:
                    _mismatch(kind, name)
                instances.append(name)
                checked += n

    elif kind == "isometry":
        # V_s* V_s = 1 wherever the shift stays visible
        for s in letters:
            V = isometry_matrix(sg, s, W)
            prod = V.matrix.transpose() * V.matrix
            eye = Matrix.identity(len(W))
            if not prod.columns_agree(eye, V.safe, rows=V.safe):
                _mismatch(kind, "isometry s=%s" % sg.render(s))
            instances.append("isometry s=%s" % sg.render(s))
            checked += len(V.safe)

    elif kind == "cs-grade-one":
        # identity-graded words act as the projection onto their domain
        G = sg.grading_group()
        pool = [(t, s) for t in (sg.identity(),) + letters
                for s in (sg.identity(),) + letters]
        words = []
        level = [[]]
        for _ in range(length):
            level = [w + [p] for w in level for p in pool]
            words.extend(level)
        for pairs in words:
            f = evaluate_word(sg, pairs)
            if f is not ZERO and f.grade != G.identity():
                continue
            X = EMPTY if f is ZERO else f.dom
            prod = Matrix.identity(len(W))
            steps = []
            for t, s in reversed(pairs):
                steps.extend((("mul", s), ("div", t)))
            for t, s in pairs:
                Vt = isometry_matrix(sg, t, W)
                Vs = isometry_matrix(sg, s, W)
                prod = prod * Vt.matrix.transpose() * Vs.matrix
            rhs = char_projection(sg, X, W).matrix
            safe = _safe_columns(sg, W, steps)
            name = "word %s" % " ".join("%s*.%s" % (sg.render(t), sg.render(s))
                                        for t, s in pairs)
            if not prod.columns_agree(rhs, safe):
                _mismatch(kind, name)
            instances.append(name)
            checked += len(safe)

    elif kind == "intertwiner":
        # T* L(f) T = w(f) for every enumerated hull element
        if hull_win is None:
            hull_win = hull_window(sg, length, generators, include=W)
        T = intertwiner_matrix(sg, W, hull_win)
        for f in enumerate_hull(sg, length, generators):
            lhs = T.matrix.transpose() \
                * regular_rep_matrix(sg, f, hull_win).matrix * T.matrix
            rep = hull_matrix(sg, f, W)
            name = "intertwiner f=%s" % render_element(sg, f)
            if not lhs.columns_agree(rep.matrix, rep.safe):
                _mismatch(kind, name)
            instances.append(name)
            checked += len(rep.safe)

    else:
        raise UsageError("unknown relation kind %r" % (kind,))

    return RelationReport(kind, tuple(instances), checked)


def expectation_loop(sg, W, length=3, generators=None, skip_invisible=False):
    """E fixes the compression of a hull element exactly when the element
    is idempotent.  Verified for every enumerated element; a
    non-idempotent whose action misses the window entirely proves
    nothing, so it either raises or, when skip_invisible is set, is
    counted and left out."""
    total = fixed = skipped = 0
    for f in enumerate_hull(sg, length, generators):
        op = hull_matrix(sg, f, W)
        isfixed = conditional_expectation(op).matrix == op.matrix
        expected = is_idempotent(sg, f)
        if f is not ZERO and not expected and op.matrix.is_zero():
            if skip_invisible:
                skipped += 1
                continue
            raise InvariantViolation(
                "window too small: %s acts invisibly" % render_element(sg, f))
        if isfixed != expected:
            raise InvariantViolation(
                "expectation loop failed at %s" % render_element(sg, f))
        total += 1
        fixed += isfixed
    return (total, fixed, skipped) if skip_invisible else (total, fixed)
