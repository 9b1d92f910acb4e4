"""Backend semigroups: canonical elements, exact operations, group embeddings.

Five concrete left cancellative monoids are supported:

* ``FreeMonoid(k)``         words over a k-letter alphabet, concatenation
* ``PositiveCone(n)``       (Z+)^n under addition
* ``NumericalSemigroup``    the submonoid of (Z+,+) generated by given integers
* ``AxPlusB()``             Z x Z^x with (b,a)*(d,c) = (b+a*d, a*c)
* ``FiniteTable``           a finite left cancellative monoid (hence a group)

Element values are plain hashable data (tuples, ints); the backend object
carries the operations.  Every backend embeds into a concrete group used for
grading; the group classes live here as well so the two layers share one
vocabulary.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
import math


class UsageError(ValueError):
    """Raised when an operation is called with arguments it cannot accept."""


class UnsupportedOperation(RuntimeError):
    """Raised when a backend does not support the requested operation.

    Carries an optional ``witness`` explaining why (e.g. a pair of elements
    whose principal ideals are disjoint).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvariantViolation(AssertionError):
    """An internal exactness invariant failed; never a silent fallback."""


# ---------------------------------------------------------------------------
# groups


class Group:
    """A concrete group with canonical hashable element values."""

    def identity(self):
        raise NotImplementedError

    def mul(self, g, h):
        raise NotImplementedError

    def inv(self, g):
        raise NotImplementedError

    def contains(self, g):
        raise NotImplementedError

    def key(self, g):
        """Total order key; used only for deterministic output."""
        raise NotImplementedError

    def render(self, g):
        raise NotImplementedError

    def power(self, g, n):
        if n < 0:
            return self.power(self.inv(g), -n)
        acc = self.identity()
        for _ in range(n):
            acc = self.mul(acc, g)
        return acc

    def describe(self):
        return repr(self)


def _reduce_signed(word):
    # free-group reduction; word is an iterable of nonzero ints, +i and -i
    # denoting generator i-1 and its inverse
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _letter(i, rank):
    return _LETTERS[i] if rank <= 26 else "g%d" % i


@dataclass(frozen=True)
class FreeGroup(Group):
    """Free group of given rank; elements are reduced tuples of signed ints."""

    rank: int

    def identity(self):
        return ()

    def mul(self, g, h):
        return _reduce_signed(g + h)

    def inv(self, g):
        return tuple(-x for x in reversed(g))

    def contains(self, g):
        if not isinstance(g, tuple):
            return False
        if any(not isinstance(x, int) or x == 0 or abs(x) > self.rank for x in g):
            return False
        return all(g[i] != -g[i + 1] for i in range(len(g) - 1))

    def key(self, g):
        return (len(g), g)

    def render(self, g):
        if not g:
            return "1"
        parts = []
        for x in g:
            name = _letter(abs(x) - 1, self.rank)
            parts.append(name if x > 0 else name + "'")
        return "".join(parts) if self.rank <= 26 else ".".join(parts)

    def describe(self):
        return "F_%d" % self.rank


@dataclass(frozen=True)
class Integers(Group):
    """Z^n; elements are int tuples of length n."""

    rank: int

    def identity(self):
        return (0,) * self.rank

    def mul(self, g, h):
        return tuple(a + b for a, b in zip(g, h))

    def inv(self, g):
        return tuple(-a for a in g)

    def contains(self, g):
        return (isinstance(g, tuple) and len(g) == self.rank
                and all(isinstance(a, int) for a in g))

    def key(self, g):
        return g

    def render(self, g):
        return "(" + ",".join(str(a) for a in g) + ")"

    def describe(self):
        return "Z" if self.rank == 1 else "Z^%d" % self.rank


@dataclass(frozen=True)
class IntegerLattice(Group):
    """d*Z inside Z; elements are plain ints divisible by d."""

    stride: int

    def identity(self):
        return 0

    def mul(self, g, h):
        return g + h

    def inv(self, g):
        return -g

    def contains(self, g):
        return isinstance(g, int) and g % self.stride == 0

    def key(self, g):
        return g

    def render(self, g):
        return "%+d" % g if g else "0"

    def describe(self):
        return "Z" if self.stride == 1 else "%dZ" % self.stride


@dataclass(frozen=True)
class RationalAffine(Group):
    """Q x Q^x with (q1,q2)(r1,r2) = (q1 + q2*r1, q2*r2); exact fractions."""

    def identity(self):
        return (Fraction(0), Fraction(1))

    def mul(self, g, h):
        return (g[0] + g[1] * h[0], g[1] * h[1])

    def inv(self, g):
        return (-g[0] / g[1], 1 / g[1])

    def contains(self, g):
        return (isinstance(g, tuple) and len(g) == 2
                and all(isinstance(q, Fraction) for q in g) and g[1] != 0)

    def key(self, g):
        return (g[0].numerator, g[0].denominator, g[1].numerator, g[1].denominator)

    def render(self, g):
        return "(%s,%s)" % (g[0], g[1])

    def describe(self):
        return "Q x Q^x"


@dataclass(frozen=True)
class FiniteGroup(Group):
    """A finite group given by its multiplication table."""

    table: tuple
    identity_index: int

    def identity(self):
        return self.identity_index

    def mul(self, g, h):
        return self.table[g][h]

    def inv(self, g):
        return self.inverse_table[g]

    @cached_property
    def inverse_table(self):
        n = len(self.table)
        inv = [None] * n
        e = self.identity_index
        for g in range(n):
            for h in range(n):
                if self.table[g][h] == e:
                    inv[g] = h
                    break
            if inv[g] is None:
                raise InvariantViolation("element %d has no inverse" % g)
        return tuple(inv)

    def contains(self, g):
        return isinstance(g, int) and 0 <= g < len(self.table)

    def key(self, g):
        return g

    def render(self, g):
        return str(g)

    def describe(self):
        return "finite group of order %d" % len(self.table)


# ---------------------------------------------------------------------------
# semigroups


class Semigroup:
    """Common surface of all backends.

    Elements are canonical hashable values; the backend validates shapes on
    the public operations and raises UsageError on mismatch.
    """

    finite = False

    def contains(self, x):
        raise NotImplementedError

    def _check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise UsageError("%r is not an element of %s" % (x, self.describe()))

    def identity(self):
        raise NotImplementedError

    def multiply(self, a, b):
        raise NotImplementedError

    def left_divide(self, s, t):
        """The unique r with s*r == t, or None if t is not in s*S."""
        raise NotImplementedError

    def preceq(self, s, t):
        """True iff s lies in t*S (s is a right multiple of t)."""
        self._check(s, t)
        return self.left_divide(t, s) is not None

    def embed(self, s):
        """Image of s in the grading group."""
        raise NotImplementedError

    def act(self, g, x):
        """g*x computed in the grading group and read back in S.

        Raises InvariantViolation when the product leaves S; callers only use
        this on points of an ideal the group element genuinely maps into S.
        """
        raise NotImplementedError

    def group_element_of(self, g):
        """The s in S with embed(s) == g, or None."""
        raise NotImplementedError

    def grading_group(self):
        raise NotImplementedError

    def generators(self):
        raise NotImplementedError

    def window(self, bound):
        """Deterministic window enumeration; prefix-monotone in the bound."""
        raise NotImplementedError

    def window_of_size(self, size):
        if self.finite:
            return self.window(size)[:size]
        bound = 1
        win = self.window(bound)
        while len(win) < size:
            bound *= 2
            win = self.window(bound)
        return win[:size]

    def key(self, x):
        """Total order key consistent with window order."""
        raise NotImplementedError

    def render(self, x):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError

    def units_trivial(self):
        """True iff the only invertible element is the identity."""
        raise NotImplementedError


@dataclass(frozen=True)
class FreeMonoid(Semigroup):
    """Words over a k-letter alphabet under concatenation."""

    alphabet_size: int

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise UsageError("alphabet size must be >= 1")

    def contains(self, x):
        return (isinstance(x, tuple)
                and all(isinstance(l, int) and 0 <= l < self.alphabet_size for l in x))

    def identity(self):
        return ()

    def multiply(self, a, b):
        self._check(a, b)
        return a + b

    def left_divide(self, s, t):
        self._check(s, t)
        if len(t) >= len(s) and t[:len(s)] == s:
            return t[len(s):]
        return None

    def embed(self, s):
        self._check(s)
        return tuple(l + 1 for l in s)

    def act(self, g, x):
        r = _reduce_signed(g + self.embed(x))
        if any(v < 0 for v in r):
            raise InvariantViolation("group element does not map %r into S" % (x,))
        return tuple(v - 1 for v in r)

    def group_element_of(self, g):
        if all(v > 0 for v in g):
            return tuple(v - 1 for v in g)
        return None

    def grading_group(self):
        return FreeGroup(self.alphabet_size)

    def generators(self):
        return tuple((l,) for l in range(self.alphabet_size))

    def window(self, bound):
        out = [()]
        level = [()]
        for _ in range(bound):
            level = [w + (l,) for w in level for l in range(self.alphabet_size)]
            out.extend(level)
        return out

    def key(self, x):
        return (len(x), x)

    def render(self, x):
        if not x:
            return "1"
        if self.alphabet_size <= 26:
            return "".join(_LETTERS[l] for l in x)
        return ".".join("g%d" % l for l in x)

    def parse(self, text):
        text = text.strip()
        if text == "1":
            return ()
        if self.alphabet_size <= 26:
            word = []
            for ch in text:
                i = _LETTERS.find(ch)
                if not (0 <= i < self.alphabet_size):
                    raise UsageError("bad letter %r for %s" % (ch, self.describe()))
                word.append(i)
            return tuple(word)
        try:
            return tuple(int(p.lstrip("g")) for p in text.split("."))
        except ValueError:
            raise UsageError("bad word %r" % text) from None

    def describe(self):
        return "FreeMonoid(%d)" % self.alphabet_size

    def units_trivial(self):
        return True


@dataclass(frozen=True)
class PositiveCone(Semigroup):
    """(Z+)^n under componentwise addition."""

    dimension: int

    def __post_init__(self):
        if self.dimension < 1:
            raise UsageError("dimension must be >= 1")

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == self.dimension
                and all(isinstance(a, int) and a >= 0 for a in x))

    def identity(self):
        return (0,) * self.dimension

    def multiply(self, a, b):
        self._check(a, b)
        return tuple(x + y for x, y in zip(a, b))

    def left_divide(self, s, t):
        self._check(s, t)
        r = tuple(y - x for x, y in zip(s, t))
        return r if all(a >= 0 for a in r) else None

    def embed(self, s):
        self._check(s)
        return s

    def act(self, g, x):
        r = tuple(a + b for a, b in zip(g, x))
        if any(a < 0 for a in r):
            raise InvariantViolation("group element does not map %r into S" % (x,))
        return r

    def group_element_of(self, g):
        return g if all(a >= 0 for a in g) else None

    def grading_group(self):
        return Integers(self.dimension)

    def generators(self):
        n = self.dimension
        return tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))

    def window(self, bound):
        out = []
        for total in range(bound + 1):
            out.extend(self._compositions(total, self.dimension))
        return out

    def _compositions(self, total, parts):
        if parts == 1:
            return [(total,)]
        out = []
        for first in range(total + 1):
            for rest in self._compositions(total - first, parts - 1):
                out.append((first,) + rest)
        return out

    def key(self, x):
        return (sum(x), x)

    def render(self, x):
        return "(" + ",".join(str(a) for a in x) + ")"

    def parse(self, text):
        parts = text.strip().strip("()").split(",")
        try:
            vec = tuple(int(p) for p in parts)
        except ValueError:
            raise UsageError("bad vector %r" % text) from None
        if len(vec) != self.dimension or any(a < 0 for a in vec):
            raise UsageError("bad vector %r for %s" % (text, self.describe()))
        return vec

    def describe(self):
        return "PositiveCone(%d)" % self.dimension

    def units_trivial(self):
        return True


class _NumericalData:
    """Membership table, gcd and conductor for a numerical semigroup.

    Everything is computed on the scaled semigroup S/d (gcd 1).  The scaled
    conductor exists because S/d is cofinite in Z+; it is detected from a run
    of min-generator consecutive members, then minimized.
    """

    def __init__(self, gens):
        self.d = math.gcd(*gens)
        self.scaled = tuple(g // self.d for g in gens)
        self.table = [False]
        self.table[0] = True
        self._limit = 0
        self.scaled_conductor = self._find_conductor()

    def _grow(self, limit):
        if limit <= self._limit:
            return
        old = self._limit
        self.table.extend([False] * (limit - old))
        for x in range(old + 1, limit + 1):
            self.table[x] = any(g <= x and self.table[x - g] for g in self.scaled)
        self._limit = limit

    def _find_conductor(self):
        m = min(self.scaled)
        bound = 4 * max(self.scaled)
        while True:
            self._grow(bound)
            run = 0
            for x in range(bound + 1):
                run = run + 1 if self.table[x] else 0
                if run >= m:
                    c = x - m + 1
                    while c > 0 and self.table[c - 1]:
                        c -= 1
                    return c
            bound *= 2

    def contains_scaled(self, x):
        if x < 0:
            return False
        if x >= self.scaled_conductor:
            return True
        return self.table[x]

    def contains(self, x):
        return isinstance(x, int) and x >= 0 and x % self.d == 0 \
            and self.contains_scaled(x // self.d)


@dataclass(frozen=True)
class NumericalSemigroup(Semigroup):
    """Submonoid of (Z+,+) generated by integers >= 2.

    Generators are stored sorted and duplicate-free.  The gcd of the
    generators may exceed 1; membership and ideal arithmetic account for it.
    """

    gens: tuple

    def __post_init__(self):
        gens = tuple(sorted(set(self.gens)))
        if not gens:
            raise UsageError("at least one generator required")
        if any(not isinstance(g, int) or g < 2 for g in gens):
            raise UsageError("generators must be integers >= 2")
        object.__setattr__(self, "gens", gens)

    @cached_property
    def _data(self):
        return _NumericalData(self.gens)

    @property
    def gcd(self):
        return self._data.d

    @property
    def conductor(self):
        """Least C with every multiple of gcd at or above C in S."""
        return self._data.d * self._data.scaled_conductor

    def contains(self, x):
        return self._data.contains(x)

    def identity(self):
        return 0

    def multiply(self, a, b):
        self._check(a, b)
        return a + b

    def left_divide(self, s, t):
        self._check(s, t)
        r = t - s
        return r if self.contains(r) else None

    def embed(self, s):
        self._check(s)
        return s

    def act(self, g, x):
        r = g + x
        if not self.contains(r):
            raise InvariantViolation("group element does not map %r into S" % (x,))
        return r

    def group_element_of(self, g):
        return g if self.contains(g) else None

    def grading_group(self):
        return IntegerLattice(1)

    def generators(self):
        return self.gens

    def members_below(self, bound):
        """All members x with 0 <= x < bound, ascending."""
        d = self._data.d
        out = []
        for x in range(0, bound, d) if bound > 0 else []:
            if self._data.contains_scaled(x // d):
                out.append(x)
        return out

    def window(self, bound):
        return self.members_below(bound + 1)

    def key(self, x):
        return x

    def render(self, x):
        return str(x)

    def parse(self, text):
        try:
            v = int(text.strip())
        except ValueError:
            raise UsageError("bad integer %r" % text) from None
        if not self.contains(v):
            raise UsageError("%d is not a member of %s" % (v, self.describe()))
        return v

    def describe(self):
        return "NumericalSemigroup<%s>" % ",".join(str(g) for g in self.gens)

    def units_trivial(self):
        return True


@dataclass(frozen=True)
class AxPlusB(Semigroup):
    """Pairs (b,a) with a nonzero, (b,a)*(d,c) = (b+a*d, a*c).

    Left cancellative, not algebraically ordered: every (b,1) and (b,-1) is a
    unit.  Negative multipliers are legal elements; the default window
    enumerates the a >= 1 part only.
    """

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == 2
                and isinstance(x[0], int) and isinstance(x[1], int) and x[1] != 0)

    def identity(self):
        return (0, 1)

    def multiply(self, s, t):
        self._check(s, t)
        b, a = s
        d, c = t
        return (b + a * d, a * c)

    def left_divide(self, s, t):
        self._check(s, t)
        b, a = s
        d, c = t
        if (d - b) % a or c % a:
            return None
        return ((d - b) // a, c // a)

    def embed(self, s):
        self._check(s)
        return (Fraction(s[0]), Fraction(s[1]))

    def act(self, g, x):
        q1, q2 = g
        b = q1 + q2 * x[0]
        a = q2 * x[1]
        if b.denominator != 1 or a.denominator != 1 or a == 0:
            raise InvariantViolation("group element does not map %r into S" % (x,))
        return (int(b), int(a))

    def group_element_of(self, g):
        q1, q2 = g
        if q1.denominator == 1 and q2.denominator == 1 and q2 != 0:
            return (int(q1), int(q2))
        return None

    def grading_group(self):
        return RationalAffine()

    def generators(self):
        return ((1, 1), (0, 2), (0, 3))

    def window(self, bound):
        # pairs with |b| <= bound and 1 <= a <= bound, graded by max(|b|, a);
        # inside a grade the offsets go 0, 1, -1, 2, -2, ... so the identity
        # leads the window
        out = []
        for grade in range(1, bound + 1):
            for a in range(1, grade + 1):
                if a == grade:
                    bs = [0]
                    for m in range(1, grade + 1):
                        bs.extend((m, -m))
                else:
                    bs = (grade, -grade)
                for b in bs:
                    out.append((b, a))
        return out

    def key(self, x):
        b, a = x
        return (max(abs(b), abs(a)), a, abs(b), 0 if b >= 0 else 1)

    def render(self, x):
        return "(%d,%d)" % x

    def parse(self, text):
        parts = text.strip().strip("()").split(",")
        try:
            b, a = (int(p) for p in parts)
        except ValueError:
            raise UsageError("bad pair %r" % text) from None
        if a == 0:
            raise UsageError("multiplier must be nonzero in %r" % text)
        return (b, a)

    def describe(self):
        return "AxPlusB"

    def units_trivial(self):
        return False


@dataclass(frozen=True)
class FiniteTable(Semigroup):
    """A finite monoid from an explicit table; must be left cancellative.

    A finite left cancellative monoid is a group, so validation also records
    the inverse table.  Validation reports the offending row on failure.
    """

    finite = True

    table: tuple
    identity_index: int = 0

    def __post_init__(self):
        n = len(self.table)
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        if n == 0:
            raise UsageError("empty table")
        for i, row in enumerate(table):
            if len(row) != n or any(not isinstance(v, int) or not 0 <= v < n for v in row):
                raise UsageError("row %d is not a permutation-sized row of indices" % i)
        e = self.identity_index
        if not 0 <= e < n:
            raise UsageError("identity index %d out of range" % e)
        for i in range(n):
            if table[e][i] != i or table[i][e] != i:
                raise UsageError("index %d is not a two-sided identity" % e)
        for i, row in enumerate(table):
            if len(set(row)) != n:
                raise UsageError("not left cancellative: row %d repeats a value" % i)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise UsageError(
                            "not associative at (%d,%d,%d)" % (a, b, c))

    def contains(self, x):
        return isinstance(x, int) and 0 <= x < len(self.table)

    def identity(self):
        return self.identity_index

    def multiply(self, a, b):
        self._check(a, b)
        return self.table[a][b]

    def left_divide(self, s, t):
        self._check(s, t)
        # a group: r = s^-1 * t always exists
        return self.table[self.grading_group().inv(s)][t]

    def embed(self, s):
        self._check(s)
        return s

    def act(self, g, x):
        return self.table[g][x]

    def group_element_of(self, g):
        return g

    @cached_property
    def _group(self):
        return FiniteGroup(self.table, self.identity_index)

    def grading_group(self):
        return self._group

    def generators(self):
        return tuple(i for i in range(len(self.table)) if i != self.identity_index)

    def window(self, bound):
        return list(range(len(self.table)))

    def key(self, x):
        return x

    def render(self, x):
        return str(x)

    def parse(self, text):
        try:
            v = int(text.strip())
        except ValueError:
            raise UsageError("bad index %r" % text) from None
        if not self.contains(v):
            raise UsageError("index %d out of range" % v)
        return v

    def describe(self):
        return "FiniteTable(order %d)" % len(self.table)

    def units_trivial(self):
        return len(self.table) == 1


def cyclic_table(n):
    """Multiplication table of Z/n; handy for tests and examples."""
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
