"""Exact arithmetic in H*(F(R^n, k)), the integral cohomology ring of the
ordered configuration space of k points in R^n.

For n >= 2 the ring is generated by classes A_{i,j} (1 <= j < i <= k), all
in degree n - 1, subject to

    (1) A_{i,j}^2 = 0,
    (2) A_{i,j} A_{i,l} = A_{l,j} (A_{i,l} - A_{i,j})   for j < l < i,
    (3) associativity and graded commutativity.

Products are stored in normal form on the admissible monomials: products
whose top indices i are strictly increasing.  Rewriting brings equal top
indices adjacent (with Koszul signs), applies relation (2) with the smaller
second index first, and finally sorts by top index.  Each relation-(2) step
strictly shrinks the multiset of top indices, so rewriting terminates;
confluence of the strategy is checked empirically (see
``all_normal_forms`` and the verification suite), not assumed.

Coefficients are native Python integers, so all arithmetic is exact and
cannot overflow.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product


class RingError(ValueError):
    """Raised on invalid ring parameters or generator indices."""


@dataclass(frozen=True)
class RingContext:
    """Ambient data for a fixed (n, k): immutable and shareable."""

    n: int
    k: int

    @property
    def gen_degree(self):
        return self.n - 1

    @property
    def gen_parity(self):
        return "odd" if (self.n - 1) % 2 else "even"


@dataclass(frozen=True)
class Monomial:
    """A single normal-form term: factors with strictly increasing top index."""

    factors: tuple
    coefficient: int

    @property
    def num_factors(self):
        return len(self.factors)

    def degree(self, ctx):
        return len(self.factors) * ctx.gen_degree

    def __str__(self):
        if not self.factors:
            body = "1"
        else:
            body = "".join("A_{%d,%d}" % (i, j) for i, j in self.factors)
        if self.coefficient == 1:
            return body
        if self.coefficient == -1:
            return "-" + body
        return "%d*%s" % (self.coefficient, body)


def make_ring(n, k):
    """Build the ring context for H*(F(R^n, k)).

    The presentation only holds for n >= 2; callers needing n = 1 facts
    should use the bounds engine instead.
    """
    if n < 2:
        raise RingError("n must be >= 2 (got n=%d); the presentation is invalid for n < 2" % n)
    if k < 1:
        raise RingError("k must be >= 1 (got k=%d)" % k)
    return RingContext(n, k)


class Element:
    """A finite integer linear combination of admissible monomials.

    ``terms`` maps factor tuples (each a tuple of (i, j) pairs) to nonzero
    integer coefficients.  Instances are immutable in practice; all
    operations return new elements.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = {w: c for w, c in terms.items() if c != 0}

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        _check_ctx(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return Element(self.ctx, out)

    def __neg__(self):
        return Element(self.ctx, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Element(self.ctx, {w: c * other for w, c in self.terms.items()})
        return multiply(self, other)

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            parts.append(str(Monomial(w, c)))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return "<Element %s>" % self

    def monomials(self):
        return [Monomial(w, c) for w, c in sorted(self.terms.items())]


def _check_ctx(a, b):
    if a.ctx != b.ctx:
        raise RingError(
            "context mismatch: (n=%d,k=%d) vs (n=%d,k=%d)"
            % (a.ctx.n, a.ctx.k, b.ctx.n, b.ctx.k)
        )


def _check_index(ctx, i, j):
    if not (1 <= j < i <= ctx.k):
        raise RingError(
            "generator A_{%d,%d} invalid: need 1 <= j < i <= k=%d" % (i, j, ctx.k)
        )


def unit(ctx, coeff=1):
    """The degree-0 element coeff * 1."""
    return Element(ctx, {(): coeff})


def generator(ctx, i, j):
    """The degree-(n-1) generator A_{i,j}, 1 <= j < i <= k."""
    _check_index(ctx, i, j)
    return Element(ctx, {((i, j),): 1})


def generator_indices(ctx):
    """All valid (i, j) pairs for the context, sorted."""
    return [(i, j) for i in range(2, ctx.k + 1) for j in range(1, i)]


def _first_violation(word):
    for t in range(len(word) - 1):
        if word[t][0] >= word[t + 1][0]:
            return t
    return None


@lru_cache(maxsize=None)
def _normalize_word(word, odd):
    """Reduce a formal word to normal form; returns ((word, coeff), ...).

    Deterministic strategy: always rewrite at the leftmost violation.
    ``odd`` is the parity of the generator degree; adjacent swaps pick up
    the Koszul sign (-1)^{(n-1)^2} = -1 exactly when it is odd.
    """
    t = _first_violation(word)
    if t is None:
        return ((word, 1),)
    (i1, j1), (i2, j2) = word[t], word[t + 1]
    head, tail = word[: t], word[t + 2:]
    swap_sign = -1 if odd else 1
    out = {}

    def acc(w, c):
        for ww, cc in _normalize_word(w, odd):
            out[ww] = out.get(ww, 0) + c * cc

    if i1 == i2:
        if j1 == j2:
            # relation (1): the square of a generator vanishes
            return ()
        if j1 > j2:
            acc(head + ((i2, j2), (i1, j1)) + tail, swap_sign)
        else:
            # relation (2) with i = i1, j = j1 < l = j2
            acc(head + ((j2, j1), (i1, j2)) + tail, 1)
            acc(head + ((j2, j1), (i1, j1)) + tail, -1)
    else:
        acc(head + ((i2, j2), (i1, j1)) + tail, swap_sign)
    return tuple(sorted((w, c) for w, c in out.items() if c != 0))


def normal_form(ctx, raw, coeff=1):
    """Reduce coeff * A_{raw[0]} ... A_{raw[-1]} to an element in normal form."""
    word = tuple((int(i), int(j)) for i, j in raw)
    for i, j in word:
        _check_index(ctx, i, j)
    odd = ctx.gen_degree % 2 == 1
    out = {}
    for w, c in _normalize_word(word, odd):
        out[w] = out.get(w, 0) + coeff * c
    return Element(ctx, out)


def multiply(a, b):
    """Cup product of two elements, reduced to normal form."""
    _check_ctx(a, b)
    odd = a.ctx.gen_degree % 2 == 1
    out = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            for w, c in _normalize_word(wa + wb, odd):
                out[w] = out.get(w, 0) + ca * cb * c
    return Element(a.ctx, out)


def is_zero(a):
    return not a.terms


def element_degree(a):
    """Common degree of all terms, or the string "inhomogeneous".

    The zero element is reported as degree 0.
    """
    if not a.terms:
        return 0
    degrees = {len(w) * a.ctx.gen_degree for w in a.terms}
    if len(degrees) == 1:
        return degrees.pop()
    return "inhomogeneous"


def basis(ctx, q):
    """All admissible monomials with q factors, coefficient 1.

    Choose a strictly increasing set of top indices in {2, ..., k} and,
    independently, any j < i for each.  The count is the coefficient of
    t^q in prod_{i=2}^{k} (1 + (i-1) t); empty for q > k - 1.
    """
    if q < 0:
        raise RingError("q must be >= 0 (got %d)" % q)
    if q == 0:
        return [Monomial((), 1)]
    out = []
    for tops in combinations(range(2, ctx.k + 1), q):
        for js in product(*[range(1, i) for i in tops]):
            out.append(Monomial(tuple(zip(tops, js)), 1))
    return out


def poincare_table(ctx):
    """Ranks of H^* as (degree, rank) pairs at degrees q(n-1), q = 0..k-1.

    All other degrees are zero; the total rank is k!.
    """
    return [(q * ctx.gen_degree, len(basis(ctx, q))) for q in range(ctx.k)]


def cuplength(ctx):
    """Longest nonzero product of positive-degree classes, with a witness.

    Returns (k - 1, A_{2,1} A_{3,1} ... A_{k,1}); the witness is admissible,
    hence nonzero, and every product of k generators vanishes because a
    strictly increasing chain of top indices in {2..k} has length < k.
    """
    if ctx.k == 1:
        return 0, Monomial((), 1)
    word = tuple((i, 1) for i in range(2, ctx.k + 1))
    witness = normal_form(ctx, word)
    if is_zero(witness):
        raise RingError("internal error: admissible witness reduced to zero")
    return ctx.k - 1, Monomial(word, 1)


# ---------------------------------------------------------------------------
# Confluence checking: exhaustive exploration of rewrite orders.


def _applicable_steps(word):
    """All positions where some reducing rewrite applies, with its kind."""
    steps = []
    for t in range(len(word) - 1):
        (i1, j1), (i2, j2) = word[t], word[t + 1]
        if i1 > i2:
            steps.append((t, "swap"))
        elif i1 == i2:
            if j1 == j2:
                steps.append((t, "square"))
            elif j1 > j2:
                steps.append((t, "swap"))
            else:
                steps.append((t, "relation"))
    return steps


def _apply_step(word, step, odd):
    t, kind = step
    head, tail = word[: t], word[t + 2:]
    (i1, j1), (i2, j2) = word[t], word[t + 1]
    if kind == "square":
        return []
    if kind == "swap":
        return [(head + ((i2, j2), (i1, j1)) + tail, -1 if odd else 1)]
    return [
        (head + ((j2, j1), (i1, j2)) + tail, 1),
        (head + ((j2, j1), (i1, j1)) + tail, -1),
    ]


def all_normal_forms(word, odd, _memo=None):
    """Set of canonical normal forms reachable from ``word``.

    Branches over every applicable rewrite position at every stage.  Each
    result is a sorted tuple of (word, coeff) pairs.  A singleton result for
    every word certifies confluence of the rewriting system on that word.
    """
    if _memo is None:
        _memo = {}
    word = tuple(word)
    if word in _memo:
        return _memo[word]
    steps = _applicable_steps(word)
    if not steps:
        result = frozenset({((word, 1),)})
        _memo[word] = result
        return result
    results = set()
    for step in steps:
        produced = _apply_step(word, step, odd)
        # combine every choice of normal form for every produced term
        partials = [{}]
        for w, c in produced:
            nexts = []
            for form in all_normal_forms(w, odd, _memo):
                for partial in partials:
                    combo = dict(partial)
                    for ww, cc in form:
                        combo[ww] = combo.get(ww, 0) + c * cc
                    nexts.append(combo)
            partials = nexts
        for combo in partials:
            results.add(tuple(sorted((w, c) for w, c in combo.items() if c != 0)))
    result = frozenset(results)
    _memo[word] = result
    return result
