"""Labeling-tree combinatorics for the unordered configuration space B(R^n, k).

The one-point compactification of B(R^n, k) carries a CW structure whose
cells correspond to certain trees with vertices on n + 1 horizontal lines,
branching top to bottom; the dimension of a cell equals the number of edges
of its tree.  For the top mod-2 cohomology one only needs collections of
trees whose line counts are powers of two, monotone down the lines, with
leaf counts summing to k.  Minimizing total edges over such collections
gives the mod-2 cohomological dimension

    cohdim_{Z/2} B(R^n, k) = n k - min_edges(n, k) = (n - 1)(k - alpha(k)),

where alpha(k) is the number of 1's in the binary expansion of k.
"""

from dataclasses import dataclass


def alpha(k):
    """Number of 1's in the binary expansion of k."""
    if k < 1:
        raise ValueError("k must be >= 1 (got %d)" % k)
    return bin(k).count("1")


@dataclass(frozen=True)
class LabelTree:
    """A tree given by vertex counts per horizontal line, top to bottom.

    line_counts = (c_0, ..., c_n) with c_0 = 1, each c_t a power of two and
    c_t <= c_{t+1}.  Every non-top vertex has exactly one parent, so the
    tree has sum(c_1..c_n) edges and c_n leaves.
    """

    line_counts: tuple

    def __post_init__(self):
        cs = self.line_counts
        if len(cs) < 2:
            raise ValueError("need at least two lines (got %r)" % (cs,))
        if cs[0] != 1:
            raise ValueError("top line must hold a single vertex (got %d)" % cs[0])
        for c in cs:
            if c < 1 or c & (c - 1):
                raise ValueError("line count %d is not a power of two" % c)
        for a, b in zip(cs, cs[1:]):
            if a > b:
                raise ValueError("line counts must be monotone: %r" % (cs,))

    @property
    def edges(self):
        return sum(self.line_counts[1:])

    @property
    def leaves(self):
        return self.line_counts[-1]

    @property
    def depth(self):
        """Highest line index below which no more branching occurs.

        Unused by any formula; kept for report output.
        """
        for t, c in enumerate(self.line_counts):
            if c == self.leaves:
                return t
        return len(self.line_counts) - 1

    def to_dot(self, name="tree"):
        """Render as a DOT digraph; nodes are labeled line:index."""
        lines = ["digraph %s {" % name]
        cs = self.line_counts
        for t, c in enumerate(cs):
            for idx in range(c):
                lines.append('  "%d_%d" [label="%d:%d"];' % (t, idx, t, idx))
        for t in range(1, len(cs)):
            for idx in range(cs[t]):
                parent = idx * cs[t - 1] // cs[t]
                lines.append('  "%d_%d" -> "%d_%d";' % (t, idx, t - 1, parent))
        lines.append("}")
        return "\n".join(lines)


@dataclass(frozen=True)
class TreeCollection:
    """A multiset of label trees whose leaf counts sum to k."""

    trees: tuple
    n: int
    k: int

    def __post_init__(self):
        total = sum(t.leaves for t in self.trees)
        if total != self.k:
            raise ValueError(
                "leaf counts sum to %d, expected k=%d" % (total, self.k)
            )

    @property
    def total_edges(self):
        return sum(t.edges for t in self.trees)

    def to_dot(self):
        return "\n".join(
            t.to_dot("tree%d" % idx) for idx, t in enumerate(self.trees)
        )


def minimal_tree(n, leaves):
    """The fewest-edge tree on n+1 lines with the given leaf count.

    All branching is deferred to the bottom line: counts (1, ..., 1, leaves),
    hence (n - 1) + leaves edges.
    """
    return LabelTree((1,) * n + (leaves,))


def chain_tree(n):
    """The branchless vertical chain: one vertex per line, n edges."""
    return LabelTree((1,) * (n + 1))


def _power_of_two_partitions(k, max_part=None):
    """All multisets of powers of two summing to k, as descending tuples."""
    if max_part is None:
        max_part = 1 << (k.bit_length() - 1)
    if k == 0:
        yield ()
        return
    part = max_part
    while part >= 1:
        if part <= k:
            for rest in _power_of_two_partitions(k - part, part):
                yield (part,) + rest
        part >>= 1


def min_edges(n, k, mode="closed_form"):
    """Minimum total edges over tree collections with k leaves, with witness.

    closed_form returns k + (n - 1) * alpha(k) and the witness built from
    the binary expansion of k (one minimal-shape tree per binary digit).
    search exhaustively minimizes over all power-of-two leaf partitions;
    per leaf count the minimal shape is forced, so the search space is the
    set of partitions of k into powers of two.
    """
    if n < 2:
        raise ValueError("n must be >= 2 (got %d)" % n)
    if k < 1:
        raise ValueError("k must be >= 1 (got %d)" % k)
    if mode == "closed_form":
        leaf_counts = [1 << b for b in range(k.bit_length()) if k >> b & 1]
        trees = tuple(minimal_tree(n, c) for c in sorted(leaf_counts, reverse=True))
        return k + (n - 1) * alpha(k), TreeCollection(trees, n, k)
    if mode == "search":
        best = None
        for parts in _power_of_two_partitions(k):
            trees = tuple(minimal_tree(n, c) for c in parts)
            coll = TreeCollection(trees, n, k)
            if best is None or coll.total_edges < best.total_edges:
                best = coll
        return best.total_edges, best
    raise ValueError("unknown mode %r" % (mode,))


def cohdim_mod2(n, k):
    """Top nonvanishing degree of H^*(B(R^n, k); Z/2).

    Computed both as n k - min_edges(n, k) and as (n - 1)(k - alpha(k));
    the two must agree.
    """
    if n < 2:
        raise ValueError("n must be >= 2 (got %d)" % n)
    if k < 1:
        raise ValueError("k must be >= 1 (got %d)" % k)
    if k == 1:
        return 0
    by_formula = (n - 1) * (k - alpha(k))
    by_trees = n * k - min_edges(n, k)[0]
    if by_formula != by_trees:
        raise AssertionError(
            "cohdim mismatch for (n=%d, k=%d): formula %d vs trees %d"
            % (n, k, by_formula, by_trees)
        )
    return by_formula


def cell_dim_range(n, k):
    """Dimension range (k + n - 1, k n) of the non-basepoint cells.

    Justifies cat(B(R^n, k)) <= n k - (k + n - 1) = (k - 1)(n - 1) by
    removing the low skeleton of the compactified CW model.
    """
    if n < 2:
        raise ValueError("n must be >= 2 (got %d)" % n)
    if k < 1:
        raise ValueError("k must be >= 1 (got %d)" % k)
    return k + n - 1, k * n
