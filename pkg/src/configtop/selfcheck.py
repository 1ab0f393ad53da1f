"""Self-verification suites backing the ``verify`` CLI subcommand.

Each suite returns (name, ok, detail).  The suites re-derive results by
independent means: polynomial expansion for ranks, exhaustive rewrite-order
exploration for confluence, brute-force partition search for trees, and a
full sweep for bound consistency.
"""

import random
from itertools import product
from math import factorial

from configtop import bounds, cohen_ring
from configtop.cohen_ring import all_normal_forms, generator_indices, make_ring
from configtop.labeling_trees import alpha, min_edges


def poly_ranks(k):
    """Coefficients of prod_{i=2}^{k} (1 + (i-1) t), by direct expansion."""
    coeffs = [1]
    for i in range(2, k + 1):
        coeffs = [
            (coeffs[q] if q < len(coeffs) else 0)
            + (i - 1) * (coeffs[q - 1] if q >= 1 else 0)
            for q in range(len(coeffs) + 1)
        ]
    return coeffs


def confluence_suite(max_k=4, max_len=3):
    """All formal words reduce identically under every rewrite order."""
    checked = 0
    for odd in (False, True):
        memo = {}
        gens = generator_indices(make_ring(2, max_k))
        for length in range(1, max_len + 1):
            for word in product(gens, repeat=length):
                forms = all_normal_forms(word, odd, memo)
                if len(forms) != 1:
                    return (
                        "confluence", False,
                        "word %r (odd=%s) has %d distinct normal forms"
                        % (word, odd, len(forms)),
                    )
                deterministic = cohen_ring._normalize_word(word, odd)
                if deterministic not in forms:
                    return (
                        "confluence", False,
                        "deterministic reduction of %r disagrees with "
                        "exhaustive exploration" % (word,),
                    )
                checked += 1
    return "confluence", True, "%d words, both parities" % checked


def rank_product_suite(max_k=8):
    """basis/poincare_table ranks match the polynomial expansion oracle."""
    for k in range(1, max_k + 1):
        expected = poly_ranks(k)
        for n in (2, 3):
            table = cohen_ring.poincare_table(make_ring(n, k))
            ranks = [r for _deg, r in table]
            if ranks != expected:
                return (
                    "rank_vs_product_formula", False,
                    "(n=%d,k=%d): ranks %r != oracle %r" % (n, k, ranks, expected),
                )
            degrees = [d for d, _r in table]
            if degrees != [q * (n - 1) for q in range(k)]:
                return (
                    "rank_vs_product_formula", False,
                    "(n=%d,k=%d): degrees not q(n-1)" % (n, k),
                )
    return "rank_vs_product_formula", True, "k <= %d, n in {2,3}" % max_k


def total_rank_suite(max_k=8):
    """Total rank of H*(F(R^n,k)) equals k!."""
    for k in range(1, max_k + 1):
        total = sum(r for _d, r in cohen_ring.poincare_table(make_ring(3, k)))
        if total != factorial(k):
            return (
                "total_rank_factorial", False,
                "k=%d: total rank %d != %d" % (k, total, factorial(k)),
            )
    return "total_rank_factorial", True, "k <= %d" % max_k


def tree_search_suite(max_n=5, max_k=16):
    """Exhaustive tree search agrees with the closed-form edge minimum."""
    for n in range(2, max_n + 1):
        for k in range(1, max_k + 1):
            closed, _w1 = min_edges(n, k, "closed_form")
            searched, witness = min_edges(n, k, "search")
            if closed != searched:
                return (
                    "tree_search_vs_closed_form", False,
                    "(n=%d,k=%d): search %d != closed form %d"
                    % (n, k, searched, closed),
                )
            if len(witness.trees) < alpha(k):
                return (
                    "tree_search_vs_closed_form", False,
                    "(n=%d,k=%d): witness has fewer than alpha(k) trees" % (n, k),
                )
    return "tree_search_vs_closed_form", True, "n <= %d, k <= %d" % (max_n, max_k)


def bounds_chain_suite(max_n=5, max_k=12, ring_check_cap=8):
    """Every report is consistent and the secat <= cat_B chain holds."""
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            try:
                secat = bounds.secat_bounds(n, k)
                cat_b = bounds.cat_B_bounds(n, k, ring_check_cap=ring_check_cap)
                cat_f = bounds.cat_F(n, k, ring_check_cap=ring_check_cap)
            except bounds.InconsistentBoundsError as exc:
                return "bound_consistency_sweep", False, str(exc)
            weight = (k - alpha(k)) * (n - 1)
            chain = (
                weight <= secat.lower <= secat.upper
                <= cat_b.upper <= max((k - 1) * (n - 1), 0)
            )
            if not chain:
                return (
                    "bound_consistency_sweep", False,
                    "(n=%d,k=%d): chain violated (secat [%d,%d], cat_B upper %d)"
                    % (n, k, secat.lower, secat.upper, cat_b.upper),
                )
            for rep in (secat, cat_b, cat_f):
                if rep.lower > rep.upper or (rep.exact and rep.lower != rep.upper):
                    return (
                        "bound_consistency_sweep", False,
                        "(n=%d,k=%d): malformed %s report" % (n, k, rep.invariant),
                    )
    return "bound_consistency_sweep", True, "n <= %d, k <= %d" % (max_n, max_k)


def algebra_property_suite(seed=0, trials=60, max_k=5):
    """Randomized graded-commutativity and associativity checks."""
    rng = random.Random(seed)
    for trial in range(trials):
        n = rng.choice((2, 3))
        k = rng.randint(2, max_k)
        ctx = make_ring(n, k)
        gens = generator_indices(ctx)

        def rand_elt(max_factors=2):
            word = tuple(rng.choice(gens) for _ in range(rng.randint(1, max_factors)))
            return cohen_ring.normal_form(ctx, word, rng.randint(-3, 3) or 1)

        a, b, c = rand_elt(), rand_elt(), rand_elt(1)
        da = cohen_ring.element_degree(a)
        db = cohen_ring.element_degree(b)
        sign = -1 if (da * db) % 2 else 1
        if (a * b - sign * (b * a)).terms:
            return (
                "algebra_properties", False,
                "graded commutativity failed (trial %d, n=%d, k=%d)" % (trial, n, k),
            )
        if ((a * b) * c - a * (b * c)).terms:
            return (
                "algebra_properties", False,
                "associativity failed (trial %d, n=%d, k=%d)" % (trial, n, k),
            )
    return "algebra_properties", True, "%d seeded trials (seed=%d)" % (trials, seed)


def run_all(seed=0, max_k=None):
    """Run every suite; max_k caps the heavier ring suites when given."""
    ring_k = min(max_k, 8) if max_k else 8
    tree_k = min(max_k, 16) if max_k else 16
    bound_k = min(max_k, 12) if max_k else 12
    return [
        confluence_suite(max_k=min(max_k, 4) if max_k else 4),
        rank_product_suite(max_k=ring_k),
        total_rank_suite(max_k=ring_k),
        tree_search_suite(max_k=tree_k),
        bounds_chain_suite(max_k=bound_k, ring_check_cap=ring_k),
        algebra_property_suite(seed=seed, max_k=min(max_k, 5) if max_k else 5),
    ]
