"""Certified bounds for cat(F(R^n,k)), cat(B(R^n,k)) and secat(pi^n_k).

Every inequality the engine uses is recorded as a BoundEvidence item with a
rule identifier and a citation stating the underlying fact.  A report
merges all applicable evidence: the lower bound is the max of the lower
evidence, the upper bound the min of the upper evidence, and the exactness
flag is set when a known exact family applies or the bounds meet.  A lower
bound exceeding an upper bound indicates an implementation bug and raises
InconsistentBoundsError instead of clamping.
"""

from dataclasses import dataclass, field
from math import factorial

from configtop import cohen_ring
from configtop.labeling_trees import alpha, cohdim_mod2

INVARIANTS = ("cat_F", "cat_B", "secat")

# Default cap on k for the cuplength cross-check against the symbolic ring.
RING_CHECK_CAP = 8


class InconsistentBoundsError(RuntimeError):
    """A lower bound exceeded an upper bound: internal inconsistency."""


@dataclass(frozen=True)
class BoundEvidence:
    direction: str  # "lower" or "upper"
    value: int
    rule: str
    citation: str

    def __post_init__(self):
        if self.direction not in ("lower", "upper"):
            raise ValueError("bad direction %r" % (self.direction,))
        if self.value < 0:
            raise ValueError("negative bound %d" % self.value)
        if not self.citation:
            raise ValueError("empty citation for rule %r" % (self.rule,))


@dataclass
class BoundReport:
    invariant: str
    n: int
    k: int
    lower: int
    upper: int
    exact: bool
    evidence: list = field(default_factory=list)
    conjecture_value: int = None

    def to_dict(self):
        return {
            "invariant": self.invariant,
            "n": self.n,
            "k": self.k,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "conjecture_value": self.conjecture_value,
            "evidence": [
                {
                    "direction": e.direction,
                    "value": e.value,
                    "rule": e.rule,
                    "citation": e.citation,
                }
                for e in self.evidence
            ],
        }


def _merge(invariant, n, k, evidence, exact_known=False, conjecture_value=None):
    lowers = [e for e in evidence if e.direction == "lower"]
    uppers = [e for e in evidence if e.direction == "upper"]
    if not lowers or not uppers:
        raise InconsistentBoundsError(
            "%s(n=%d,k=%d): missing %s evidence"
            % (invariant, n, k, "lower" if not lowers else "upper")
        )
    best_low = max(lowers, key=lambda e: e.value)
    best_up = min(uppers, key=lambda e: e.value)
    if best_low.value > best_up.value:
        raise InconsistentBoundsError(
            "%s(n=%d,k=%d): lower rule %r gives %d > upper rule %r gives %d"
            % (invariant, n, k, best_low.rule, best_low.value,
               best_up.rule, best_up.value)
        )
    exact = exact_known or best_low.value == best_up.value
    if exact and best_low.value != best_up.value:
        raise InconsistentBoundsError(
            "%s(n=%d,k=%d): declared exact but lower %d != upper %d"
            % (invariant, n, k, best_low.value, best_up.value)
        )
    return BoundReport(
        invariant=invariant,
        n=n,
        k=k,
        lower=best_low.value,
        upper=best_up.value,
        exact=exact,
        evidence=list(evidence),
        conjecture_value=conjecture_value,
    )


# ---------------------------------------------------------------------------
# Small number theory (trial division; k stays tiny).


def digit_sum(p, k):
    """Sum of the base-p digits of k."""
    if p < 2:
        raise ValueError("base must be >= 2 (got %d)" % p)
    if k < 1:
        raise ValueError("k must be >= 1 (got %d)" % k)
    total = 0
    while k:
        total += k % p
        k //= p
    return total


def is_prime(k):
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


def primes_upto(m):
    return [p for p in range(2, m + 1) if is_prime(p)]


def prime_power_base(k):
    """Return p if k = p^l with l >= 1, else None."""
    if k < 2:
        return None
    for p in primes_upto(k):
        m = k
        while m % p == 0:
            m //= p
        if m == 1:
            return p
    return None


def is_prime_power(k):
    return prime_power_base(k) is not None


def is_twice_prime_power(k):
    return k % 2 == 0 and is_prime_power(k // 2)


def is_power_of_two(k):
    return k >= 1 and k & (k - 1) == 0


# ---------------------------------------------------------------------------
# Shared rule snippets.

_CITE_SECAT_LE_CATB = "secat(p) <= cat(base) for any fibration p"
_CITE_CW_GAP = (
    "the compactified CW model of B(R^n,k) has the basepoint as its only "
    "cell below dimension k+n-1 and dimension at most nk; discarding the "
    "low skeleton bounds cat(B(R^n,k)) <= nk-(k+n-1) = (k-1)(n-1)"
)
_CITE_MOD2_WEIGHT = (
    "H^*(K(Sigma_k,1); Z/2) -> H^*(B(R^n,k); Z/2) is surjective, classes "
    "from an aspherical space have category weight equal to their degree, "
    "and cohdim_{Z/2} B(R^n,k) = (k-alpha(k))(n-1)"
)
_CITE_EXACT_FAMILY = (
    "secat(pi^n_k) = cat(B(R^n,k)) = (k-1)(n-1) when k is a power of 2, "
    "k = 3, or n is odd and k is prime"
)


def _exact_family(n, k):
    return is_power_of_two(k) or k == 3 or (n % 2 == 1 and is_prime(k))


def _validate(n, k):
    if n < 1:
        raise ValueError("n must be >= 1 (got %d)" % n)
    if k < 1:
        raise ValueError("k must be >= 1 (got %d)" % k)


def cat_F(n, k, ring_check_cap=RING_CHECK_CAP):
    """Exact LS-category of the ordered configuration space F(R^n, k)."""
    _validate(n, k)
    if n == 1:
        value = factorial(k) - 1
        cite = "F(R,k) consists of k! contractible components, so cat = k!-1"
        ev = [
            BoundEvidence("lower", value, "contractible_components", cite),
            BoundEvidence("upper", value, "contractible_components", cite),
        ]
        return _merge("cat_F", n, k, ev, exact_known=True)
    if k == 1:
        cite = "F(R^n,1) = R^n is contractible"
        ev = [
            BoundEvidence("lower", 0, "single_point", cite),
            BoundEvidence("upper", 0, "single_point", cite),
        ]
        return _merge("cat_F", n, k, ev, exact_known=True)
    ev = [
        BoundEvidence(
            "lower",
            k - 1,
            "cuplength",
            "cuplength_Z(F(R^n,k)) = k-1 and the cuplength bounds cat from below",
        ),
        BoundEvidence(
            "upper",
            k - 1,
            "dimension_connectivity",
            "F(R^n,k) is (n-2)-connected and has a CW model of dimension "
            "(k-1)(n-1) with cells only in degrees q(n-1); cat <= dim/(n-1) = k-1",
        ),
    ]
    if k <= ring_check_cap:
        value, _witness = cohen_ring.cuplength(cohen_ring.make_ring(n, k))
        if value != k - 1:
            raise InconsistentBoundsError(
                "symbolic cuplength %d != k-1 for (n=%d,k=%d)" % (value, n, k)
            )
    return _merge("cat_F", n, k, ev, exact_known=True)


def _cat_B_upper_value(n, k):
    # Exact small cases agree with (k-1)(n-1) where both apply.
    if n == 1 or k == 1:
        return 0
    return (k - 1) * (n - 1)


def _secat_lower_evidence(n, k):
    """Lower-bound evidence shared by secat and (via secat <= cat B) cat_B."""
    ev = [
        BoundEvidence(
            "lower", (k - alpha(k)) * (n - 1), "mod2_category_weight",
            _CITE_MOD2_WEIGHT,
        )
    ]
    if n == 2:
        best = max(k - digit_sum(p, k) for p in primes_upto(max(k, 2)))
        ev.append(
            BoundEvidence(
                "lower", best, "planar_digit_sum",
                "k - D_p(k) <= secat(pi^2_k) for every prime p, where D_p is "
                "the base-p digit sum (Vassiliev)",
            )
        )
    if k > 2 and is_prime(k):
        value = (k - 1) * (n - 1) if n % 2 == 1 else (k - 1) * (n - 2)
        ev.append(
            BoundEvidence(
                "lower", value, "odd_prime_weight",
                "for odd primes p, H^{(p-1)(n-1)}(Sigma_p; Z/p) -> "
                "H^{(p-1)(n-1)}(B(R^n,p); Z/p) is an isomorphism (Ossa); "
                "for even n restrict to the odd-dimensional slice",
            )
        )
    if _exact_family(n, k):
        ev.append(
            BoundEvidence(
                "lower", (k - 1) * (n - 1), "exact_family", _CITE_EXACT_FAMILY
            )
        )
    return ev


def secat_bounds(n, k):
    """Certified interval for the sectional category of pi^n_k."""
    _validate(n, k)
    if n == 1 or k == 1:
        cite = (
            "B(R,k) and B(R^n,1) are contractible, so the fibration has "
            "sectional category 0"
        )
        ev = [
            BoundEvidence("lower", 0, "contractible_base", cite),
            BoundEvidence("upper", 0, "contractible_base", cite),
        ]
        return _merge("secat", n, k, ev, exact_known=True)
    ev = _secat_lower_evidence(n, k)
    ev.append(
        BoundEvidence(
            "upper", _cat_B_upper_value(n, k), "cat_of_base",
            _CITE_SECAT_LE_CATB + "; " + _CITE_CW_GAP,
        )
    )
    if k == 3 and n >= 3:
        # secat(pi^{m+1}_3) <= secat(pi^m_3) + 2, from the base value
        # secat(pi^2_3) = 2.  Redundant next to the exact family but kept
        # as independent evidence.
        value = 2
        for _ in range(3, n + 1):
            value += 2
        ev.append(
            BoundEvidence(
                "upper", value, "three_point_stabilization",
                "secat(pi^{n+1}_3) <= secat(pi^n_3) + 2 via projecting "
                "3-configurations to R^n and tubular neighborhoods; base "
                "secat(pi^2_3) = 2",
            )
        )
    if n == 2 and k == 6:
        ev.append(
            BoundEvidence(
                "upper", 4, "planar_six",
                "secat(pi^2_6) < 5: the obstruction to reaching the upper "
                "bound k-1 does not vanish (de Concini-Procesi-Salvetti)",
            )
        )
    if n == 2 and not is_prime_power(k) and not is_twice_prime_power(k):
        ev.append(
            BoundEvidence(
                "upper", k - 2, "planar_arone",
                "secat(pi^2_k) < k-1 whenever k is neither a prime power "
                "nor twice a prime power (Arone)",
            )
        )
    if _exact_family(n, k):
        ev.append(
            BoundEvidence(
                "upper", (k - 1) * (n - 1), "exact_family", _CITE_EXACT_FAMILY
            )
        )
    return _merge(
        "secat", n, k, ev, exact_known=_exact_family(n, k),
        conjecture_value=None,
    )


def cat_B_bounds(n, k, ring_check_cap=RING_CHECK_CAP):
    """Certified interval for the LS-category of B(R^n, k).

    The conjectured value (k-1)(n-1) is attached as an annotation only and
    never contributes evidence.
    """
    _validate(n, k)
    conjecture = (k - 1) * (n - 1)
    if n == 1 or k == 1:
        cite = "B(R,k) and B(R^n,1) are contractible"
        ev = [
            BoundEvidence("lower", 0, "contractible_space", cite),
            BoundEvidence("upper", 0, "contractible_space", cite),
        ]
        return _merge(
            "cat_B", n, k, ev, exact_known=True, conjecture_value=conjecture
        )
    # Any secat lower bound is a cat_B lower bound via secat <= cat(base).
    ev = [
        BoundEvidence(e.direction, e.value, e.rule,
                      e.citation + "; " + _CITE_SECAT_LE_CATB)
        for e in _secat_lower_evidence(n, k)
    ]
    ev.append(
        BoundEvidence(
            "lower", cat_F(n, k, ring_check_cap=ring_check_cap).lower,
            "ordered_covering",
            "cat(E) <= cat(B) for a covering with connected total space; "
            "F(R^n,k) is connected for n >= 2 and cat(F(R^n,k)) = k-1",
        )
    )
    ev.append(BoundEvidence("upper", (k - 1) * (n - 1), "cw_dimension_gap",
                            _CITE_CW_GAP))
    exact_known = _exact_family(n, k)
    if k == 2:
        ev.append(
            BoundEvidence(
                "upper", n - 1, "projective_space",
                "B(R^n,2) is homotopy equivalent to RP^{n-1}, whose category "
                "is n-1 (dimension above, mod-2 cuplength below)",
            )
        )
        exact_known = True
    if n == 2:
        ev.append(
            BoundEvidence(
                "upper", k - 1, "planar_exact",
                "k-1 = cuplength_Z(F(R^2,k)) <= cat(F(R^2,k)) <= "
                "cat(B(R^2,k)) <= k-1, so cat(B(R^2,k)) = k-1",
            )
        )
        exact_known = True
    return _merge(
        "cat_B", n, k, ev, exact_known=exact_known, conjecture_value=conjecture
    )


def compute(invariant, n, k, ring_check_cap=RING_CHECK_CAP):
    if invariant == "cat_F":
        return cat_F(n, k, ring_check_cap=ring_check_cap)
    if invariant == "cat_B":
        return cat_B_bounds(n, k, ring_check_cap=ring_check_cap)
    if invariant == "secat":
        return secat_bounds(n, k)
    raise ValueError("unknown invariant %r" % (invariant,))


def sweep(n_range, k_range, invariants=INVARIANTS, ring_check_cap=RING_CHECK_CAP):
    """One report per (invariant, n, k), in deterministic order."""
    n_range = list(n_range)
    k_range = list(k_range)
    if not n_range or not k_range:
        raise ValueError("ranges must be nonempty")
    reports = []
    for invariant in invariants:
        for n in sorted(n_range):
            for k in sorted(k_range):
                reports.append(compute(invariant, n, k, ring_check_cap))
    return reports


# ---------------------------------------------------------------------------
# Report emission.


def reports_to_markdown(reports):
    """Markdown table, one row per report."""
    lines = [
        "| invariant | n | k | lower | upper | exact | conjecture |",
        "|---|---|---|---|---|---|---|",
    ]
    for r in reports:
        conj = "" if r.conjecture_value is None else str(r.conjecture_value)
        lines.append(
            "| %s | %d | %d | %d | %d | %s | %s |"
            % (r.invariant, r.n, r.k, r.lower, r.upper,
               "yes" if r.exact else "no", conj)
        )
    return "\n".join(lines)
