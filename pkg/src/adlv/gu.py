"""
The GU(2, n-2) stratification data.

The relevant cocharacter is μ = ((0,...,0,-1,-1), -1); the basic frame element
b is the pure similitude shift phi^{((0,...,0),-1)}.  Strata of the basic
locus are indexed by pairs (k, l), 1 <= k < l <= n, through the minimal coset
representatives

    w_{k,l} = phi^μ · (s_{n-2} s_{n-3} ... s_k) · (s_{n-1} s_{n-2} ... s_l)

of length k + l - 3 (a factor is skipped when its range is empty).  Every
closed-form answer exposed here (classification into DL / not-DL / empty,
fibration targets and ranks, supports, parahoric types, dimensions, closure
order, positive-Coxeter detection) is mirrored by a generic computation in
``weyl``/``roots``/``reduction`` and the two are compared in the test suite;
the closed form is the API's answer, the generic computation its oracle.

Dimension bookkeeping: a DL stratum has dimension equal to its length; a
not-DL stratum fibers over its target with one-dimensional fibers, so its
dimension is the target's plus one.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from importlib import resources
from typing import NamedTuple, Optional

from .weyl import (
    WeylElement,
    Cocharacter,
    bruhat_leq,
    simple_ref,
    tau1,
    translation,
)
from . import roots
from . import reduction

__all__ = [
    "StratumLabel",
    "StratumClass",
    "StratumRecord",
    "StratumGraph",
    "NotApplicableError",
    "mu",
    "b_element",
    "tau_element",
    "w_kl",
    "s_admissible",
    "brute_force_s_adm",
    "classify",
    "classify_by_criterion",
    "w_prime",
    "fibration_rank",
    "fibration_base",
    "supp_sigma_closed",
    "s_closed",
    "j_set",
    "parahoric_type",
    "w0_element",
    "dim_stratum",
    "dim_basic_locus",
    "irr_orbit_count",
    "top_strata",
    "closure_leq",
    "geq_s_sigma",
    "positive_coxeter_closed",
    "stratum_record",
    "stratum_graph",
    "graph_summary",
    "canonical_graph_bytes",
    "load_golden_summary",
]


class NotApplicableError(ValueError):
    """The requested datum is not defined for this stratum class."""


class StratumLabel(NamedTuple):
    k: int
    l: int


class StratumClass(enum.Enum):
    DL = "dl"
    NOT_DL = "not_dl"
    EMPTY = "empty"


def _check_label(n: int, k: int, l: int) -> None:
    if not (n >= 2 and 1 <= k < l <= n):
        raise ValueError(f"invalid stratum label ({k},{l}) for n={n}")


# ---------------------------------------------------------------------------
# the basic elements
# ---------------------------------------------------------------------------

def mu(n: int) -> Cocharacter:
    """The GU(2, n-2) cocharacter ((0^(n-2), -1, -1), -1)."""
    return Cocharacter((0,) * (n - 2) + (-1, -1), -1)


def b_element(n: int) -> WeylElement:
    """The basic frame element: trivial window, similitude -1."""
    return translation(Cocharacter((0,) * n, -1))


def w_kl(n: int, k: int, l: int) -> WeylElement:
    """The stratum representative phi^μ s_{[n-2,k]} s_{[n-1,l]}."""
    _check_label(n, k, l)
    w = translation(mu(n))
    for a in range(n - 2, k - 1, -1):
        w = w * simple_ref(n, a)
    for a in range(n - 1, l - 1, -1):
        w = w * simple_ref(n, a)
    return w


def tau_element(n: int) -> WeylElement:
    """The length-zero stratum representative w_{1,2}."""
    return w_kl(n, 1, 2)


def s_admissible(n: int) -> frozenset[StratumLabel]:
    """All stratum labels (k, l), 1 <= k < l <= n."""
    return frozenset(StratumLabel(k, l)
                     for k in range(1, n) for l in range(k + 1, n + 1))


def _lower_interval(w: WeylElement,
                    cache: dict[WeylElement, frozenset[WeylElement]]
                    ) -> frozenset[WeylElement]:
    cached = cache.get(w)
    if cached is not None:
        return cached
    descents = w.left_descents()
    if not descents:
        out = frozenset({w})
    else:
        i = min(descents)
        s = simple_ref(w.n, i)
        below = _lower_interval(s * w, cache)
        out = below | frozenset(s * v for v in below)
    cache[w] = out
    return out


def brute_force_s_adm(n: int) -> frozenset[StratumLabel]:
    """
    Recompute the admissible labels from first definitions: enumerate all
    elements below some phi^{uμ} in Bruhat order (by descent recursion on
    lower intervals), keep the minimal coset representatives, and match them
    against the w_{k,l}.  Guarded to n <= 7; the closed form s_admissible is
    the production answer.
    """
    if n > 7:
        raise ValueError("brute-force admissible-set enumeration is limited to n <= 7")
    muc = mu(n).coords
    sim = mu(n).similitude
    tops = {translation(Cocharacter(perm, sim))
            for perm in set(itertools.permutations(muc))}
    cache: dict[WeylElement, frozenset[WeylElement]] = {}
    admissible: set[WeylElement] = set()
    for t in tops:
        admissible |= _lower_interval(t, cache)
    reps = {w for w in admissible if w.is_min_coset_rep()}
    by_element = {w_kl(n, k, l): StratumLabel(k, l)
                  for k, l in s_admissible(n)}
    labels = set()
    for w in reps:
        if w not in by_element:
            raise AssertionError(f"unexpected minimal admissible element {w}")
        labels.add(by_element[w])
    return frozenset(labels)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def classify(n: int, k: int, l: int) -> StratumClass:
    """Closed-form stratum class.  All parity-sensitive bounds use doubled
    integers, never rational division."""
    _check_label(n, k, l)
    if k == 1 or 2 * l <= n + 2:
        return StratumClass.DL
    if 3 <= k and 2 * k < n + 2 and 2 * l > n + 2 and l <= n - 1:
        if k % 2 == 1 and k + l <= n + 2:
            return StratumClass.NOT_DL
        if (l - (n - 1)) % 2 == 0 and k + l >= n + 3:
            return StratumClass.NOT_DL
    return StratumClass.EMPTY


def classify_by_criterion(n: int, k: int, l: int,
                          budget: int = roots.DEFAULT_BUDGET) -> StratumClass:
    """Stratum class recomputed from first definitions: the support test for
    DL, then the emptiness criterion search.  Oracle for ``classify``."""
    w = w_kl(n, k, l)
    if len(roots.supp_sigma(w)) != n:
        return StratumClass.DL
    verdict = reduction.is_empty_basic(w, budget)
    return StratumClass.EMPTY if verdict.empty else StratumClass.NOT_DL


def _require(n: int, k: int, l: int, wanted: StratumClass, what: str) -> None:
    got = classify(n, k, l)
    if got is not wanted:
        raise NotApplicableError(
            f"{what} is defined for {wanted.value} labels; ({k},{l}) at n={n} is {got.value}")


def _require_nonempty(n: int, k: int, l: int, what: str) -> StratumClass:
    got = classify(n, k, l)
    if got is StratumClass.EMPTY:
        raise NotApplicableError(f"{what} is undefined on the empty stratum ({k},{l})")
    return got


# ---------------------------------------------------------------------------
# the fibration structure
# ---------------------------------------------------------------------------

def w_prime(n: int, k: int, l: int) -> StratumLabel:
    """One-step fibration target of a non-DL stratum."""
    _require(n, k, l, StratumClass.NOT_DL, "the fibration target")
    if k + l <= n + 2:
        return StratumLabel(k - 2, l)
    if k + l == n + 3:
        return StratumLabel(k - 1, l - 1)
    return StratumLabel(k, l - 2)


def fibration_rank(n: int, k: int, l: int) -> int:
    """Number of one-dimensional fibration steps down to the DL base."""
    _require(n, k, l, StratumClass.NOT_DL, "the fibration rank")
    if k + l <= n + 2:
        return (k - 1) // 2
    return k + (l - n - 3) // 2


def fibration_base(n: int, k: int, l: int) -> StratumLabel:
    """Terminal DL label under iterated w_prime."""
    _require(n, k, l, StratumClass.NOT_DL, "the fibration base")
    if k + l <= n + 2:
        return StratumLabel(1, l)
    return StratumLabel(1, n - k + 2)


# ---------------------------------------------------------------------------
# closed-form supports and parahoric data
# ---------------------------------------------------------------------------

def supp_sigma_closed(n: int, k: int, l: int) -> frozenset[int]:
    """Closed form of the twisted support of w_{k,l} (nonempty labels)."""
    _require_nonempty(n, k, l, "the twisted support")
    if k >= 2:
        out = {n - 1}
        for i in range(0, l - 2):
            out.add(i)
            out.add((n - i - 2) % n)
        return frozenset(out)
    if 2 * l <= n + 2:
        out = set()
        for i in range(0, l - 2):
            out.add(i)
            out.add((n - i - 2) % n)
        return frozenset(out)
    return frozenset(range(n)) - {n - 1}


def s_closed(n: int, k: int, l: int) -> frozenset[int]:
    """Closed form of the largest Ad(w_{k,l})sigma-stable set of finite
    simple reflections (nonempty labels)."""
    cls = _require_nonempty(n, k, l, "the stable finite subset")
    if cls is StratumClass.DL:
        if l == k + 1:
            middle = frozenset(range(k, n - k - 1))
            if k % 2 == 1:
                lower = frozenset(range(1, k - 1, 2))
                upper = frozenset(range(n - 1, n - k - 1, -2))
                return middle | lower | upper
            return middle
        if 2 * l <= n + 2:
            return frozenset(range(l - 1, n - l))
        return frozenset(range(n - l + 2, l - 2))
    if k + l <= n + 2:
        return frozenset(range(n - l + 2, l - 2))
    return frozenset(range(k, n - k))


def j_set(n: int, k: int, l: int) -> frozenset[int]:
    """Letters consumed by the reduction chains from (k,l) to its target."""
    _require(n, k, l, StratumClass.NOT_DL, "the reduction-letter set")
    out = {n - 1}
    for i in range(0, k - 2):
        out.add(i)
        out.add((n - i - 2) % n)
    if k + l >= n + 3:
        out.add(k - 2)
    return frozenset(out)


def parahoric_type(n: int, k: int, l: int) -> frozenset[int]:
    """
    Type of the parahoric indexing the stratum decomposition: the shift by
    one (mod n) of supp_sigma ∪ S(w,sigma) for DL labels, and the full finite
    set (hyperspecial level) for non-DL labels.
    """
    cls = _require_nonempty(n, k, l, "the parahoric type")
    if cls is StratumClass.NOT_DL:
        return frozenset(range(1, n))
    union = supp_sigma_closed(n, k, l) | s_closed(n, k, l)
    return frozenset((i + 1) % n for i in union)


def w0_element(n: int, k: int, l: int) -> WeylElement:
    """b⁻¹ · tau1 · w_{k,l} · sigma(tau1)⁻¹, a plain affine element; finite
    exactly when the shifted support union fills the finite diagram (the DL
    labels with k = 1 and 2l >= n+3)."""
    _require_nonempty(n, k, l, "the hyperspecial-frame element")
    t1 = tau1(n)
    out = b_element(n).inv() * t1 * w_kl(n, k, l) * t1.sigma().inv()
    if out.omega() != 0 or out.similitude != 0:
        raise AssertionError("frame-shifted element left the affine subgroup")
    return out


# ---------------------------------------------------------------------------
# dimensions and components
# ---------------------------------------------------------------------------

def dim_stratum(n: int, k: int, l: int) -> int:
    """Stratum dimension: the length for DL labels, target dimension plus one
    along each fibration step."""
    cls = _require_nonempty(n, k, l, "the dimension")
    if cls is StratumClass.DL:
        return k + l - 3
    return dim_stratum(n, *w_prime(n, k, l)) + 1


def _nonempty_labels(n: int) -> list[StratumLabel]:
    return [lab for lab in sorted(s_admissible(n))
            if classify(n, *lab) is not StratumClass.EMPTY]


def dim_basic_locus(n: int) -> int:
    return max(dim_stratum(n, *lab) for lab in _nonempty_labels(n))


def top_strata(n: int) -> frozenset[StratumLabel]:
    d = dim_basic_locus(n)
    return frozenset(lab for lab in _nonempty_labels(n)
                     if dim_stratum(n, *lab) == d)


def irr_orbit_count(n: int) -> int:
    """Number of orbits of irreducible components under the group action."""
    return len(top_strata(n))


# ---------------------------------------------------------------------------
# closure order
# ---------------------------------------------------------------------------

def closure_leq(a: StratumLabel | tuple[int, int],
                b: StratumLabel | tuple[int, int]) -> bool:
    """Whether stratum a lies in the closure of stratum b (componentwise
    order; the closure statement is guaranteed for DL labels)."""
    return a[0] <= b[0] and a[1] <= b[1]


def geq_s_sigma(w: WeylElement, other: WeylElement) -> bool:
    """Whether w >= u⁻¹ · other · sigma(u) for some finite u (exhaustive over
    the finite group; guarded to n <= 7)."""
    n = w.n
    if n > 7:
        raise ValueError("exhaustive twisted-order search is limited to n <= 7")
    conjugates = set()
    for perm in itertools.permutations(range(1, n + 1)):
        u = WeylElement(perm)
        conjugates.add(u.inv() * other * u.sigma())
    return any(bruhat_leq(c, w) for c in conjugates)


def positive_coxeter_closed(n: int, k: int, l: int) -> bool:
    """Closed form of positive-Coxeter detection on non-DL labels."""
    _require(n, k, l, StratumClass.NOT_DL, "positive-Coxeter detection")
    if n % 2 == 1:
        return 2 * k == n + 1 or 2 * l == n + 3
    return 2 * k == n or 2 * l == n + 4


# ---------------------------------------------------------------------------
# records and the fibration graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class StratumRecord:
    label: StratumLabel
    stratum_class: StratumClass
    length: int
    dim: int
    target: Optional[StratumLabel]
    rank: Optional[int]
    base: Optional[StratumLabel]
    supp_sigma: frozenset[int]
    s_w_sigma: frozenset[int]
    parahoric: frozenset[int]
    j_set: Optional[frozenset[int]]
    positive_coxeter: bool


@dataclass(frozen=True, slots=True)
class StratumGraph:
    n: int
    records: tuple[StratumRecord, ...]
    edges: tuple[tuple[StratumLabel, StratumLabel], ...]

    def record(self, k: int, l: int) -> StratumRecord:
        for rec in self.records:
            if rec.label == (k, l):
                return rec
        raise KeyError(f"({k},{l}) is not a nonempty stratum here")


def stratum_record(n: int, k: int, l: int) -> StratumRecord:
    cls = _require_nonempty(n, k, l, "the stratum record")
    not_dl = cls is StratumClass.NOT_DL
    return StratumRecord(
        label=StratumLabel(k, l),
        stratum_class=cls,
        length=k + l - 3,
        dim=dim_stratum(n, k, l),
        target=w_prime(n, k, l) if not_dl else None,
        rank=fibration_rank(n, k, l) if not_dl else None,
        base=fibration_base(n, k, l) if not_dl else None,
        supp_sigma=supp_sigma_closed(n, k, l),
        s_w_sigma=s_closed(n, k, l),
        parahoric=parahoric_type(n, k, l),
        j_set=j_set(n, k, l) if not_dl else None,
        positive_coxeter=positive_coxeter_closed(n, k, l) if not_dl else False,
    )


def stratum_graph(n: int) -> StratumGraph:
    """All nonempty strata with their records, plus the fibration arrows."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    labels = _nonempty_labels(n)
    records = tuple(stratum_record(n, *lab) for lab in labels)
    edges = tuple(sorted((lab, w_prime(n, *lab)) for lab in labels
                         if classify(n, *lab) is StratumClass.NOT_DL))
    return StratumGraph(n, records, edges)


def graph_summary(g: StratumGraph) -> dict:
    """Node/edge summary in the canonical shape used by the golden fixtures."""
    return {
        "n": g.n,
        "nodes": [list(rec.label) for rec in
                  sorted(g.records, key=lambda r: r.label)],
        "edges": [[list(a), list(b)] for a, b in sorted(g.edges)],
    }


def canonical_graph_bytes(g: StratumGraph) -> bytes:
    return (json.dumps(graph_summary(g), indent=2) + "\n").encode()


def load_golden_summary(n: int) -> dict:
    """The checked-in node/edge transcription of the n=13 / n=14 figures."""
    if n not in (13, 14):
        raise ValueError("golden figures exist for n = 13 and n = 14 only")
    path = resources.files("adlv").joinpath(f"fixtures/golden_n{n}.json")
    return json.loads(path.read_text())
