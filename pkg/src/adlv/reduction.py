"""
The reduction calculus on twisted conjugation arrows, and the word-level
non-emptiness criterion for the basic locus.

For a simple affine reflection s and an element w, the arrow w -> s·w·sigma(s)
is admitted when it does not increase length; its kind records whether the
length is preserved or drops by two.  Chains of arrows are written in
superscript order: the word (a_k, ..., a_1, a_0) means "apply s_{a_0} first,
then s_{a_1}, ...", i.e. the input list is consumed right to left.  Equal
length elements connected by arrows form classes explored by bounded
breadth-first search; running out of budget raises (it is never reported as
"not equivalent").

``is_empty_basic`` decides emptiness of the basic-locus piece attached to a
minimal coset representative w = phi^λ·y: the piece is empty iff

    (i)  supp_sigma(w) is the whole affine diagram (the only subset generating
         an infinite reflection subgroup in the affine A cycle), and
    (ii) some r with Inv(r) ⊆ Phi_w has supp_sigma(r·y·sigma(r)⁻¹) a proper
         subset of the finite diagram.

Condition (ii) is searched over the same inversion-constrained BFS used for
R(w), stopping at the first witness.  An equivalent formulation quantified
over length-positive elements v (testing sigma(v)⁻¹·p(w)·v instead) is kept
alongside and compared in the test suite.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .weyl import (
    WeylElement,
    decompose_xmy,
    simple_ref,
    _finite_part,
    _inv,
    _left_descent,
    _left_mul,
    _mul,
    _right_mul,
    _sigma,
)
from .roots import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    _iter_inv_ideal,
    is_sigma_coxeter_finite,
    lp_set,
    phi_w,
    supp_sigma,
    supp_sigma_finite,
)

__all__ = [
    "ArrowKind",
    "ReductionArrow",
    "IncreasingLengthError",
    "LevelViolationError",
    "NotMinCosetRepError",
    "ChainReport",
    "ReductionCertificate",
    "EmptinessVerdict",
    "arrow",
    "commutes_with_level",
    "conj_by_simple",
    "level_is_stable",
    "verify_chain",
    "approx_equiv",
    "find_reduction",
    "is_empty_basic",
    "is_empty_basic_v_form",
    "positive_coxeter_generic",
]


class IncreasingLengthError(ValueError):
    """The proposed arrow would increase length and is not admitted."""


class LevelViolationError(ValueError):
    """The proposed arrow breaks the supplied parahoric-level context."""


class NotMinCosetRepError(ValueError):
    """The emptiness criterion applies to minimal coset representatives only."""


class ArrowKind(enum.Enum):
    LENGTH_PRESERVING = "length_preserving"
    LENGTH_DROP_TWO = "length_drop_two"


@dataclass(frozen=True, slots=True)
class ReductionArrow:
    source: WeylElement
    s: int
    target: WeylElement
    kind: ArrowKind


def conj_by_simple(w: WeylElement, i: int) -> WeylElement:
    """s_i · w · sigma(s_i)."""
    s = simple_ref(w.n, i)
    return s * w * s.sigma()


def commutes_with_level(n: int, i: int, level: frozenset[int]) -> bool:
    """Whether s_i lies outside ``level`` and commutes with all of it
    (non-adjacent on the cyclic diagram)."""
    if i in level:
        return False
    s = simple_ref(n, i)
    return all(s * simple_ref(n, j) == simple_ref(n, j) * s for j in level)


def level_is_stable(w: WeylElement, level: frozenset[int]) -> bool:
    """Whether conjugation-composed-with-twist permutes ``level`` setwise."""
    n = w.n
    simples = {simple_ref(n, j).window: j for j in range(n)}
    image = set()
    for j in level:
        conj = w * simple_ref(n, j).sigma() * w.inv()
        got = simples.get(conj.window)
        if got is None or conj.similitude != 0:
            return False
        image.add(got)
    return image == set(level)


def arrow(w: WeylElement, i: int,
          level: Optional[frozenset[int]] = None) -> ReductionArrow:
    """
    The admitted arrow w -> s_i·w·sigma(s_i); raises if length would grow.
    With a ``level`` context the arrow must also stay legal at that parahoric
    level: s_i outside the level and commuting with it, and the level stable
    under the twisted conjugation by w.
    """
    if level is not None:
        if not commutes_with_level(w.n, i, level):
            raise LevelViolationError(
                f"s_{i} does not commute with the level {sorted(level)}")
        if not level_is_stable(w, level):
            raise LevelViolationError(
                f"level {sorted(level)} is not stable under the source")
    t = conj_by_simple(w, i)
    delta = t.length() - w.length()
    if delta > 0:
        raise IncreasingLengthError(
            f"conjugation by s_{i} increases length by {delta}")
    kind = ArrowKind.LENGTH_PRESERVING if delta == 0 else ArrowKind.LENGTH_DROP_TWO
    return ReductionArrow(w, i, t, kind)


@dataclass(frozen=True, slots=True)
class ChainReport:
    valid: bool
    lengths: tuple[int, ...]
    final: WeylElement
    failed_at: Optional[int] = None  # index into the superscript word

    def __bool__(self) -> bool:
        return self.valid


def verify_chain(w: WeylElement, steps: tuple[int, ...] | list[int],
                 expected: WeylElement,
                 level: Optional[frozenset[int]] = None) -> ChainReport:
    """
    Apply the superscript word ``steps`` (rightmost letter first) to w and
    report whether every step is an admitted arrow and the result equals
    ``expected``.  Length is recorded at every node.  A ``level`` context is
    enforced on every step.
    """
    cur = w
    lengths = [w.length()]
    order = list(steps)
    for idx in range(len(order) - 1, -1, -1):
        try:
            arr = arrow(cur, order[idx], level)
        except (IncreasingLengthError, LevelViolationError):
            return ChainReport(False, tuple(lengths), cur, failed_at=idx)
        cur = arr.target
        lengths.append(cur.length())
    return ChainReport(cur == expected, tuple(lengths), cur)


# ---------------------------------------------------------------------------
# equal-length classes
# ---------------------------------------------------------------------------

def _conj_delta(win: tuple[int, ...], i: int, n: int) -> tuple[tuple[int, ...], int]:
    """Window of s_i·w·sigma(s_i) together with the length change."""
    j = (n - i) % n  # sigma(s_i) = s_{n-i}
    # right multiplication first
    if j == 0:
        d_r = -1 if win[n - 1] - n > win[0] else 1
    else:
        d_r = -1 if win[j - 1] > win[j] else 1
    u = _right_mul(win, j)
    d_l = -1 if _left_descent(u, i) else 1
    return _left_mul(u, i), d_r + d_l


def _class_bfs(start: tuple[int, ...], n: int, budget: int,
               stop_at: Optional[tuple[int, ...]] = None,
               letters: Optional[list[int] | range] = None
               ) -> dict[tuple[int, ...], Optional[tuple[tuple[int, ...], int]]]:
    """
    Explore the equal-length class of ``start`` under admitted
    length-preserving arrows (optionally restricted to the given letters).
    Returns window -> (parent window, letter), with None at the root.  If
    ``stop_at`` is given, stops as soon as it is reached.
    """
    if letters is None:
        letters = range(n)
    parents: dict[tuple[int, ...], Optional[tuple[tuple[int, ...], int]]] = {start: None}
    queue = deque([start])
    visited = 0
    while queue:
        cur = queue.popleft()
        visited += 1
        if visited > budget:
            raise BudgetExceededError(
                f"equal-length class search exceeded {budget} nodes")
        for i in letters:
            new, delta = _conj_delta(cur, i, n)
            if delta == 0 and new not in parents:
                parents[new] = (cur, i)
                queue.append(new)
                if new == stop_at:
                    return parents
    return parents


def _path_letters(parents, node) -> list[int]:
    """Letters along the BFS tree from the root to ``node``, application order."""
    out: list[int] = []
    while parents[node] is not None:
        node, letter = parents[node]
        out.append(letter)
    out.reverse()
    return out


def approx_equiv(w: WeylElement, other: WeylElement,
                 budget: int = DEFAULT_BUDGET) -> bool:
    """Whether the two elements are connected by length-preserving arrows."""
    if w.n != other.n:
        raise ValueError("rank mismatch")
    if (w.length() != other.length() or w.similitude != other.similitude
            or w.omega() != other.omega()):
        return False
    parents = _class_bfs(w.window, w.n, budget, stop_at=other.window)
    return other.window in parents


@dataclass(frozen=True, slots=True)
class ReductionCertificate:
    """
    A witnessed two-step reduction: ``to_pivot`` (a superscript word, rightmost
    letter first) carries ``source`` to ``pivot`` through length-preserving
    arrows; conjugating by s then drops length by two; ``to_target`` carries
    the dropped element to ``target`` through length-preserving arrows.  When
    a ``level`` is recorded, every arrow is legal at that parahoric level.
    """
    source: WeylElement
    to_pivot: tuple[int, ...]
    pivot: WeylElement
    s: int
    dropped: WeylElement
    to_target: tuple[int, ...]
    target: WeylElement
    level: Optional[frozenset[int]] = None

    def verify(self) -> bool:
        first = verify_chain(self.source, self.to_pivot, self.pivot, self.level)
        if not (first.valid and len(set(first.lengths)) == 1):
            return False
        try:
            arr = arrow(self.pivot, self.s, self.level)
        except (IncreasingLengthError, LevelViolationError):
            return False
        if arr.kind is not ArrowKind.LENGTH_DROP_TWO or arr.target != self.dropped:
            return False
        second = verify_chain(self.dropped, self.to_target, self.target, self.level)
        return second.valid and len(set(second.lengths)) == 1


def find_reduction(w: WeylElement, target: WeylElement,
                   budget: int = DEFAULT_BUDGET,
                   level: Optional[frozenset[int]] = None
                   ) -> Optional[ReductionCertificate]:
    """
    Search for a pivot w'' ≈ w and simple s with s·w''·sigma(s) ≈ target and
    ℓ(s·w''·sigma(s)) = ℓ(w) - 2.  Returns a full certificate, or None if the
    classes are exhausted without a match.

    With a ``level`` context the search only walks arrows legal at that level,
    so a returned certificate witnesses the reduction at the corresponding
    parahoric; the source must itself be minimal for the level and keep it
    stable.
    """
    n = w.n
    if target.length() != w.length() - 2:
        raise ValueError("target length must be the source length minus two")
    if target.similitude != w.similitude or target.omega() != w.omega():
        return None
    letters: list[int] | range = range(n)
    if level is not None:
        if not level_is_stable(w, level):
            raise LevelViolationError(
                f"level {sorted(level)} is not stable under the source")
        if w.left_descents() & level:
            raise LevelViolationError(
                "source is not minimal in its coset at the supplied level")
        letters = [i for i in range(n) if commutes_with_level(n, i, level)]
    target_parents = _class_bfs(target.window, n, budget, letters=letters)
    source_parents: dict[tuple[int, ...], Optional[tuple[tuple[int, ...], int]]]
    source_parents = {w.window: None}
    queue = deque([w.window])
    visited = 0
    while queue:
        cur = queue.popleft()
        visited += 1
        if visited > budget:
            raise BudgetExceededError(
                f"equal-length class search exceeded {budget} nodes")
        for i in letters:
            new, delta = _conj_delta(cur, i, n)
            if delta == 0:
                if new not in source_parents:
                    source_parents[new] = (cur, i)
                    queue.append(new)
            elif delta == -2 and new in target_parents:
                to_pivot = _path_letters(source_parents, cur)
                back = _path_letters(target_parents, new)
                sim = w.similitude
                return ReductionCertificate(
                    source=w,
                    to_pivot=tuple(reversed(to_pivot)),
                    pivot=WeylElement(cur, sim),
                    s=i,
                    dropped=WeylElement(new, sim),
                    to_target=tuple(back),
                    target=target,
                    level=level,
                )
    return None


# ---------------------------------------------------------------------------
# emptiness of basic-locus pieces
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class EmptinessVerdict:
    empty: bool
    witness: Optional[WeylElement] = None  # finite r, present iff empty


def is_empty_basic(w: WeylElement, budget: int = DEFAULT_BUDGET) -> EmptinessVerdict:
    """
    Decide emptiness for a minimal coset representative (see module
    docstring).  When empty, the returned witness r satisfies Inv(r) ⊆ Phi_w
    and supp_sigma(r·y·sigma(r)⁻¹) proper in the finite diagram.
    """
    if not w.is_min_coset_rep():
        raise NotMinCosetRepError("emptiness criterion needs a minimal coset representative")
    n = w.n
    if len(supp_sigma(w)) != n:
        return EmptinessVerdict(False)
    _, _, y = decompose_xmy(w)
    y_win = y.window
    allowed = phi_w(w)
    rng = range(n)
    for r_win, pos in _iter_inv_ideal(n, allowed, budget):
        # u = r · y · sigma(r)⁻¹; sigma(r)⁻¹ = sigma(r⁻¹) and pos is r⁻¹,
        # so u(i) = r(y(n + 1 - r⁻¹(n + 1 - i))), all windows finite
        mask = 0
        top = 0
        for i in rng:
            v = r_win[y_win[n - pos[n - 1 - i]] - 1]
            if v > top:
                top = v
            if top > i + 1:
                mask |= 1 << (i + 1)  # s_{i+1} occurs in u
        # close under s_i -> s_{n-i}; proper iff some index escapes the union
        for i in range(1, n):
            if not (mask >> i) & 1 and not (mask >> (n - i)) & 1:
                return EmptinessVerdict(True, WeylElement(r_win))
    return EmptinessVerdict(False)


def is_empty_basic_v_form(w: WeylElement,
                          budget: int = DEFAULT_BUDGET) -> EmptinessVerdict:
    """
    The same criterion with condition (ii) quantified over length-positive
    elements v, testing sigma(v)⁻¹ · p(w) · v.  Kept as a cross-check of the
    primary r-form; the witness, when present, is the v found.
    """
    if not w.is_min_coset_rep():
        raise NotMinCosetRepError("emptiness criterion needs a minimal coset representative")
    n = w.n
    if len(supp_sigma(w)) != n:
        return EmptinessVerdict(False)
    pw = w.finite_part()
    for v in sorted(lp_set(w, budget), key=lambda e: e.length()):
        u = v.sigma().inv() * pw * v
        if len(supp_sigma_finite(u)) < n - 1:
            return EmptinessVerdict(True, v)
    return EmptinessVerdict(False)


def positive_coxeter_generic(w: WeylElement,
                             budget: int = DEFAULT_BUDGET) -> bool:
    """
    Whether some length-positive v makes sigma(v)⁻¹ · p(w) · v a twisted
    Coxeter element of the finite group.
    """
    n = w.n
    _, _, y = decompose_xmy(w)
    yi = _inv(y.window)
    pw_win = _finite_part(w.window)
    allowed = phi_w(w)
    for _, pos in _iter_inv_ideal(n, allowed, budget):
        v_win = _mul(yi, pos)
        u_win = _mul(_sigma(_inv(v_win)), _mul(pw_win, v_win))
        if is_sigma_coxeter_finite(WeylElement(u_win)):
            return True
    return False
