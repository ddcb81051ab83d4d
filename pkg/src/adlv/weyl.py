"""
Exact arithmetic in the extended affine Weyl group of GL_n, with a similitude tag.

An element is a bijection f: Z -> Z satisfying f(i+n) = f(i)+n, stored by its
window (f(1), ..., f(n)).  The group of such bijections is W_0 ⋉ Z^n where W_0
is the symmetric group on n letters; translations by a cocharacter λ act as
f(i) = i + n·λ_i.  The simple affine reflections are

    s_i  (1 <= i < n):  swap of the residue classes i and i+1,
    s_0:                f(1) = 0, f(n) = n+1, identity elsewhere,

and the length-zero subgroup is infinite cyclic, generated by the shift
tau1: i -> i+1 (which equals phi^{(1,0,...,0)} s_1 s_2 ... s_{n-1}).

The similitude tag is a detached integer factor: it adds under multiplication,
negates under inversion, and is fixed by the Frobenius twist.  It never enters
lengths, orders or supports; reduced words and Omega-parts describe the GL_n
window component only.

The Frobenius twist sigma is the order-two automorphism

    sigma(f)(i) = n + 1 - f(n + 1 - i),

which sends s_i to s_{n-i} (indices mod n) and a translation by λ to the
translation by i -> -λ_{n+1-i}.

Length is the number of affine inversions #{(i, j) : 1 <= i <= n, j > i,
f(i) > f(j)}; the classical double-sum formula over positive roots is kept in
the test suite as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "WeylElement",
    "Cocharacter",
    "identity",
    "simple_ref",
    "translation",
    "tau1",
    "omega_shift",
    "from_word",
    "bruhat_leq",
    "decompose_xmy",
    "pairing_2rho",
]

_WINDOW_BOUND = 1 << 31  # defensive overflow guard for window entries


# ---------------------------------------------------------------------------
# window-level helpers (tuples of ints, 1-based values at 0-based slots)
# ---------------------------------------------------------------------------

def _eval(window: tuple[int, ...], x: int) -> int:
    """Value of the extended affine permutation at any integer x."""
    n = len(window)
    q, r = divmod(x - 1, n)
    return window[r] + q * n


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Window of the composite a∘b."""
    return tuple(_eval(a, v) for v in b)


def _inv(a: tuple[int, ...]) -> tuple[int, ...]:
    n = len(a)
    out = [0] * n
    for p, v in enumerate(a, start=1):
        q, r = divmod(v - 1, n)
        out[r] = p - q * n
    return tuple(out)


def _sigma(a: tuple[int, ...]) -> tuple[int, ...]:
    n = len(a)
    return tuple(n + 1 - a[n - i] for i in range(1, n + 1))


@lru_cache(maxsize=1 << 18)
def _length(window: tuple[int, ...]) -> int:
    """Affine inversion count #{(i, j) : i in [1, n], j > i, f(i) > f(j)}."""
    n = len(window)
    total = 0
    for i in range(1, n + 1):
        fi = window[i - 1]
        for j0 in range(1, n + 1):
            d = fi - window[j0 - 1]
            # k ranges over integers with j0 + k*n > i and f(j0) + k*n < f(i)
            kmin = (i - j0) // n + 1
            kmax = -(-d // n) - 1
            if kmax >= kmin:
                total += kmax - kmin + 1
    return total


def _left_mul(window: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Window of s_i ∘ w: swaps the residue classes i and i+1 among values."""
    n = len(window)
    a = i % n if i % n else n          # residue class sent up
    b = (i + 1) % n if (i + 1) % n else n
    out = list(window)
    for p, v in enumerate(out):
        r = (v - 1) % n + 1
        if r == a:
            out[p] = v + 1
        elif r == b:
            out[p] = v - 1
    return tuple(out)


def _right_mul(window: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Window of w ∘ s_i: swaps the positions i and i+1 (periodically)."""
    n = len(window)
    out = list(window)
    if i == 0:
        out[0], out[n - 1] = window[n - 1] - n, window[0] + n
    else:
        out[i - 1], out[i] = window[i], window[i - 1]
    return tuple(out)


def _inv_at(window: tuple[int, ...], x: int) -> int:
    """Preimage of x, i.e. the position p with w(p) = x."""
    n = len(window)
    r = (x - 1) % n + 1
    for p, v in enumerate(window, start=1):
        if (v - 1) % n + 1 == r:
            return p + (x - v) // n * n
    raise AssertionError("window misses a residue class")


def _left_descent(window: tuple[int, ...], i: int) -> bool:
    """Whether ℓ(s_i w) < ℓ(w)."""
    return _inv_at(window, i) > _inv_at(window, i + 1)


def _right_descent(window: tuple[int, ...], i: int) -> bool:
    """Whether ℓ(w s_i) < ℓ(w)."""
    return _eval(window, i) > _eval(window, i + 1)


def _is_finite(window: tuple[int, ...]) -> bool:
    n = len(window)
    return all(1 <= v <= n for v in window)


def _finite_part(window: tuple[int, ...]) -> tuple[int, ...]:
    """Reduce each window entry mod n into [1, n]."""
    n = len(window)
    return tuple((v - 1) % n + 1 for v in window)


# ---------------------------------------------------------------------------
# element types
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class WeylElement:
    """
    An element of the extended affine Weyl group of GL_n times a similitude Z.

    >>> w = identity(3)
    >>> w.length(), w.omega()
    (0, 0)
    >>> str(simple_ref(3, 0))
    '[0,2,4];sim=0'
    """

    window: tuple[int, ...]
    similitude: int = 0

    def __post_init__(self) -> None:
        n = len(self.window)
        if n < 2:
            raise ValueError("rank must be at least 2")
        seen = [False] * n
        for v in self.window:
            if not -_WINDOW_BOUND < v < _WINDOW_BOUND:
                raise ValueError("window entry out of range")
            r = (v - 1) % n
            if seen[r]:
                raise ValueError("window entries collide modulo n")
            seen[r] = True
        # distinct residues force the Omega-component to be integral

    @property
    def n(self) -> int:
        return len(self.window)

    def apply(self, x: int) -> int:
        """Value at any integer (the window extended n-periodically)."""
        return _eval(self.window, x)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} != {other.n}")
        return WeylElement(_mul(self.window, other.window),
                           self.similitude + other.similitude)

    def inv(self) -> "WeylElement":
        return WeylElement(_inv(self.window), -self.similitude)

    def sigma(self) -> "WeylElement":
        """The Frobenius twist; an involution fixing the similitude tag."""
        return WeylElement(_sigma(self.window), self.similitude)

    def length(self) -> int:
        return _length(self.window)

    def omega(self) -> int:
        """Power of tau1 spanning the length-zero coset of the window part."""
        n = self.n
        return (sum(self.window) - n * (n + 1) // 2) // n

    def affine_part(self) -> tuple["WeylElement", int]:
        """Split off the Omega-part: returns (w · tau1^{-m}, m), first factor in W_a."""
        m = self.omega()
        return self * omega_shift(self.n, -m), m

    def is_finite(self) -> bool:
        """Whether the window is a permutation of 1..n (zero translation part)."""
        return _is_finite(self.window)

    def finite_part(self) -> "WeylElement":
        """Image under the projection to the finite Weyl group (window mod n)."""
        return WeylElement(_finite_part(self.window))

    def left_descents(self) -> frozenset[int]:
        """All i in 0..n-1 with ℓ(s_i w) < ℓ(w)."""
        inv = _inv(self.window)
        return frozenset(i for i in range(self.n)
                         if _eval(inv, i) > _eval(inv, i + 1))

    def reduced_word(self) -> tuple[tuple[int, ...], int]:
        """
        A reduced word for the window part: (a_1, ..., a_r), m with
        w = s_{a_1} ... s_{a_r} · tau1^m and r = ℓ(w).  Deterministic
        (smallest descent first).
        """
        word: list[int] = []
        cur = self.window
        ell = _length(cur)
        while ell > 0:
            for i in range(len(cur)):
                if _left_descent(cur, i):
                    word.append(i)
                    cur = _left_mul(cur, i)
                    ell -= 1
                    break
            else:
                raise AssertionError("positive length but no descent")
        m = self.omega()
        if cur != omega_shift(self.n, m).window:
            raise AssertionError("descent chain did not land on the Omega-part")
        return tuple(word), m

    def is_min_coset_rep(self) -> bool:
        """Whether ℓ(s_i w) > ℓ(w) for every finite i (minimal in W_0 w)."""
        inv = _inv(self.window)
        return all(_eval(inv, i) < _eval(inv, i + 1) for i in range(1, self.n))

    def __str__(self) -> str:
        body = ",".join(str(v) for v in self.window)
        return f"[{body}];sim={self.similitude}"


@dataclass(frozen=True, slots=True)
class Cocharacter:
    """An integer cocharacter of the diagonal torus, with similitude component."""

    coords: tuple[int, ...]
    similitude: int = 0

    @property
    def n(self) -> int:
        return len(self.coords)

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.coords, self.coords[1:]))


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def identity(n: int) -> WeylElement:
    return WeylElement(tuple(range(1, n + 1)))


def simple_ref(n: int, i: int) -> WeylElement:
    """
    The simple affine reflection s_i, 0 <= i < n.

    >>> simple_ref(4, 2).window
    (1, 3, 2, 4)
    >>> simple_ref(4, 0).window
    (0, 2, 3, 5)
    """
    if not 0 <= i < n:
        raise ValueError(f"simple reflection index {i} out of range for rank {n}")
    w = list(range(1, n + 1))
    if i == 0:
        w[0], w[n - 1] = 0, n + 1
    else:
        w[i - 1], w[i] = i + 1, i
    return WeylElement(tuple(w))


def translation(lam: Cocharacter) -> WeylElement:
    """
    The translation element phi^λ, encoded as f(i) = i + n·λ_i.

    >>> translation(Cocharacter((0, 0, 0, -1, -1), -1)).window
    (1, 2, 3, -1, 0)
    """
    n = lam.n
    return WeylElement(tuple(i + n * lam.coords[i - 1] for i in range(1, n + 1)),
                       lam.similitude)


def omega_shift(n: int, m: int) -> WeylElement:
    """tau1^m, the length-zero shift i -> i+m."""
    return WeylElement(tuple(range(1 + m, n + 1 + m)))


def tau1(n: int) -> WeylElement:
    """The generator of the length-zero subgroup: phi^{(1,0,...,0)} s_1 ... s_{n-1}."""
    return omega_shift(n, 1)


def from_word(n: int, word: Iterable[int], omega: int = 0,
              similitude: int = 0) -> WeylElement:
    """The element s_{a_1} ... s_{a_r} · tau1^omega with the given tag."""
    w = omega_shift(n, omega)
    for a in reversed(list(word)):
        w = simple_ref(n, a) * w
    return WeylElement(w.window, similitude)


# ---------------------------------------------------------------------------
# Bruhat order
# ---------------------------------------------------------------------------

_BRUHAT_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}


def _bruhat_windows(u: tuple[int, ...], w: tuple[int, ...]) -> bool:
    if u == w:
        return True
    lu, lw = _length(u), _length(w)
    if lu >= lw:
        return False
    key = (u, w)
    cached = _BRUHAT_CACHE.get(key)
    if cached is not None:
        return cached
    for i in range(len(w)):
        if _left_descent(w, i):
            sw = _left_mul(w, i)
            if _left_descent(u, i):
                res = _bruhat_windows(_left_mul(u, i), sw)
            else:
                res = _bruhat_windows(u, sw)
            _BRUHAT_CACHE[key] = res
            return res
    raise AssertionError("positive length but no descent")


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """
    Bruhat order on the extended group.  Elements in different length-zero
    cosets (different Omega-component or similitude) are incomparable.
    """
    if u.n != w.n:
        raise ValueError("rank mismatch")
    if u.similitude != w.similitude or u.omega() != w.omega():
        return False
    return _bruhat_windows(u.window, w.window)


# ---------------------------------------------------------------------------
# the x · phi^λ · y normal form
# ---------------------------------------------------------------------------

def pairing_2rho(coords: Sequence[int]) -> int:
    """<λ, 2ρ> = sum over positive roots (i<j) of λ_i - λ_j."""
    n = len(coords)
    return sum(coords[i - 1] * (n + 1 - 2 * i) for i in range(1, n + 1))


def decompose_xmy(w: WeylElement) -> tuple[WeylElement, Cocharacter, WeylElement]:
    """
    The unique normal form w = x · phi^λ · y with λ dominant, x, y finite, and
    phi^λ y minimal in its W_0-coset.  Satisfies ℓ(w) = ℓ(x) + <λ,2ρ> - ℓ(y).
    """
    # descend to the minimal representative of W_0 · w
    cur = w.window
    x_word: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(1, w.n):
            if _left_descent(cur, i):
                cur = _left_mul(cur, i)
                x_word.append(i)
                changed = True
                break
    # w = s_{a_1} ... s_{a_r} · cur with the a's in reversal order
    x_win = tuple(range(1, w.n + 1))
    for a in reversed(x_word):
        x_win = _left_mul(x_win, a)
    y_win = _finite_part(cur)
    lam = [0] * w.n
    for p in range(w.n):
        lam[y_win[p] - 1] = (cur[p] - y_win[p]) // w.n
    lamco = Cocharacter(tuple(lam), w.similitude)
    if not lamco.is_dominant():
        raise AssertionError("minimal coset representative has non-dominant part")
    return WeylElement(x_win), lamco, WeylElement(y_win)


def _iter_ball(n: int, max_len: int, omega: int = 0) -> Iterator[WeylElement]:
    """All elements of length <= max_len in the coset W_a · tau1^omega."""
    start = omega_shift(n, omega).window
    seen = {start}
    frontier = [start]
    yield WeylElement(start)
    for _ in range(max_len):
        nxt = []
        for win in frontier:
            for i in range(n):
                if not _left_descent(win, i):
                    new = _left_mul(win, i)
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
                        yield WeylElement(new)
        frontier = nxt
