"""Shared strategies and independent oracles used across the test suite."""

from __future__ import annotations

import itertools

from hypothesis import HealthCheck, settings, strategies as st

from adlv.weyl import WeylElement, from_word

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.filter_too_much],
)
settings.load_profile("suite")


@st.composite
def weyl_elements(draw, min_n=2, max_n=8, max_len=10, omega_bound=2, sim_bound=2):
    n = draw(st.integers(min_n, max_n))
    word = draw(st.lists(st.integers(0, n - 1), max_size=max_len))
    omega = draw(st.integers(-omega_bound, omega_bound))
    sim = draw(st.integers(-sim_bound, sim_bound))
    return from_word(n, word, omega=omega, similitude=sim)


@st.composite
def weyl_element_pairs(draw, max_n=8, max_len=8):
    """Two elements of the same rank."""
    n = draw(st.integers(2, max_n))
    words = [draw(st.lists(st.integers(0, n - 1), max_size=max_len))
             for _ in range(2)]
    omegas = [draw(st.integers(-2, 2)) for _ in range(2)]
    return tuple(from_word(n, w, omega=m) for w, m in zip(words, omegas))


@st.composite
def weyl_element_triples(draw, max_n=12, max_len=8):
    n = draw(st.integers(2, max_n))
    return tuple(
        from_word(n,
                  draw(st.lists(st.integers(0, n - 1), max_size=max_len)),
                  omega=draw(st.integers(-2, 2)),
                  similitude=draw(st.integers(-2, 2)))
        for _ in range(3))


# ---------------------------------------------------------------------------
# independent oracles (never shared with src/)
# ---------------------------------------------------------------------------

def length_formula(w: WeylElement) -> int:
    """
    The double-sum length formula over positive roots, applied to the
    factorization w = u · phi^λ with u finite:

        sum_{i<j, u(i)>u(j)} |λ_i - λ_j + 1| + sum_{i<j, u(i)<u(j)} |λ_i - λ_j|
    """
    n = w.n
    u = [(v - 1) % n + 1 for v in w.window]
    lam = [(w.window[i] - u[i]) // n for i in range(n)]
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            d = lam[i] - lam[j]
            total += abs(d + 1) if u[i] > u[j] else abs(d)
    return total


def subword_products(w: WeylElement) -> frozenset[tuple[int, ...]]:
    """All windows obtainable as subword products of one reduced word of w
    (times the Omega part); by the subword property this is the lower Bruhat
    interval of the window part."""
    word, m = w.reduced_word()
    out = set()
    for mask in range(1 << len(word)):
        sub = [word[i] for i in range(len(word)) if mask >> i & 1]
        out.add(from_word(w.n, sub, omega=m).window)
    return frozenset(out)


def bruhat_subword_oracle(u: WeylElement, w: WeylElement) -> bool:
    if u.similitude != w.similitude or u.omega() != w.omega():
        return False
    return u.window in subword_products(w)


def all_perm_elements(n: int):
    """Every finite element of rank n."""
    return [WeylElement(p) for p in itertools.permutations(range(1, n + 1))]
