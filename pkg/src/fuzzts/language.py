"""Max-min word semantics of fuzzy transition systems.

The degree of a word is computed by propagating a possibility distribution
one label at a time: the weight of reaching a target is the best (max) over
intermediate states of the worst (min) edge along the way.  The fuzzy
language of a state maps each word to the supremum of its reachability
distribution; it is realized here as evaluation functions and bounded tables
rather than a stored infinite object.
"""

from __future__ import annotations

from typing import Sequence

from .core import Fts, FuzzyAutomaton, FuzzySet, Word
from .degrees import ONE, Degree
from .errors import AlphabetError, UniverseError


def unit(f: Fts, state: str) -> FuzzySet:
    """The distribution concentrated on one state with degree 1."""
    if state not in f.states:
        raise UniverseError(f"unknown state {state!r}")
    return FuzzySet(f.states, {state: ONE})


def step(f: Fts, mu: FuzzySet, label: str) -> FuzzySet:
    """Advance a distribution by one label: best-over-sources min of the
    source weight and the edge degree."""
    if mu.universe != f.states:
        raise UniverseError("distribution ranges over the wrong universe")
    best: dict[str, Degree] = {}
    for source, weight in mu.items():
        for target, edge in f.delta(source, label).items():
            reached = min(weight, edge)
            if target not in best or reached > best[target]:
                best[target] = reached
    return FuzzySet(f.states, best)


def delta_word(f: Fts, state: str, word: Sequence[str]) -> FuzzySet:
    """Reachability distribution after reading ``word`` from ``state``.

    The empty word yields the unit distribution at ``state``; each further
    label folds :func:`step`.
    """
    mu = unit(f, state)
    for label in f.check_word(word):
        mu = step(f, mu, label)
    return mu


def lang_degree(f: Fts, state: str, word: Sequence[str]) -> Degree:
    """Degree of ``word`` in the fuzzy language of ``state``: the supremum of
    its reachability distribution."""
    return delta_word(f, state, word).height


def lang_table(f: Fts, state: str, max_len: int) -> dict[Word, Degree]:
    """All words of length <= ``max_len`` with nonzero degree, plus the empty
    word, in length-then-lexicographic order.

    Zero-degree words are omitted (support convention), except the empty word
    which always has degree 1.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    labels = f.sorted_labels()
    table: dict[Word, Degree] = {(): ONE}
    frontier: list[tuple[Word, FuzzySet]] = [((), unit(f, state))]
    for _ in range(max_len):
        next_frontier: list[tuple[Word, FuzzySet]] = []
        for word, mu in frontier:
            for label in labels:
                nu = step(f, mu, label)
                if nu:
                    extended = word + (label,)
                    table[extended] = nu.height
                    next_frontier.append((extended, nu))
        frontier = next_frontier
    return table


def accept_degree(m: FuzzyAutomaton, word: Sequence[str]) -> Degree:
    """Acceptance degree of a word: best min of reachability and final
    degree over all states."""
    mu = delta_word(m.base, m.base.init, word)
    return (mu & m.final).sup(m.base.states)


def lang_equal_up_to(
    f1: Fts, s1: str, f2: Fts, s2: str, max_len: int
) -> bool:
    """Exact agreement of the two fuzzy languages on every word of length
    <= ``max_len``.

    Explores both systems in lockstep and prunes a word as soon as both
    reachability distributions are empty (all longer extensions then have
    degree zero on both sides).
    """
    if f1.labels != f2.labels:
        raise AlphabetError("label alphabets differ")
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    labels = sorted(f1.labels)
    stack: list[tuple[int, FuzzySet, FuzzySet]] = [
        (0, unit(f1, s1), unit(f2, s2))
    ]
    while stack:
        depth, mu, nu = stack.pop()
        if mu.height != nu.height:
            return False
        if depth == max_len:
            continue
        for label in labels:
            mu2 = step(f1, mu, label)
            nu2 = step(f2, nu, label)
            if mu2 or nu2:
                stack.append((depth + 1, mu2, nu2))
    return True
