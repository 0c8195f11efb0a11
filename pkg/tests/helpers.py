"""Shared builders and oracles for the test suite."""

from __future__ import annotations

import random

from fuzzts import Degree, Fts, FuzzyAutomaton, FuzzySet, ONE, Relation, ZERO

# degree pool used by the random generators; "0" means "no edge"
DEGREE_POOL = ("0", "0.3", "0.5", "0.8", "1")
NONZERO_DEGREES = ("0.3", "0.5", "0.8", "1")


def choice_late() -> Fts:
    """Four states; the b/c choice happens after the a-step."""
    return Fts.from_triples(
        states=["s0", "s1", "s2", "s3"],
        labels=["a", "b", "c"],
        init="s0",
        triples=[
            ("s0", "a", "0.9", "s1"),
            ("s1", "b", "0.8", "s2"),
            ("s1", "c", "0.7", "s3"),
        ],
        name="choice_late",
    )


def choice_early() -> Fts:
    """Same word degrees as choice_late but the choice is made at the
    a-step; not bisimilar to choice_late."""
    return Fts.from_triples(
        states=["t0", "t1", "t1'", "t2", "t3"],
        labels=["a", "b", "c"],
        init="t0",
        triples=[
            ("t0", "a", "0.9", "t1"),
            ("t0", "a", "0.9", "t1'"),
            ("t1", "b", "0.8", "t2"),
            ("t1'", "c", "0.7", "t3"),
        ],
        name="choice_early",
    )


def dup_branch() -> Fts:
    """Five states with a duplicated middle branch; minimizes to 3 states."""
    return Fts.from_triples(
        states=["s0", "s1", "s2", "s3", "s4"],
        labels=["a", "b", "c"],
        init="s0",
        triples=[
            ("s0", "a", "0.9", "s1"),
            ("s0", "a", "0.9", "s2"),
            ("s1", "b", "0.8", "s3"),
            ("s2", "b", "0.8", "s3"),
            ("s1", "c", "0.7", "s4"),
            ("s2", "c", "0.7", "s4"),
        ],
        name="dup_branch",
    )


def twin_fork() -> Fts:
    """One a-step of degree 0.8 into two indistinguishable dead ends."""
    return Fts.from_triples(
        states=["s0", "s", "t"],
        labels=["a"],
        init="s0",
        triples=[("s0", "a", "0.8", "s"), ("s0", "a", "0.8", "t")],
        name="twin_fork",
    )


def skew_pair() -> tuple[Fts, Fts, Relation]:
    """A bisimulation that is not strong: both sides offer a-moves of degrees
    0.8 and 0.3, but the relation pairs the 0.8-target only with the
    0.3-target."""
    left = Fts.from_triples(
        states=["s0", "s1", "s2"],
        labels=["a"],
        init="s0",
        triples=[("s0", "a", "0.8", "s1"), ("s0", "a", "0.3", "s2")],
        name="skew_left",
    )
    right = Fts.from_triples(
        states=["t0", "u1", "u2"],
        labels=["a"],
        init="t0",
        triples=[("t0", "a", "0.3", "u1"), ("t0", "a", "0.8", "u2")],
        name="skew_right",
    )
    rel = Relation(
        left.states,
        right.states,
        {("s0", "t0"), ("s1", "u1"), ("s2", "u1"), ("s2", "u2")},
    )
    return left, right, rel


def random_fts(rng: random.Random, n_states: int, labels, prefix: str = "s") -> Fts:
    """Every (source, label, target) degree drawn from DEGREE_POOL; zero
    means the edge is absent."""
    states = [f"{prefix}{i}" for i in range(n_states)]
    triples = []
    for s in states:
        for a in labels:
            for t in states:
                degree = rng.choice(DEGREE_POOL)
                if degree != "0":
                    triples.append((s, a, degree, t))
    return Fts.from_triples(states, labels, states[0], triples, name=f"{prefix}rnd")


_SIZE_PAIRS = [
    (i, j) for i in range(1, 13) for j in range(1, 13) if i * j <= 12
]


def _sparse_fts(rng: random.Random, n_states: int, labels, prefix: str, degrees) -> Fts:
    """Like random_fts but with half the edges absent and a restricted
    nonzero degree pool; sparse systems relate far more often."""
    states = [f"{prefix}{i}" for i in range(n_states)]
    triples = [
        (s, a, rng.choice(degrees), t)
        for s in states
        for a in labels
        for t in states
        if rng.random() < 0.5
    ]
    return Fts.from_triples(states, labels, states[0], triples, name=f"{prefix}rnd")


def _perturbed_copy(rng: random.Random, f: Fts, degrees) -> Fts:
    """Relabelled copy of ``f`` with up to two edges rewritten, so the pair
    carries a rich but usually imperfect bisimulation structure."""
    rename = {s: "t" + s[1:] for s in f.states}
    triples = [(rename[s], a, str(d), rename[t]) for s, a, d, t in f.transitions()]
    states = sorted(rename.values())
    labels = sorted(f.labels)
    copy = Fts.from_triples(states, labels, rename[f.init], triples, name="trnd")
    for _ in range(rng.randint(0, 2)):
        s, a, t = rng.choice(states), rng.choice(labels), rng.choice(states)
        new = rng.choice(("0",) + tuple(degrees))
        triples = [
            (x, l, str(d), y)
            for x, l, d, y in copy.transitions()
            if (x, l, y) != (s, a, t)
        ]
        if new != "0":
            triples.append((s, a, new, t))
        copy = Fts.from_triples(states, labels, copy.init, triples, name="trnd")
    return copy


def random_pair(rng: random.Random) -> tuple[Fts, Fts]:
    """A pair over a shared alphabet with |S1 x S2| <= 12 and <= 2 labels.

    Each instance draws its degrees from a one- or two-element nonzero pool.
    Half the pairs are independent sparse systems; the other half pair a
    small system with a perturbed relabelling of itself, so the corpus mixes
    unrelated pairs with strongly related ones."""
    labels = ["a", "b"][: rng.randint(1, 2)]
    degrees = tuple(rng.sample(NONZERO_DEGREES, rng.randint(1, 2)))
    if rng.random() < 0.5:
        f1 = _sparse_fts(rng, rng.randint(1, 3), labels, "s", degrees)
        return f1, _perturbed_copy(rng, f1, degrees)
    n1, n2 = rng.choice(_SIZE_PAIRS)
    return (
        _sparse_fts(rng, n1, labels, "s", degrees),
        _sparse_fts(rng, n2, labels, "t", degrees),
    )


def random_relation(rng: random.Random, f1: Fts, f2: Fts, density: float = 0.4) -> Relation:
    pairs = {
        (s, t)
        for s in f1.states
        for t in f2.states
        if rng.random() < density
    }
    return Relation(f1.states, f2.states, pairs)


def random_equivalence(rng: random.Random, f: Fts) -> Relation:
    """Random partition of the states, returned as an equivalence relation."""
    states = f.sorted_states()
    rng.shuffle(states)
    blocks: list[list[str]] = []
    for s in states:
        if blocks and rng.random() < 0.5:
            rng.choice(blocks).append(s)
        else:
            blocks.append([s])
    pairs = {(a, b) for block in blocks for a in block for b in block}
    return Relation(f.states, f.states, pairs)


def random_map(rng: random.Random, f1: Fts, f2: Fts):
    from fuzzts import StateMap

    targets = f2.sorted_states()
    return StateMap(
        {s: rng.choice(targets) for s in f1.states}, f1.states, f2.states
    )


def random_automaton(rng: random.Random, n_states: int, labels, prefix: str = "s") -> FuzzyAutomaton:
    base = random_fts(rng, n_states, labels, prefix)
    final = {
        s: Degree.parse(rng.choice(DEGREE_POOL)) for s in base.sorted_states()
    }
    return FuzzyAutomaton(base, FuzzySet(base.states, final))


def path_degree(f: Fts, state: str, word) -> Degree:
    """Independent word-degree oracle: enumerate every state path of the
    word's length and take the best min of its edge degrees."""
    best = ZERO

    def walk(current: str, index: int, acc: Degree) -> None:
        nonlocal best
        if index == len(word):
            if acc > best:
                best = acc
            return
        for target in f.sorted_states():
            edge = f.degree(current, word[index], target)
            if edge:
                walk(target, index + 1, min(acc, edge))

    walk(state, 0, ONE)
    return best


def all_words(labels, max_len: int):
    """Every word over ``labels`` up to the given length, shortest first."""
    frontier = [()]
    for word in frontier:
        yield word
        if len(word) < max_len:
            frontier.extend(word + (a,) for a in sorted(labels))


def correlational_by_blocks(dec, left: frozenset, right: frozenset) -> bool:
    """Predicted correlational test from a block decomposition: inside the
    projections the two sets must be matching unions of whole blocks; outside
    states are unconstrained."""
    for block_left, block_right in dec.blocks:
        hit_left = left & block_left
        hit_right = right & block_right
        if hit_left not in (frozenset(), block_left):
            return False
        if hit_right not in (frozenset(), block_right):
            return False
        if bool(hit_left) != bool(hit_right):
            return False
    return True


def subsets(items):
    items = sorted(items)
    for mask in range(1 << len(items)):
        yield frozenset(x for i, x in enumerate(items) if mask >> i & 1)
