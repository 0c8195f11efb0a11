"""System constructions: parallel composition, subsystems, homomorphisms,
quotients, and minimization."""

from __future__ import annotations

from dataclasses import dataclass

from .bisim import Verdict, Witness, are_bisimilar, self_bisimilarity
from .core import Fts, FuzzySet, Relation
from .degrees import Degree, ZERO
from .errors import AlphabetError, ModelError, UniverseError


class StateMap:
    """A total map between the state sets of two systems."""

    __slots__ = ("domain", "codomain", "_table")

    def __init__(self, mapping, domain, codomain):
        domain = frozenset(domain)
        codomain = frozenset(codomain)
        table = dict(mapping)
        if set(table) != domain:
            raise ModelError("map is not total on the domain")
        for value in table.values():
            if value not in codomain:
                raise UniverseError(f"map image {value!r} is outside the codomain")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "_table", table)

    @classmethod
    def identity(cls, states) -> "StateMap":
        states = frozenset(states)
        return cls({s: s for s in states}, states, states)

    def __setattr__(self, name, value):
        raise AttributeError("StateMap is immutable")

    def __call__(self, state: str) -> str:
        if state not in self._table:
            raise UniverseError(f"unknown state {state!r}")
        return self._table[state]

    def items(self) -> list[tuple[str, str]]:
        return sorted(self._table.items())

    def image(self) -> frozenset[str]:
        return frozenset(self._table.values())

    def __eq__(self, other):
        if not isinstance(other, StateMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self._table == other._table
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, frozenset(self._table.items())))

    def __repr__(self):
        return f"StateMap({self._table!r})"


def product_id(left: str, right: str) -> str:
    return f"({left},{right})"


def parallel_compose(f1: Fts, f2: Fts) -> Fts:
    """Synchronized product over the full state product.

    Shared labels fire jointly with the min of the component degrees;
    labels private to one side move that side and freeze the other.
    """
    labels = f1.labels | f2.labels
    shared = f1.labels & f2.labels
    states = frozenset(
        product_id(s, t) for s in f1.states for t in f2.states
    )
    delta: dict[tuple[str, str], FuzzySet] = {}
    for s in f1.sorted_states():
        for t in f2.sorted_states():
            source = product_id(s, t)
            for a in sorted(labels):
                entries: dict[str, Degree] = {}
                if a in shared:
                    for s2, d1 in f1.delta(s, a).items():
                        for t2, d2 in f2.delta(t, a).items():
                            entries[product_id(s2, t2)] = min(d1, d2)
                elif a in f1.labels:
                    for s2, d1 in f1.delta(s, a).items():
                        entries[product_id(s2, t)] = d1
                else:
                    for t2, d2 in f2.delta(t, a).items():
                        entries[product_id(s, t2)] = d2
                if entries:
                    delta[(source, a)] = FuzzySet(states, entries)
    return Fts(
        states,
        labels,
        product_id(f1.init, f2.init),
        delta,
        name=product_id(f1.name, f2.name),
    )


def is_subsystem(f1: Fts, f2: Fts) -> bool:
    """Whether f1 is literally a part of f2: contained state set and the
    same transition images on it (so no f2-transition leaves f1's states)."""
    if f1.labels != f2.labels:
        raise AlphabetError("label alphabets differ")
    if not f1.states <= f2.states:
        return False
    for s in f1.sorted_states():
        for a in f1.sorted_labels():
            if dict(f1.delta(s, a).items()) != dict(f2.delta(s, a).items()):
                return False
    return True


def check_homomorphism(f1: Fts, f2: Fts, fmap: StateMap) -> Verdict:
    """A map is a homomorphism when it sends init to init and the image
    degree of every transition equals the supremum over the preimage:
    delta2(f(s), a)(t) = sup of delta1(s, a) over f's preimage of t."""
    if f1.labels != f2.labels:
        raise AlphabetError("label alphabets differ")
    if fmap.domain != f1.states or fmap.codomain != f2.states:
        raise UniverseError("map does not run between the two state sets")
    mapped_init = fmap(f1.init)
    if mapped_init != f2.init:
        return Verdict(
            False, Witness(f1.init, mapped_init, None, "init-map", f2.init)
        )
    preimages: dict[str, list[str]] = {}
    for s, t in fmap.items():
        preimages.setdefault(t, []).append(s)
    for s in f1.sorted_states():
        fs = fmap(s)
        for a in f1.sorted_labels():
            mu = f1.delta(s, a)
            eta = f2.delta(fs, a)
            for t in f2.sorted_states():
                required = max(
                    (mu(t1) for t1 in preimages.get(t, ())), default=ZERO
                )
                actual = eta(t)
                if required != actual:
                    return Verdict(
                        False, Witness(s, fs, a, "hom-sup", t, required, actual)
                    )
    return Verdict(True)


def hom_image(f1: Fts, f2: Fts, fmap: StateMap) -> Fts:
    """The subsystem of f2 carried by the image of a homomorphism."""
    if not check_homomorphism(f1, f2, fmap).holds:
        raise ModelError("map is not a homomorphism")
    image = fmap.image()
    delta = {}
    for s in sorted(image):
        for a in f2.sorted_labels():
            entries = dict(f2.delta(s, a).items())
            if entries:
                delta[(s, a)] = FuzzySet(image, entries)
    result = Fts(image, f2.labels, f2.init, delta, name=f2.name)
    assert is_subsystem(result, f2)
    return result


def kernel(fmap: StateMap) -> Relation:
    """States identified by the map; always an equivalence on the domain."""
    pairs = {
        (s, t)
        for s, fs in fmap.items()
        for t, ft in fmap.items()
        if fs == ft
    }
    rel = Relation(fmap.domain, fmap.domain, pairs)
    assert rel.is_equivalence()
    return rel


def graph_of(fmap: StateMap) -> Relation:
    return Relation(fmap.domain, fmap.codomain, set(fmap.items()))


def push_relation(fmap: StateMap, r: Relation) -> Relation:
    """Image of a relation on the domain under the map, as a relation on the
    codomain."""
    if r.left_universe != fmap.domain or r.right_universe != fmap.domain:
        raise UniverseError("relation is not over the map's domain")
    pairs = {(fmap(s), fmap(t)) for s, t in r.pairs}
    return Relation(fmap.codomain, fmap.codomain, pairs)


def pull_relation(fmap: StateMap, r: Relation) -> Relation:
    """Preimage of a relation on the codomain, as a relation on the domain."""
    if r.left_universe != fmap.codomain or r.right_universe != fmap.codomain:
        raise UniverseError("relation is not over the map's codomain")
    pairs = {
        (s, t)
        for s in fmap.domain
        for t in fmap.domain
        if (fmap(s), fmap(t)) in r
    }
    return Relation(fmap.domain, fmap.domain, pairs)


@dataclass(frozen=True)
class QuotientFts:
    """A quotient system together with its projection bookkeeping."""

    quotient: Fts
    class_of: StateMap
    classes: dict[str, frozenset[str]]


def quotient(f: Fts, r: Relation) -> QuotientFts:
    """Quotient of a system by an equivalence on its states.

    Classes are named "[m]" after their least member; the class-to-class
    degree is the supremum over all member pairs, which makes the definition
    independent of representatives.
    """
    if r.left_universe != f.states or r.right_universe != f.states:
        raise UniverseError("relation universes do not match the system")
    if not r.is_equivalence():
        raise ModelError("relation is not an equivalence")
    blocks = r.equivalence_classes()
    name_of = {block: f"[{min(block)}]" for block in blocks}
    classes = {name_of[block]: block for block in blocks}
    class_of = {s: name_of[block] for block in blocks for s in block}
    qstates = frozenset(classes)
    delta: dict[tuple[str, str], FuzzySet] = {}
    for block in blocks:
        for a in f.sorted_labels():
            entries: dict[str, Degree] = {}
            for target_block in blocks:
                best = ZERO
                for s in block:
                    value = f.delta(s, a).sup(target_block)
                    if value > best:
                        best = value
                if best:
                    entries[name_of[target_block]] = best
            if entries:
                delta[(name_of[block], a)] = FuzzySet(qstates, entries)
    qf = Fts(qstates, f.labels, class_of[f.init], delta, name=f.name)
    return QuotientFts(qf, StateMap(class_of, f.states, qstates), classes)


def minimize(f: Fts) -> QuotientFts:
    """Quotient by self-bisimilarity: the canonical smallest bisimilar
    system.  The result's self-bisimilarity is the diagonal."""
    q = quotient(f, self_bisimilarity(f))
    assert are_bisimilar(f, q.quotient)
    assert self_bisimilarity(q.quotient) == Relation.diagonal(q.quotient.states)
    return q
