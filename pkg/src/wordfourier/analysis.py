"""Occurrence profiles: classify each generator of a word.

A generator is *single* when it occurs exactly once in the word (with
either sign), a *square* when it occurs exactly twice with the same sign,
and *dismissible* when it occurs once positively and once negatively.
Everything with three or more occurrences, or a mixed two-plus-one
pattern, is *general*; generators with no occurrence are *absent*.

Classification concerns the freely reduced word, so :func:`classify`
reduces its input defensively and records whether that changed anything.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, free_reduce

ABSENT = "absent"
SINGLE = "single"
SQUARE = "square"
DISMISSIBLE = "dismissible"
GENERAL = "general"


def _classification(positive: int, negative: int) -> str:
    total = positive + negative
    if total == 0:
        return ABSENT
    if total == 1:
        return SINGLE
    if total == 2:
        if positive == 2 or negative == 2:
            return SQUARE
        return DISMISSIBLE
    return GENERAL


@dataclass(frozen=True)
class GeneratorProfile:
    name: str
    positive_count: int
    negative_count: int
    positions: tuple[int, ...]
    classification: str

    @property
    def total(self) -> int:
        return self.positive_count + self.negative_count


@dataclass(frozen=True)
class OccurrenceProfile:
    """Per-generator occurrence data for a freely reduced word."""

    word: Word  # the reduced word the profile describes
    generators: tuple[GeneratorProfile, ...]
    reduction_changed: bool  # input was not freely reduced

    def by_name(self, name: str) -> GeneratorProfile:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(f"unknown generator {name!r}")

    def names_with(self, classification: str) -> tuple[str, ...]:
        return tuple(
            g.name for g in self.generators if g.classification == classification
        )

    @property
    def absent(self) -> tuple[str, ...]:
        return self.names_with(ABSENT)

    @property
    def single(self) -> tuple[str, ...]:
        return self.names_with(SINGLE)

    @property
    def square(self) -> tuple[str, ...]:
        return self.names_with(SQUARE)

    @property
    def dismissible(self) -> tuple[str, ...]:
        return self.names_with(DISMISSIBLE)

    @property
    def general(self) -> tuple[str, ...]:
        return self.names_with(GENERAL)


def classify(word: Word) -> OccurrenceProfile:
    """Profile every generator of the word's alphabet.

    The word is freely reduced first; ``reduction_changed`` reports whether
    that altered the letter sequence.
    """
    reduced = free_reduce(word)
    changed = reduced.letters != word.letters
    rank = word.alphabet.rank
    positive = [0] * rank
    negative = [0] * rank
    positions: list[list[int]] = [[] for _ in range(rank)]
    for i, (g, s) in enumerate(reduced.letters):
        if s > 0:
            positive[g] += 1
        else:
            negative[g] += 1
        positions[g].append(i)
    profiles = tuple(
        GeneratorProfile(
            name=word.alphabet.names[g],
            positive_count=positive[g],
            negative_count=negative[g],
            positions=tuple(positions[g]),
            classification=_classification(positive[g], negative[g]),
        )
        for g in range(rank)
    )
    return OccurrenceProfile(word=reduced, generators=profiles, reduction_changed=changed)
