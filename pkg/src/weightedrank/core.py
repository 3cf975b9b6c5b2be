"""Ranked lists, element weights, partial-list completion and rank alignment.

Lists are sequences of distinct opaque string tokens. Two partial lists are
compared by first completing each one to a permutation of their union: the
tokens a list is missing are appended at its end, in the order they appear
in the other list. The completed pair is then relabelled by rank in the
first (reference) list.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "ValidationError",
    "RankedList",
    "WeightTable",
    "AlignedPair",
    "parse_ranked_list",
    "parse_weight_table",
    "complete_pair",
    "align",
]

DEFAULT_KEY = "__default__"


class ValidationError(ValueError):
    """Input violates a documented format or invariant."""


@dataclass(frozen=True)
class RankedList:
    """Ordered sequence of distinct tokens; the rank of ``elements[p]`` is ``p + 1``."""

    elements: tuple[str, ...]

    def __init__(self, elements: Iterable[str] = ()):
        elems = tuple(elements)
        seen: set[str] = set()
        for tok in elems:
            if not isinstance(tok, str):
                raise ValidationError(f"token {tok!r} is not a string")
            if tok in seen:
                raise ValidationError(f"duplicate token {tok!r}")
            seen.add(tok)
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, item):
        return self.elements[item]

    def rank(self, token: str) -> int:
        return self.elements.index(token) + 1


@dataclass(frozen=True)
class WeightTable:
    """Positive weight per token; tokens without an entry get ``default``."""

    entries: Mapping[str, float] = field(default_factory=dict)
    default: float = 1.0

    def __post_init__(self):
        entries = dict(self.entries)
        _check_weight(DEFAULT_KEY, self.default)
        values = list(entries.values())
        if all(type(v) in (int, float) for v in values):
            arr = np.array(values, dtype=np.float64)
            if np.all((arr > 0) & np.isfinite(arr)):
                values = ()
        # slow path only to name the offending token
        if values:
            for tok, wt in entries.items():
                _check_weight(tok, wt)
        object.__setattr__(self, "entries", entries)

    def weight(self, token: str) -> float:
        return self.entries.get(token, self.default)

    def vector(self, tokens: Sequence[str]) -> np.ndarray:
        """Weights of ``tokens`` in order.

        Integer dtype when every weight involved is integral, so that
        downstream sums stay exact.
        """
        get, default = self.entries.get, self.default
        values = np.fromiter((get(t, default) for t in tokens), dtype=np.float64, count=len(tokens))
        if np.all(values == np.floor(values)) and np.all(values < 2**40):
            return values.astype(np.int64)
        return values


def _check_weight(token: str, value) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float, np.integer, np.floating)):
        raise ValidationError(f"weight for {token!r} is not a number: {value!r}")
    if not math.isfinite(value) or value <= 0:
        raise ValidationError(f"non-positive weight for {token!r}: {value!r}")


@dataclass(frozen=True)
class AlignedPair:
    """Two completed lists over the same universe, relabelled by reference rank.

    ``universe`` is the completed reference list. ``pi_ranks[i - 1]`` is the
    rank, in the completed second list, of the token whose reference rank is
    ``i``. The reference list's own rank vector is the identity.
    """

    universe: tuple[str, ...]
    pi_ranks: tuple[int, ...]

    def __post_init__(self):
        n = len(self.universe)
        if len(self.pi_ranks) != n or sorted(self.pi_ranks) != list(range(1, n + 1)):
            raise ValidationError("pi_ranks is not a permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.universe)

    def ranks_array(self) -> np.ndarray:
        """0-based copy of ``pi_ranks`` as an int64 array."""
        return np.asarray(self.pi_ranks, dtype=np.int64) - 1

    def weights(self, w: WeightTable | None) -> np.ndarray:
        if w is None:
            return np.ones(self.n, dtype=np.int64)
        return w.vector(self.universe)

    @classmethod
    def from_ranks(cls, pi_ranks: Sequence[int], universe: Sequence[str] | None = None) -> "AlignedPair":
        """Build a pair straight from a 1-based rank vector.

        Tokens default to ``"1" .. "n"`` (the reference ranks as strings).
        """
        ranks = tuple(int(r) for r in pi_ranks)
        if universe is None:
            universe = [str(i) for i in range(1, len(ranks) + 1)]
        return cls(tuple(universe), ranks)


def parse_ranked_list(text: str, format: str = "auto") -> RankedList:
    """Parse a ranked list document.

    ``plain``: one token per line, LF or CRLF, trailing blank lines ignored.
    ``json``: a flat array of strings. ``auto`` picks json when the first
    non-blank character is ``[``.
    """
    if text.startswith("﻿"):
        text = text[1:]
    if format == "auto":
        format = "json" if text.lstrip().startswith("[") else "plain"
    if format == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"malformed json list: {exc}") from None
        if not isinstance(data, list) or not all(isinstance(t, str) for t in data):
            raise ValidationError("json list must be a flat array of strings")
        return RankedList(data)
    if format != "plain":
        raise ValueError(f"unknown list format {format!r}")
    lines = text.replace("\r\n", "\n").split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    for lineno, tok in enumerate(lines, 1):
        if tok == "":
            raise ValidationError(f"empty token on line {lineno}")
    return RankedList(lines)


def parse_weight_table(text: str) -> WeightTable:
    """Parse a JSON ``{token: weight}`` object; ``"__default__"`` sets the fallback."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed weight file: {exc}") from None
    if not isinstance(data, dict):
        raise ValidationError("weight file must be a JSON object")
    entries = dict(data)
    default = entries.pop(DEFAULT_KEY, 1.0)
    return WeightTable(entries, default)


def complete_pair(a: RankedList, b: RankedList) -> tuple[RankedList, RankedList]:
    """Extend both lists to permutations of their union.

    Each list keeps its own tokens at their original ranks; missing tokens
    are appended in the relative order they hold in the other list.
    """
    if len(a) == 0 and len(b) == 0:
        raise ValidationError("cannot compare two empty lists")
    in_a, in_b = set(a.elements), set(b.elements)
    a_full = a.elements + tuple(t for t in b.elements if t not in in_a)
    b_full = b.elements + tuple(t for t in a.elements if t not in in_b)
    return RankedList(a_full), RankedList(b_full)


def align(a_complete: RankedList, b_complete: RankedList) -> AlignedPair:
    if len(a_complete) != len(b_complete) or set(a_complete.elements) != set(b_complete.elements):
        raise ValidationError("lists are not permutations of each other")
    pos = {tok: r for r, tok in enumerate(b_complete.elements, 1)}
    return AlignedPair(a_complete.elements, tuple(pos[t] for t in a_complete.elements))
