"""Nudge policies that counter polarization in the language engine.

Active nudge: show a polarized agent the stated opinion of the agent most
opposed to it. Passive nudge: share fixed open-mindedness content without
advocating any position. Both target agents whose belief magnitude reaches
the extremity threshold, and apply to the language engine only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import ParameterError
from .graphs import NetworkGraph, hop_distances

NUDGE_KINDS = ("none", "active", "passive")

DEFAULT_PASSIVE_TEXTS = (
    "Issues are rarely black and white.",
    "Many societal and political issues are complex and multifaceted.",
    "Hearing out a different view can sharpen your own thinking.",
)

ACTIVE_NUDGE_PREFIX = "An opposing perspective: "


@dataclass(frozen=True)
class NudgePolicy:
    kind: str = "none"
    extremity_threshold: int = 2
    passive_texts: tuple = DEFAULT_PASSIVE_TEXTS

    def validate(self) -> None:
        if self.kind not in NUDGE_KINDS:
            raise ParameterError(f"unknown nudge kind {self.kind!r}")
        if self.extremity_threshold not in (1, 2):
            raise ParameterError(f"extremity threshold must be 1 or 2, got {self.extremity_threshold}")
        if self.kind == "passive" and not self.passive_texts:
            raise ParameterError("passive nudges need at least one text")


def select_targets(beliefs, threshold: int) -> set:
    """Indices of agents with ``|belief| >= threshold``."""
    return {i for i, v in enumerate(beliefs) if abs(v) >= threshold}


def active_nudge_content(
    target: int, beliefs, opinion_texts: Sequence[str], g: NetworkGraph
) -> Optional[str]:
    """Opinion of the most opposed agent, framed as an opposing perspective.

    The whole population is searched for the agent with belief of opposite
    sign and maximal absolute difference; ties break toward the candidate
    nearest to the target in the graph, then toward the lowest index.
    Returns None when no agent holds an opposite-sign belief.
    """
    own = beliefs[target]
    if own == 0:
        return None
    opposed = [j for j in range(len(beliefs)) if beliefs[j] * own < 0]
    if not opposed:
        return None
    best_gap = max(abs(own - beliefs[j]) for j in opposed)
    tied = [j for j in opposed if abs(own - beliefs[j]) == best_gap]
    if len(tied) > 1:
        dist = hop_distances(g, target)
        tied.sort(key=lambda j: (dist[j] if dist[j] is not None else float("inf"), j))
    chosen = tied[0]
    return f'{ACTIVE_NUDGE_PREFIX}"{opinion_texts[chosen]}"'


def passive_nudge_feed(rng: np.random.Generator, texts: Sequence[str] = DEFAULT_PASSIVE_TEXTS) -> Iterator[str]:
    """Endless rotation through ``texts`` starting at a seeded offset."""
    if not texts:
        raise ParameterError("passive nudge text list is empty")
    start = int(rng.integers(0, len(texts)))

    def rotate():
        position = start
        while True:
            yield texts[position % len(texts)]
            position += 1

    return rotate()
