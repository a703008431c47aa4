"""Prompt templates for the language engine, and parsing of model replies.

The wording here is this package's own design. Two templates exist: a daily
reflection prompt asking for an updated stance, and a note-compression
prompt for long-term memory. Replies to the reflection prompt must carry a
``BELIEF:`` line with an integer in [-2, 2] followed by an ``OPINION:``
line; out-of-range integers are clamped to the nearest grid endpoint.

Exposure items embed the speaker's numeric stance (``(stance +1) ...``) so
the stance signal reaches the model explicitly and a deterministic mock
backend can act on it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import OpinionParseError
from .population import Persona, clamp_to_grid, persona_card

REFLECTION_HEADER = "You are a participant in a long-running online discussion. Stay in character."
SUMMARY_HEADER = "You keep private discussion notes for one participant."

SECTION_PROFILE = "== Who you are =="
SECTION_TOPIC = "== Topic =="
SECTION_MEMORY = "== What you remember =="
SECTION_HEARD = "== Today you heard =="
SECTION_NOTE = "== Platform note =="
SECTION_POSITION = "== Your current position =="
SECTION_FORMAT = "== How to answer =="
SECTION_OLD_NOTES = "== Existing notes =="
SECTION_EXCHANGES = "== Today's exchanges =="

STANCE_STATEMENTS = {
    -2: "I strongly oppose this.",
    -1: "I lean against this.",
    0: "I am undecided for now.",
    1: "I lean in favor of this.",
    2: "I strongly support this.",
}

_BELIEF_RE = re.compile(r"BELIEF:\s*([+-]?\d+)")
_OPINION_RE = re.compile(r"OPINION:\s*(.+)", re.DOTALL)


@dataclass(frozen=True)
class OpinionOutput:
    """An agent's stated opinion text plus its grid belief value."""

    opinion_text: str
    belief: int
    clamped: bool = False


def stance_statement(belief: int) -> str:
    """Canonical opinion text for a grid belief; used for day-0 states."""
    return STANCE_STATEMENTS[clamp_to_grid(belief)]


def build_reflection_prompt(
    persona: Persona,
    topic: str,
    memory,
    current: OpinionOutput,
    nudge: Optional[str] = None,
) -> str:
    """Deterministic daily prompt: persona, topic, memory, today's exposures,
    optional platform note, current position, and the reply format."""
    parts = [
        REFLECTION_HEADER,
        "",
        SECTION_PROFILE,
        persona_card(persona),
        "",
        SECTION_TOPIC,
        topic,
        "",
        SECTION_MEMORY,
        memory.long_term if memory.long_term else "Nothing so far.",
    ]
    if memory.short_term:
        parts += ["", SECTION_HEARD]
        parts += [f"- Agent {source}: {text}" for source, text in memory.short_term]
    if nudge is not None:
        parts += ["", SECTION_NOTE, nudge]
    parts += [
        "",
        SECTION_POSITION,
        f"Stance value: {current.belief:+d}",
        f"Statement: {current.opinion_text}",
        "",
        SECTION_FORMAT,
        "Think about what you heard today and whether it changes your view.",
        "Reply with exactly two lines:",
        "BELIEF: <integer from -2 (strongly oppose) to 2 (strongly support)>",
        "OPINION: <one or two sentences giving your current view>",
    ]
    return "\n".join(parts)


def build_summary_prompt(old_summary: str, day_items: Sequence[tuple], budget: int) -> str:
    parts = [
        SUMMARY_HEADER,
        "",
        SECTION_OLD_NOTES,
        old_summary if old_summary else "(none)",
        "",
        SECTION_EXCHANGES,
    ]
    parts += [f"- Agent {source}: {text}" for source, text in day_items]
    parts += [
        "",
        SECTION_FORMAT,
        f"Rewrite the notes to at most {budget} characters, keeping what will matter",
        "in future conversations. Reply with the notes text only.",
    ]
    return "\n".join(parts)


def parse_opinion_output(raw: str) -> OpinionOutput:
    """Extract the first BELIEF integer and the OPINION text from a reply.

    Out-of-grid integers are clamped to the nearest endpoint and flagged.
    Raises OpinionParseError when no belief integer (or no usable opinion
    text) can be found.
    """
    belief_match = _BELIEF_RE.search(raw)
    if belief_match is None:
        raise OpinionParseError(f"no BELIEF line in reply: {raw[:80]!r}")
    value = int(belief_match.group(1))
    clamped = not -2 <= value <= 2
    belief = clamp_to_grid(value)

    opinion_match = _OPINION_RE.search(raw)
    if opinion_match is not None:
        text = opinion_match.group(1).strip()
    else:
        # tolerate a missing tag: use whatever text surrounds the BELIEF line
        text = (raw[: belief_match.start()] + raw[belief_match.end():]).strip()
    if not text:
        raise OpinionParseError("reply carries no opinion text")
    return OpinionOutput(opinion_text=text, belief=belief, clamped=clamped)
