"""Text backends for the language engine.

A backend is anything with a ``name`` and a ``complete(prompt, max_length,
temperature) -> str`` method that never mutates simulation state. The mock
backend is a pure function of the prompt string, which makes full language
runs deterministic and testable offline; the remote backend talks to an
HTTPS chat-completion endpoint with timeout, retry, and backoff.
"""

from __future__ import annotations

import logging
import math
import os
import re
import time
from typing import Optional, Protocol, runtime_checkable

import requests

from .errors import BackendError
from .population import clamp_to_grid
from .prompts import (
    SECTION_EXCHANGES,
    SECTION_FORMAT,
    SECTION_HEARD,
    SECTION_NOTE,
    SUMMARY_HEADER,
    stance_statement,
)

logger = logging.getLogger(__name__)

BACKEND_KINDS = ("mock", "remote")

_STANCE_TOKEN_RE = re.compile(r"\(stance ([+-]?\d+)\)")
_OWN_STANCE_RE = re.compile(r"Stance value:\s*([+-]?\d+)")
_EXCHANGE_LINE_RE = re.compile(r"^- (Agent \d+): (.*)$", re.MULTILINE)
_BUDGET_RE = re.compile(r"at most (\d+) characters")

MOCK_DIGEST_ITEMS = 3  # the mock summarizer keeps the newest k exchanges


@runtime_checkable
class TextBackend(Protocol):
    name: str

    def complete(self, prompt: str, max_length: int, temperature: float) -> str:
        ...


def _round_half_away(x: float) -> int:
    return int(math.floor(x + 0.5)) if x >= 0 else int(math.ceil(x - 0.5))


def _section(prompt: str, header: str) -> str:
    """Text of one ``== ... ==`` section, up to the next section header."""
    start = prompt.find(header)
    if start == -1:
        return ""
    start += len(header)
    end = prompt.find("\n== ", start)
    return prompt[start:] if end == -1 else prompt[start:end]


def mock_backend_rule(prompt: str) -> str:
    """Deterministic reply to a reflection prompt.

    The new stance is ``round(0.7 * own + 0.3 * mean(heard stances))``
    (half away from zero), or the current stance when nothing was heard.
    A platform note pulls an extreme agent's target one step toward 0.
    Always emits well-formed BELIEF/OPINION lines.
    """
    own_match = _OWN_STANCE_RE.search(prompt)
    if own_match is None:
        raise ValueError("prompt lacks a current stance value")
    own = int(own_match.group(1))

    heard = [int(s) for s in _STANCE_TOKEN_RE.findall(_section(prompt, SECTION_HEARD))]
    if heard:
        target = _round_half_away(0.7 * own + 0.3 * (sum(heard) / len(heard)))
    else:
        target = own
    if SECTION_NOTE in prompt and abs(own) == 2 and target != 0:
        target += -1 if target > 0 else 1
    target = clamp_to_grid(target)
    return f"BELIEF: {target}\nOPINION: {stance_statement(target)}"


def mock_summary_rule(prompt: str) -> str:
    """Deterministic reply to a note-compression prompt: a digest of the
    newest exchanges, truncated to the requested budget."""
    budget_match = _BUDGET_RE.search(_section(prompt, SECTION_FORMAT))
    budget = int(budget_match.group(1)) if budget_match else 600
    lines = _EXCHANGE_LINE_RE.findall(_section(prompt, SECTION_EXCHANGES))
    digest = "; ".join(f"{who}: {text}" for who, text in lines[-MOCK_DIGEST_ITEMS:])
    return digest[:budget]


class MockBackend:
    """Offline test double; pure function of the prompt, ignores temperature."""

    name = "mock"

    def complete(self, prompt: str, max_length: int, temperature: float) -> str:
        if SUMMARY_HEADER in prompt:
            return mock_summary_rule(prompt)
        return mock_backend_rule(prompt)


class RemoteChatBackend:
    """Chat-completion client over HTTPS.

    The API key is read from the environment (never from configuration
    files). Transient transport failures and 429/5xx responses are retried
    with exponential backoff; anything else raises BackendError.
    """

    def __init__(
        self,
        base_url: str,
        model: str,
        api_key_env: str = "OPENAI_API_KEY",
        timeout: float = 30.0,
        max_retries: int = 3,
        backoff_base: float = 0.5,
        session: Optional[requests.Session] = None,
    ):
        self.base_url = base_url.rstrip("/")
        self.model = model
        self.api_key_env = api_key_env
        self.timeout = timeout
        self.max_retries = max_retries
        self.backoff_base = backoff_base
        self._session = session or requests.Session()
        self.name = f"remote:{model}"

    def _api_key(self) -> str:
        key = os.environ.get(self.api_key_env, "")
        if not key:
            raise BackendError(f"environment variable {self.api_key_env} is not set")
        return key

    def complete(self, prompt: str, max_length: int, temperature: float) -> str:
        url = f"{self.base_url}/chat/completions"
        body = {
            "model": self.model,
            "messages": [{"role": "user", "content": prompt}],
            "max_tokens": max_length,
            "temperature": temperature,
        }
        headers = {"Authorization": f"Bearer {self._api_key()}"}
        last_error = "no attempt made"
        for attempt in range(self.max_retries + 1):
            if attempt:
                time.sleep(self.backoff_base * 2 ** (attempt - 1))
            try:
                response = self._session.post(url, json=body, headers=headers, timeout=self.timeout)
            except requests.RequestException as exc:
                last_error = str(exc)
                logger.debug("request to %s failed (attempt %d): %s", url, attempt, exc)
                continue
            logger.debug(
                "request=%r response_status=%s response=%r (key redacted)",
                body,
                response.status_code,
                response.text[:2000],
            )
            if response.status_code == 429 or response.status_code >= 500:
                last_error = f"HTTP {response.status_code}"
                continue
            if response.status_code != 200:
                raise BackendError(f"HTTP {response.status_code}: {response.text[:200]}")
            try:
                return response.json()["choices"][0]["message"]["content"]
            except (KeyError, IndexError, TypeError, ValueError) as exc:
                raise BackendError(f"malformed completion response: {exc}") from exc
        raise BackendError(f"gave up after {self.max_retries + 1} attempts: {last_error}")


def make_backend(kind: str, **kwargs) -> TextBackend:
    if kind == "mock":
        return MockBackend()
    if kind == "remote":
        return RemoteChatBackend(**kwargs)
    raise BackendError(f"unknown backend kind {kind!r}")
