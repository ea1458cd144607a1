"""HTTP chat endpoints.

Two request shapes are supported: the common chat-completions JSON
convention, and the separate-system-message family one vendor uses.
Transport failures (connect errors, timeouts, 429/5xx) are retried with
exponential backoff; anything else fails the trial immediately.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass
from typing import Sequence

import httpx

from .base import (
    ChatMessage,
    MalformedProviderResponse,
    TransportHttpStatus,
    TransportTimeout,
    TurnContext,
)

_RETRYABLE_STATUS = {429, 500, 502, 503, 504}


@dataclass(frozen=True)
class EndpointConfig:
    base_url: str
    model_name: str
    credential_env: str = ""
    adapter: str = "chat_completions"  # or "messages"
    temperature: float = 0.0
    max_tokens: int = 1024
    request_timeout: float = 60.0
    max_transport_retries: int = 3
    retry_backoff_base: float = 0.5

    def credential(self) -> str:
        return os.environ.get(self.credential_env, "") if self.credential_env else ""

    def to_json(self) -> dict:
        # the credential value itself is read from the environment at call
        # time and is never serialized
        return {
            "base_url": self.base_url,
            "model_name": self.model_name,
            "credential_env": self.credential_env,
            "adapter": self.adapter,
            "temperature": self.temperature,
            "max_tokens": self.max_tokens,
            "request_timeout": self.request_timeout,
            "max_transport_retries": self.max_transport_retries,
        }


def _build_request(messages: Sequence[ChatMessage], cfg: EndpointConfig) -> tuple[str, dict, dict]:
    if cfg.adapter == "chat_completions":
        url = cfg.base_url.rstrip("/") + "/chat/completions"
        headers = {"Content-Type": "application/json"}
        key = cfg.credential()
        if key:
            headers["Authorization"] = f"Bearer {key}"
        payload = {
            "model": cfg.model_name,
            "messages": [m.to_json() for m in messages],
            "temperature": cfg.temperature,
            "max_tokens": cfg.max_tokens,
        }
        return url, headers, payload
    if cfg.adapter == "messages":
        url = cfg.base_url.rstrip("/") + "/messages"
        headers = {"Content-Type": "application/json", "anthropic-version": "2023-06-01"}
        key = cfg.credential()
        if key:
            headers["x-api-key"] = key
        system = "\n\n".join(m.content for m in messages if m.role == "system")
        payload = {
            "model": cfg.model_name,
            "max_tokens": cfg.max_tokens,
            "temperature": cfg.temperature,
            "messages": [m.to_json() for m in messages if m.role != "system"],
        }
        if system:
            payload["system"] = system
        return url, headers, payload
    raise ValueError(f"unknown adapter {cfg.adapter!r}")


def _extract_text(data: dict, cfg: EndpointConfig) -> str:
    try:
        if cfg.adapter == "chat_completions":
            return data["choices"][0]["message"]["content"]
        return data["content"][0]["text"]
    except (KeyError, IndexError, TypeError) as err:
        raise MalformedProviderResponse(f"unexpected response shape: {err!r}") from err


def complete(
    messages: Sequence[ChatMessage],
    cfg: EndpointConfig,
    transport: httpx.BaseTransport | None = None,
) -> str:
    """One blocking completion call with transport retries."""
    url, headers, payload = _build_request(messages, cfg)
    last_error: Exception | None = None
    with httpx.Client(timeout=cfg.request_timeout, transport=transport) as client:
        for attempt in range(cfg.max_transport_retries + 1):
            if attempt:
                time.sleep(cfg.retry_backoff_base * 2 ** (attempt - 1))
            try:
                response = client.post(url, headers=headers, json=payload)
            except httpx.TimeoutException as err:
                last_error = TransportTimeout(f"no response within {cfg.request_timeout}s: {err}")
                continue
            except httpx.TransportError as err:
                last_error = TransportTimeout(f"transport failure: {err}")
                continue
            if response.status_code in _RETRYABLE_STATUS:
                last_error = TransportHttpStatus(response.status_code, "retries exhausted")
                continue
            if response.status_code >= 400:
                raise TransportHttpStatus(response.status_code, response.text[:200])
            try:
                data = response.json()
            except ValueError as err:
                raise MalformedProviderResponse(f"response is not JSON: {err}") from err
            return _extract_text(data, cfg)
    raise last_error if last_error else TransportTimeout("no attempts made")


@dataclass
class LlmPolicy:
    cfg: EndpointConfig
    transport: httpx.BaseTransport | None = None

    def respond(self, messages: Sequence[ChatMessage], ctx: TurnContext) -> str:
        return complete(messages, self.cfg, self.transport)
