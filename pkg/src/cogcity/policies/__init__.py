from .base import (
    ChatMessage,
    FingerprintMismatch,
    MalformedProviderResponse,
    Policy,
    PolicyError,
    TransportHttpStatus,
    TransportTimeout,
    TurnContext,
)
from .cassette import Cassette, RecordingPolicy, ReplayPolicy, cassette_roundtrip, fingerprint_messages
from .heuristic import HeuristicPolicy, heuristic_respond
from .llm import EndpointConfig, LlmPolicy, complete

__all__ = [
    "Cassette",
    "ChatMessage",
    "EndpointConfig",
    "FingerprintMismatch",
    "HeuristicPolicy",
    "LlmPolicy",
    "MalformedProviderResponse",
    "Policy",
    "PolicyError",
    "RecordingPolicy",
    "ReplayPolicy",
    "TransportHttpStatus",
    "TransportTimeout",
    "TurnContext",
    "cassette_roundtrip",
    "complete",
    "fingerprint_messages",
    "heuristic_respond",
]
