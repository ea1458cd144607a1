from .cognitive import ALL_CONFIGS, CognitiveConfig
from .memory import PrivateMemory, ROLE_DISPLAY, SharedMemory
from .prompts import assemble_prompt, required_sections, state_summary, system_prompt
from .response import ActionParseError, FormatError, ParsedResponse, parse_action, parse_response
from .transcript import load_transcript_json, replay_check
from .trial import RoundLog, Transcript, TrialAbort, run_trial
from .turn import TurnRecord, run_agent_turn, verification_loop

__all__ = [
    "ALL_CONFIGS",
    "ActionParseError",
    "CognitiveConfig",
    "FormatError",
    "ParsedResponse",
    "PrivateMemory",
    "ROLE_DISPLAY",
    "RoundLog",
    "SharedMemory",
    "Transcript",
    "TrialAbort",
    "TurnRecord",
    "assemble_prompt",
    "load_transcript_json",
    "parse_action",
    "parse_response",
    "replay_check",
    "required_sections",
    "run_agent_turn",
    "run_trial",
    "state_summary",
    "system_prompt",
    "verification_loop",
]
