"""One agent turn: prompt, repair loops, validation, commit.

Three independent budgets bound the policy calls per turn:
  - up to 3 belief-verification attempts (when internal beliefs are on),
  - up to 2 format retries (bad section layout or unreadable ACTION),
  - up to 2 action retries (well-formed but illegal actions).
A turn that exhausts its budgets commits nothing; the world is unchanged
and the record says so.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..policies.base import ChatMessage, Policy, TurnContext
from ..sim.engine import apply_action, observation_for, resupply, validate_action
from ..sim.types import Action, ResourceKind, WorldState, action_from_json, action_to_json
from ..verify.report import VerificationReport, verify
from ..verify.theory import FixedTheory
from .cognitive import CognitiveConfig
from .memory import PrivateMemory, SharedMemory
from .prompts import assemble_prompt
from .response import ActionParseError, FormatError, ParsedResponse, parse_action, parse_response

VERIFY_ATTEMPTS = 3
FORMAT_RETRIES = 2
ACTION_RETRIES = 2


@dataclass
class TurnRecord:
    round: int
    role: ResourceKind
    raw_outputs: list[str] = field(default_factory=list)
    verification_reports: list[VerificationReport] = field(default_factory=list)
    action: Action | None = None
    action_feedback: list[str] = field(default_factory=list)
    committed: bool = False
    verified: bool = True
    response_text: str = ""
    conversation: list[ChatMessage] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "round": self.round,
            "role": self.role.value,
            "raw_outputs": list(self.raw_outputs),
            "verification_reports": [r.to_json() for r in self.verification_reports],
            "action": action_to_json(self.action),
            "action_feedback": list(self.action_feedback),
            "committed": self.committed,
            "verified": self.verified,
            "response_text": self.response_text,
            "conversation": [m.to_json() for m in self.conversation],
        }


@dataclass(frozen=True)
class ReplayTurn:
    """The slice of a TurnRecord that replay needs."""

    role: ResourceKind
    committed: bool
    action: Action | None

    @classmethod
    def from_json(cls, data: dict) -> "ReplayTurn":
        return cls(
            role=ResourceKind(data["role"]),
            committed=data["committed"],
            action=action_from_json(data["action"]),
        )


class _Turn:
    def __init__(self, policy: Policy, ctx: TurnContext, conversation: list[ChatMessage]):
        self.policy = policy
        self.ctx = ctx
        self.conversation = conversation
        self.raw_outputs: list[str] = []
        self.format_budget = FORMAT_RETRIES

    def call(self, feedback: str | None) -> str:
        if feedback:
            self.conversation.append(ChatMessage("user", feedback))
        out = self.policy.respond(tuple(self.conversation), self.ctx)
        self.conversation.append(ChatMessage("assistant", out))
        self.raw_outputs.append(out)
        return out

    def call_parsed(self, feedback: str | None, config: CognitiveConfig) -> ParsedResponse | None:
        """One policy call; spends format budget on malformed layouts."""
        out = self.call(feedback)
        while True:
            try:
                return parse_response(out, config)
            except FormatError as err:
                if self.format_budget == 0:
                    return None
                self.format_budget -= 1
                out = self.call(
                    f"Your reply did not follow the required format ({err}). "
                    "Answer again with exactly the required sections."
                )


def verification_loop(
    turn: _Turn, config: CognitiveConfig, theory: FixedTheory
) -> tuple[ParsedResponse | None, list[VerificationReport], bool]:
    """Query-verify-refeed loop over the INTERNAL_BELIEFS section.

    Returns the first consistent attempt, or the last attempt with
    verified=False after three failures.
    """
    reports: list[VerificationReport] = []
    parsed: ParsedResponse | None = None
    feedback: str | None = None
    for _ in range(VERIFY_ATTEMPTS):
        parsed = turn.call_parsed(feedback, config)
        if parsed is None:
            return None, reports, True  # format budget gone; nothing verifiable
        report = verify(parsed.internal_beliefs or "", theory)
        reports.append(report)
        if report.consistent:
            return parsed, reports, True
        feedback = report.feedback_text()
    return parsed, reports, False


def run_agent_turn(
    world: WorldState,
    role: ResourceKind,
    config: CognitiveConfig,
    policy: Policy,
    shared: SharedMemory,
    private: PrivateMemory,
    theory: FixedTheory,
) -> tuple[WorldState, TurnRecord]:
    world = resupply(world, role)
    obs = observation_for(world, role)
    conversation = assemble_prompt(
        role,
        config,
        obs,
        shared,
        private,
        world.topology,
        world.params.consumption_rate,
        world.params.rounds,
    )
    ctx = TurnContext(
        role=role, config=config, observation=obs, shared_window=shared.window_text(obs.round)
    )
    turn = _Turn(policy, ctx, conversation)
    record = TurnRecord(round=world.round, role=role)

    if config.ib_enabled:
        parsed, reports, verified = verification_loop(turn, config, theory)
        record.verification_reports = reports
        record.verified = verified
    else:
        parsed = turn.call_parsed(None, config)

    action_budget = ACTION_RETRIES
    while parsed is not None:
        try:
            candidate = parse_action(parsed.action_text, world.topology.districts)
        except ActionParseError as err:
            if turn.format_budget == 0:
                break
            turn.format_budget -= 1
            parsed = turn.call_parsed(
                f"Your ACTION could not be understood: {err}. "
                "State exactly one action as MOVE(dk) or SUPPLY_RESOURCE(n).",
                config,
            )
            continue
        problem = validate_action(world, role, candidate)
        if problem is None:
            world = apply_action(world, role, candidate)
            record.action = candidate
            record.committed = True
            break
        record.action_feedback.append(problem.reason.value)
        if action_budget == 0:
            break
        action_budget -= 1
        parsed = turn.call_parsed(
            f"Your action was rejected: {problem.message} Choose a different action.",
            config,
        )

    if parsed is not None:
        record.response_text = parsed.response
        shared.append(world.round, role, parsed.response)
        private.append(role, world.round, parsed.internal_beliefs, parsed.beliefs_on_others, parsed.action_text)

    record.raw_outputs = turn.raw_outputs
    record.conversation = turn.conversation
    return world, record
