"""Parsing of policy replies: the sectioned layout and the ACTION line."""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..sim.types import Action, DEFAULT_DISTRICTS, Move, Supply
from .cognitive import CognitiveConfig
from .prompts import required_sections


@dataclass(frozen=True)
class ParsedResponse:
    internal_beliefs: str | None
    beliefs_on_others: str | None
    response: str
    action_text: str


class FormatError(Exception):
    def __init__(self, missing: list[str], duplicated: list[str]):
        bits = []
        if missing:
            bits.append(f"missing sections: {', '.join(missing)}")
        if duplicated:
            bits.append(f"duplicated sections: {', '.join(duplicated)}")
        super().__init__("; ".join(bits))
        self.missing = missing
        self.duplicated = duplicated


_HEADER_RE = re.compile(
    r"^(INTERNAL_BELIEFS|BELIEFS_ON_OTHERS|RESPONSE|ACTION):[ \t]*", re.MULTILINE
)


def parse_response(text: str, config: CognitiveConfig) -> ParsedResponse:
    """Split a reply on the section headers; raises FormatError.

    Headers are case-sensitive and must start a line. Prose before the
    first header is ignored; sections a config does not ask for are
    dropped rather than rejected.
    """
    matches = list(_HEADER_RE.finditer(text))
    seen: dict[str, str] = {}
    duplicated: list[str] = []
    for i, match in enumerate(matches):
        name = match.group(1)
        end = matches[i + 1].start() if i + 1 < len(matches) else len(text)
        if name in seen:
            if name not in duplicated:
                duplicated.append(name)
            continue
        seen[name] = text[match.end() : end].strip()
    required = required_sections(config)
    missing = [name for name in required if name not in seen]
    if missing or duplicated:
        raise FormatError(missing=missing, duplicated=duplicated)
    return ParsedResponse(
        internal_beliefs=seen.get("INTERNAL_BELIEFS") if config.ib_enabled else None,
        beliefs_on_others=seen.get("BELIEFS_ON_OTHERS") if config.tom_enabled else None,
        response=seen["RESPONSE"],
        action_text=seen["ACTION"],
    )


class ActionParseError(Exception):
    pass


_ACTION_RE = re.compile(r"\b(MOVE|SUPPLY_RESOURCE)\s*\(\s*([A-Za-z0-9_-]+)\s*\)", re.IGNORECASE)


def parse_action(action_text: str, districts: tuple[str, ...] = DEFAULT_DISTRICTS) -> Action:
    """First MOVE(dk) or SUPPLY_RESOURCE(n) in the section wins."""
    match = _ACTION_RE.search(action_text)
    if match is None:
        raise ActionParseError(
            "no action found; state exactly one of MOVE(dk) or SUPPLY_RESOURCE(n)"
        )
    keyword = match.group(1).upper()
    arg = match.group(2)
    if keyword == "MOVE":
        district = arg.lower()
        if district not in districts:
            raise ActionParseError(f"unknown district {arg!r}; districts are {', '.join(districts)}")
        return Move(district)
    if not re.fullmatch(r"-?\d+", arg):
        raise ActionParseError(f"SUPPLY_RESOURCE needs an integer amount, got {arg!r}")
    return Supply(int(arg))
