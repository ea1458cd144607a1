"""cogcity: a turn-based city resource-allocation world with cognitive agents.

Three specialist agents (food, medicine, security) keep four districts
alive by ferrying supplies from a depot. Agents can carry theory-of-mind
and internal-belief reasoning sections; internal beliefs are written in a
small logic language and checked for consistency before actions commit.
"""

__version__ = "0.1.0"
