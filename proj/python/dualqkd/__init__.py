"""Secret key rates for single- and dual-detector QKD receivers."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, ConfigError, DomainError  # noqa: F401
