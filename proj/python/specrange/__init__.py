"""Algebraic numerical ranges and spectral-constant experiments."""

from ._specrange import *  # noqa: F401,F403
from ._specrange import __version__  # noqa: F401
