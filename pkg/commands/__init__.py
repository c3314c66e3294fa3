# commands/__init__.py
from .router import CommandRouter, CliArgumentParser

router = CommandRouter()

from . import encode, evaluate, bitflip, cv  # noqa: E402
from . import synth, raster, infer, entropy  # noqa: E402

__all__ = ["router", "CommandRouter", "CliArgumentParser"]
