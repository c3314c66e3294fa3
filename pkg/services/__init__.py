# services/__init__.py
from .encoding_service import EncodingService
from .infotheory_service import InfoTheoryService
from .cssr_service import CssrService
from .esn_service import EsnService
from .synth_service import SynthService
from .evaluation_service import EvaluationService

__all__ = [
    "EncodingService",
    "InfoTheoryService",
    "CssrService",
    "EsnService",
    "SynthService",
    "EvaluationService",
]
