# workers/__init__.py
from .evaluation_worker import EvaluationWorker

__all__ = ["EvaluationWorker"]
