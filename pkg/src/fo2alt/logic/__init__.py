"""Two-variable first-order logic and unary temporal logic over words."""
from .equiv import approx_equiv
from .fo2 import (FO2SyntaxError, eval_fo2, fo2_metrics, parse_fo2)
from .metrics import DepthMetrics
from .tl import TLSyntaxError, eval_tl, parse_tl, tl_metrics
from .translate import TranslationError, translate

__all__ = [
    "DepthMetrics", "FO2SyntaxError", "TLSyntaxError", "TranslationError",
    "approx_equiv", "eval_fo2", "eval_tl", "fo2_metrics", "parse_fo2",
    "parse_tl", "tl_metrics", "translate",
]
