"""Figure rendering for hofsum ratio tables, coupled only through the CSV."""

from .ratios import RATIO_HEADER, RatioTable, RatioTableError, load_ratio_table, trend
from .render import build_figure, render

__version__ = "0.1.0"

__all__ = [
    "RATIO_HEADER",
    "RatioTable",
    "RatioTableError",
    "build_figure",
    "load_ratio_table",
    "render",
    "trend",
]
