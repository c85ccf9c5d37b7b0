from .compare import compare
from .figure import figure
from .selftest import selftest
from .solve import solve

__all__ = ["compare", "figure", "selftest", "solve"]
