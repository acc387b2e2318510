"""Exact preventive-maintenance scheduling.

Finds the next inspection time and the repair plan inside its window that
minimize total discounted cost, and reports the best plan for every
candidate inspection time. The heavy lifting lives in the compiled
extension; this package re-exports its surface.
"""

from pmsched._core import *  # noqa: F401,F403

__version__ = "1.0.0"
