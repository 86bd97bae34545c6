"""Finite digital images: Lefschetz numbers, homology, homotopy, spectra.

The heavy lifting happens in the native extension ``lefdt._lefdt``; this
package re-exports its entire surface.
"""

from ._lefdt import *  # noqa: F401,F403
from ._lefdt import fixtures  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
