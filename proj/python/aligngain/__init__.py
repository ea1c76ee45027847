"""Optical switching and inversionless amplification of field-aligned
anisotropic molecules: orientation-averaging special functions, closed-form
scaled gain for dc/ac alignment, the defining-integral quadrature oracle,
and parameter-sweep tooling."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
