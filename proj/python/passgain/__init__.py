"""Array gain of pinching-antenna systems on a single dielectric waveguide."""

from ._core import *  # noqa: F401,F403
