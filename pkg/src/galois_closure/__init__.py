"""Finite closure spaces, quasiorders and Galois connections between them."""

from ._backend import BACKEND
from .bits import Subset
from .connections import *  # noqa: F401,F403
from .enumeration import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .spaces import *  # noqa: F401,F403

__version__ = "0.1.0"
