"""Chain energies, minimal-order parametrizations, covering numbers and
Lipschitz cover diagnostics on finite metric spaces."""

from fractlip._core import *  # noqa: F401,F403
from fractlip._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
