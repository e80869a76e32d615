"""Selects the compiled GF(p) kernels when built, else the numpy fallback."""

from . import _fallback as fallback

try:
    from . import _kernels as _impl
    NAME = "compiled"
except ImportError:  # extension not built
    _impl = fallback
    NAME = "python"

# rref products must fit in int64
MAX_MODULUS = 2**31
# saturation accumulates up to n products per entry
MAX_SATURATION_MODULUS = 2**24

rref_modp = _impl.rref_modp
saturate_modp = _impl.saturate_modp
