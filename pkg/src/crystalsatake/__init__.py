"""Crystals, the combinatorial Satake category and the crystal commutor."""
from .cartan import RootDatum, build_root_datum
from .context import Context
from .crystal import Crystal, decompose, tensor2, tensor_n

__all__ = ["Context", "Crystal", "RootDatum", "build_root_datum", "decompose", "tensor2", "tensor_n"]
