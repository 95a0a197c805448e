"""Presentation calculus for the reversing operation on finite-support functions."""
from ._kernels import BACKEND
from .funcset import FunctionSeq, FunctionSet, bump, from_sequence, reverse, rho_set, seq_plus
from .presentation import ExplicitBenign, Presentation, Relation, SubgroupSpec
from .words import GenSym, Word, conjugate, invert, multiply, parse_word, reduce

__version__ = "0.1.0"
