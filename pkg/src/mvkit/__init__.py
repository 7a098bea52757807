"""Toolkit for MV-algebras and unital lattice-ordered groups."""

from . import dsl, groups, lgroup, mvcore, represent, spectra
from .errors import *  # noqa: F401,F403
from .groups import (Direct, Integers, Lex, Rationals, nonstandard_reals,
                     trivial_group)
from .mvcore import (AxiomReport, Exhaustive, FiniteChain, FiniteProduct,
                     FunctionAlgebra, Gamma, MVAlgebra, QuasiConstant, Sampled,
                     UnitIntervalQ, chang, check_axioms, eval_term, komori,
                     lukasiewicz, make_algebra)
from .spectra import (classify, enumerate_ideals, ideals, is_infinitesimal,
                      max_ideals, order, quotient, radical, spec)
from .represent import (chang_embedding, d_functor, g_functor, group_qc_representation,
                        local_representation, perfect_representation,
                        quasi_constant_algebra, roundtrip_check, separating_term)

__version__ = "0.1.0"
