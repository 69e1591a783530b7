"""Exact twists and quantizations of Hamiltonian (Cartan type H) Lie algebras."""

from .indices import MultiIndex
from .lie_h import (FULL_H, H_PLUS, LieContext, LieElement, TwistPair, bracket,
                    full_context, generic_pair, horizontal_pair, plus_context,
                    r_matrix, sigma, vertical_pair)
from .modular import (DividedElement, ModularContext, ModularLieElement,
                      divided_multiply, modular_bracket, poisson_divided,
                      reduce_to_modular)
from .scalars import (QQ, ContextError, Mod, PrimeField, Rat, binomial,
                      gbinomial, multi_binomial, multi_factorial, reduce_mod_p)

__version__ = "0.1.0"
