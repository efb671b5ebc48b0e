"""
The fourteen-element monoid of closure/complement operations: word
model, composition table, subsemigroup census, quotients, and
cross-validation on finite topological spaces.

The word model lives at the top level; `algebra` has the generic
finite-semigroup machinery, `spaces` the topological side, and `cli`
the command-line front end.
"""

from .monoid import (RULES, WORDS, Monoid, build_monoid, reduce_word,
                     the_monoid, verify_golden_table)
from .census import CensusReport, census, named_semigroup
from .checks import verify_all

__version__ = "0.1.0"

__all__ = [
    "RULES", "WORDS", "Monoid", "build_monoid", "reduce_word",
    "the_monoid", "verify_golden_table",
    "CensusReport", "census", "named_semigroup", "verify_all",
    "__version__",
]
