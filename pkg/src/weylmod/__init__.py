"""Exact root-system computations deciding when a Weyl module stays irreducible
over every field, with a Jantzen sum-formula oracle and reduced Killing form
discriminants."""
from .characters import VirtualCharacter, euler_characteristic, freudenthal, weyl_dim
from .classify import Verdict, classify_mt, classify_qm, qm_bruteforce
from .errors import ClassificationError, InvalidInputError, ResourceLimitError, WeylmodError
from .jantzen import (globally_irreducible_oracle, irreducible_at, jantzen_sum, sl2_dim_L,
                      sl2_irreducible)
from .killing import classify_killing, det_A, lattice_of
from .rootsys import RootSystem, RootSystemType, build
from .weights import dominance_le, minuscule_below, minuscule_weights, orbit_summary, weyl_orbit

__all__ = [
    "ClassificationError", "InvalidInputError", "ResourceLimitError", "RootSystem",
    "RootSystemType", "Verdict", "VirtualCharacter", "WeylmodError", "build", "classify_killing",
    "classify_mt", "classify_qm", "det_A", "dominance_le", "euler_characteristic", "freudenthal",
    "globally_irreducible_oracle", "irreducible_at", "jantzen_sum", "lattice_of",
    "minuscule_below", "minuscule_weights", "orbit_summary", "qm_bruteforce", "sl2_dim_L",
    "sl2_irreducible", "weyl_dim", "weyl_orbit",
]
