"""Subshift, Turing-machine and transfer-matrix toolkit for freezing lattice models.

The package is organised by layer:

* ``patterns``  - lattice patterns, admissibility, languages, reconstruction;
* ``machines``  - deterministic Turing machines, diagrams and 3x2 tiles;
* ``tower``     - the hierarchical word families, exact schedule and the
  forbidden-word enumerator with its brute-force oracle;
* ``planar``    - vertical duplication, zero-symbol recoloring lifts and
  occupancy counting on 2D mosaics;
* ``thermo``    - partition entropy, transfer-matrix pressure, exact torus
  Gibbs sums and the freezing inequality checks;
* ``cli``       - the ``coldshift`` command line.
"""

from . import machines, patterns, planar, thermo, tower

__all__ = ["machines", "patterns", "planar", "thermo", "tower"]
__version__ = "0.1.0"
