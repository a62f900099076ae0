"""daseinkit: a finite-dimensional workbench for contextual quantum mechanics.

Builds the poset of abelian operator contexts of a finite system, computes
inner/outer daseinisations and stage-wise operator interpretations, and
mechanically checks the commutativity, internal-spectrum, gauge and 2-group
properties those constructions are supposed to have.
"""

__version__ = "0.1.0"
