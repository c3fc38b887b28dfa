"""Planar straight-line dominance drawings of st-planar graphs.

A dominance drawing places every vertex so that u reaches v exactly when
x(u) <= x(v) and y(u) <= y(v).  This package builds such drawings for the
graph classes that admit them (Hamiltonian st-plane graphs, three families
of st-plane 3-trees, left-non-transitive graphs, span-2 level graphs),
generates and recognizes those classes, and re-verifies every drawing with
exact rational arithmetic.
"""

__version__ = "0.1.0"
