"""
orbitlab: boundary orbits of K_C-orbits on flag manifolds of Hermitian real forms.

The exact layer (orbitlab.algebra) works with roots, signed permutations and
orbit descriptors in rational arithmetic. The numerical layer (orbitlab.sp2)
reproduces the Sp(2,R) example with explicit 4x4 matrices.
"""

__version__ = "1.0.0"
