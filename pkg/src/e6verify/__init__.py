"""Exact verification of finite group-theoretic facts about cubic surfaces
without points and del Pezzo surfaces of degree 6.

Submodules:
    lattice  - Picard lattices Z^{1,n}, lines, roots, reflections, fixed ranks
    perm     - small permutation groups
    weyl     - W(E6) on the 27 lines, Carter types of order-3 elements
    cubic    - the diagonal cubic with its 27 explicit lines
    ag23     - the affine plane over F_3 and GA_2(F_3)
    dp6      - the hexagon of a degree-6 del Pezzo surface
    report   - certificates and graph exports
    cli      - command line entry point
"""

__version__ = "0.1.0"
