"""Exact limit homology and Cech cohomology for tower-presented compacta.

A compact metrizable space enters as an inverse sequence of finite
simplicial complexes with simplicial bonds.  Everything downstream is
integer linear algebra: homology of the levels, limit and derived
limit of the resulting group towers, and short exact sequence reports
that assemble the two into the homology and cohomology of the space
the tower presents.
"""

__version__ = "0.1.0"
