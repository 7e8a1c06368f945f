"""Generalized order statistics on distributive lattices and the maps they leave invariant."""

from latticemed.coords import CoordTuple
from latticemed.invariance import MapUnderTest, is_symmetric_map, is_toi, make_toi_map
from latticemed.lattice import EXHAUSTIVE, FiniteLattice, PointwiseLattice, Sampled
from latticemed.orderization import m_k, m_k_pointwise, total_orderization, total_orderization_pointwise

__version__ = "0.1.0"
