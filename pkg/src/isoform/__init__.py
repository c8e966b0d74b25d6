"""Certify equivariant formality of isotropy actions on compact symmetric spaces."""

from .catalog import Catalog, SymmetricPairEntry, enumerate_suite, instantiate, load_catalog
from .formality import FormalityReport, check_formality
from .involution import make_involution, split_torus, standard_involution
from .restricted import build_restricted, total_compartments
from .rootsys import RootSystem, build_root_system, classify_simple_roots
from .weyl import weyl_order_bfs, weyl_order_closed_form

__version__ = "0.1.0"
