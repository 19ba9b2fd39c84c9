"""Homotopy and homology invariants of finite posets through group colorings."""
from .errors import *  # noqa
from .truth import Truth
from .poset import (MonotoneMap, Poset, SimplicialComplex, Subdiagram, face_poset, from_covers,
                    mapping_cylinder, order_complex, product, wedge)
from .groups import (FgAbelianGroup, FiniteGroup, GroupPresentation, PresentedGroup,
                     abelianization, parse_group, simplify)
from .edgepath import EdgePath, is_simply_connected, pi1_presentation, van_kampen
from .colorings import (Coloring, are_equivalent, invert_coloring, is_admissible,
                        is_connected_coloring, standard_coloring)
from .coverings import (build_cover, deck_transformations, lift_path, milnor_poset,
                        universal_cover, verify_covering)
from .cellular import (cellular_homology, cellular_structure, hurewicz_condition, pi2,
                       pi2_membership, simplicial_homology, twisted_complex, wedge_pi2)
from .asphericity import (aspherical_2complex, aspherical_presentation, build_DP,
                          presentation_complex_poset)
from .boards import board, count_classes, is_valid, moves_equivalent

__version__ = "0.1.0"
