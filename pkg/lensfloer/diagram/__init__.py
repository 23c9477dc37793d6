"""Genus-one doubly pointed Heegaard diagrams of knots in lens spaces.

Diagrams are immutable values. ``validate`` builds the cell structure that
everything else works on; the constructors always return diagrams that
validate.

"""

from .models import (UP, DOWN, ArcKind, Arc, Crossing, CrossingSeq,
                     Basepoint, Diagram)
from .cells import ABOVE, BELOW, Dart, CellStructure, validate, place
from .topology import (ambient, homology_class, alpha_intersection,
                       beta_intersection)
from .construct import (FingerSite, simple_knot, t_l, t_r, finger_sites,
                        finger_move, mirror, reverse, twist, straight_like,
                        normalize_params)
from .reduction import reduce, empty_bigon_faces
from .textformat import loads, dumps, parse_diagram, save_diagram
from .log import logger
