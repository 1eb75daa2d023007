"""squarekit: squaregraphs, median graphs and triangle-free chord diagrams."""

from .chords import ChordDiagram, circle_graph, diagram_from_squaregraph, is_triangle_free, squaregraph_from_diagram
from .embedding import Coloring, TreeEmbedding, embed_in_trees, min_coloring, min_trees, tree_factor
from .errors import SquareKitError
from .generators import generate, random_squaregraph
from .genset import brute_min_genset, compatibility_stats, hull_report, inner_lines, min_generating_set, parity_form_check
from .graph import Graph, convex_hull, interval, is_median_graph, median, median_closure
from .helly import hellyfy, is_helly, max_two_compatible_circular
from .recognition import ball_is_squaregraph, boundary_cycle, curvature, is_squaregraph
from .splits import Split, SplitSystem, halfspace_system, incompatibility_graph, theta_classes

__version__ = "0.1.0"
