"""Coxeter systems as labeled diagrams: word problem, twists, rigidity checks."""
from .classify import (SphericalSubset, TypeLabel, classify_component, irreducible_components,
                       is_spherical, maximal_spherical_subsets, parabolic_order, spherical_subsets)
from .diagram import (INF, CoxeterDiagram, OddGraph, diagram_isomorphic, induced, label_of,
                      odd_components, odd_graph, parse_diagram, serialize_diagram)
from .rigidity import RigidityReport, rigidity_report
from .twist import TwistResult, TwistSpec, apply_twist, longest_element, verify_twist
from .words import (EXCEEDS_CAP, GeneratorMap, braid_closure, canonical, check_homomorphism,
                    element_order, is_reflection, multiply, reduce, verify_isomorphism)

__version__ = "0.1.0"
