"""Exact computations on Paley graphs P(q^2) of square order."""

from .census import arc_normalizer, canonical_form, classify, enumerate_target_cliques
from .constructions import all_constructions, construct_c1, construct_c2, construct_c3, construct_c4, target_size
from .gf_base import GF, make_base_field
from .gf_ext import ExtElement, ExtField, make_extension
from .moebius import phi, psi, verify_theorem_phi, verify_theorem_psi
from .paley import Kind, PaleyGraph, paley_graph

__version__ = "0.1.0"
