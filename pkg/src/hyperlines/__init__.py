"""Geometry of the space of oriented geodesics of hyperbolic space.

Modules: minkowski (ambient algebra), hyperbolic (H^{n+1}), linespace (the
geodesic space and its invariant metrics), curves (standard presentations
and causal type), boundary (pairs of ideal points), almoststruct (complex
structures), verify and cli.
"""
__version__ = "0.1.0"
