"""Morphisms from the projective plane to the Grassmannian Gr(2, C^4)."""
