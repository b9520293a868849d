# Module topologie: complexes simpliciaux, M(G), homologie réduite
from .complex import SimplicialComplex, matching_complex, link
from .homology import reduced_betti_numbers, is_cm_homological, is_buchsbaum_homological

__all__ = [
    'SimplicialComplex', 'matching_complex', 'link',
    'reduced_betti_numbers', 'is_cm_homological', 'is_buchsbaum_homological',
]
