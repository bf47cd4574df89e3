from src.algebra import WeylElement

from .factors import AutomorphismWord, apply_word


def b0(P: WeylElement) -> WeylElement:
    """
    The anti-isomorphism x -> Dz, D -> z. On normal-ordered monomials
    b0(x^a D^b) = z^b Dz^a, which is again normal-ordered, so the map only
    swaps the exponent pair.
    """
    return WeylElement({(b, a): c for (a, b), c in P.items()})


def b0_inverse(P: WeylElement) -> WeylElement:
    """z^b Dz^a -> x^a D^b."""
    return WeylElement({(b, a): c for (a, b), c in P.items()})


def intertwine(w: AutomorphismWord, P: WeylElement) -> WeylElement:
    """b(P) = b0(sigma(P)), the (z, Dz) operator with P psi = b(P) psi."""
    return b0(apply_word(w, P))
