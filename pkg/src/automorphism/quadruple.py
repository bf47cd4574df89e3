from dataclasses import dataclass
from typing import Dict

from src.algebra import (
    X_VARIABLES,
    Z_VARIABLES,
    UniPoly,
    WeylElement,
    commutator,
    compose_poly,
)

from .anti_isomorphism import b0
from .factors import AutomorphismWord, apply_word, inverse_word, word_images


@dataclass(frozen=True)
class BispectralQuadruple:
    """
    L = b^{-1}(z) and D = b^{-1}(Dz) act in x; Lambda = b(x) and
    Delta = b(Dx) act in z.
    """
    L: WeylElement
    Lambda: WeylElement
    D: WeylElement
    Delta: WeylElement

    def canonical_pair_holds(self) -> bool:
        one = WeylElement.scalar(1)
        return commutator(self.L, self.D) == one and commutator(self.Lambda, self.Delta) == one

    def as_text(self) -> Dict[str, str]:
        return {
            "L": self.L.to_string(X_VARIABLES),
            "Lambda": self.Lambda.to_string(Z_VARIABLES),
            "D": self.D.to_string(X_VARIABLES),
            "Delta": self.Delta.to_string(Z_VARIABLES),
        }


def bispectral_quadruple(w: AutomorphismWord) -> BispectralQuadruple:
    inv_x, inv_d = word_images(inverse_word(w))
    sigma_x, sigma_d = word_images(w)
    return BispectralQuadruple(L=inv_d, Lambda=b0(sigma_x), D=inv_x, Delta=b0(sigma_d))


def transpose_quadruple(Q: BispectralQuadruple) -> BispectralQuadruple:
    """
    Quadruple of psi(z, x): the roles of the two variables are exchanged, so
    L <-> Lambda and D <-> Delta with x <-> z renamed.
    """
    return BispectralQuadruple(L=Q.Lambda, Lambda=Q.L, D=Q.Delta, Delta=Q.D)


def is_self_dual(w: AutomorphismWord) -> bool:
    """True when L(x, Dx) and Lambda(z, Dz) are the same operator up to renaming."""
    Q = bispectral_quadruple(w)
    return Q.L == Q.Lambda


def closed_form_pair(p: UniPoly, q: UniPoly) -> BispectralQuadruple:
    """
    The m = 1 operators written directly:
      L = D + p'(x - q'(D)),      Lambda = Dz + q'(z - p'(Dz)),
      D = x - q'(D),              Delta = z - p'(Dz).
    """
    x, d = WeylElement.x(), WeylElement.d()
    dp, dq = p.derivative(), q.derivative()
    shifted_x = x - compose_poly(dq, d)
    shifted_z = x - compose_poly(dp, d)  # in (z, Dz) coordinates: z - p'(Dz)
    return BispectralQuadruple(
        L=d + compose_poly(dp, shifted_x),
        Lambda=d + compose_poly(dq, shifted_z),
        D=shifted_x,
        Delta=shifted_z,
    )


def airy_normal_form(p: UniPoly, q: UniPoly) -> BispectralQuadruple:
    """
    Operators for p(t) = a t^2 + b t (+ c):
      L = D - 2a q'(D) + 2a x + b,    Lambda = Dz + q'(z - 2a Dz - b).
    """
    if p.degree != 2:
        raise ValueError(f"Airy normal form needs deg p = 2, got {p.degree}")
    a, b = p.coefficient(2), p.coefficient(1)
    x, d = WeylElement.x(), WeylElement.d()
    dq = q.derivative()
    delta = x - d * (a * 2) - b
    return BispectralQuadruple(
        L=d - compose_poly(dq, d) * (a * 2) + x * (a * 2) + b,
        Lambda=d + compose_poly(dq, delta),
        D=x - compose_poly(dq, d),
        Delta=delta,
    )


def recursion_step(previous: BispectralQuadruple, p: UniPoly, q: UniPoly) -> BispectralQuadruple:
    """
    Extend the quadruple of sigma_{m-1} by one more pair (p, q):
      Delta_m = Delta_{m-1} - p'(Lambda_{m-1}),
      Lambda_m = q'(Delta_m) + Lambda_{m-1},
      L_m, D_m = images of L_{m-1}, D_{m-1} under sigma_m^{-1}.
    """
    step = AutomorphismWord.from_pairs([(p, q)])
    inv = inverse_word(step)
    delta = previous.Delta - compose_poly(p.derivative(), previous.Lambda)
    lam = compose_poly(q.derivative(), delta) + previous.Lambda
    return BispectralQuadruple(
        L=apply_word(inv, previous.L),
        Lambda=lam,
        D=apply_word(inv, previous.D),
        Delta=delta,
    )


def identity_quadruple() -> BispectralQuadruple:
    x, d = WeylElement.x(), WeylElement.d()
    return BispectralQuadruple(L=d, Lambda=b0(x), D=x, Delta=b0(d))


