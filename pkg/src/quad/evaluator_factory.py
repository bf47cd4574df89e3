from .chain import ChainQuadraturePsi
from .closed_form import ClosedFormPsi
from .representation import IntegralRep
from .tensor import TensorProductPsi


def get_psi_evaluator(rep: IntegralRep, method: str = "auto"):

    if method == "auto":
        return ClosedFormPsi(rep) if rep.m == 0 else ChainQuadraturePsi(rep)

    elif method == "closed_form":
        return ClosedFormPsi(rep)

    elif method == "chain":
        return ChainQuadraturePsi(rep)

    elif method == "tensor":
        return TensorProductPsi(rep)

    else:
        raise ValueError(f"Unknown evaluation method: {method}")
