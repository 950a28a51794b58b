"""Quasitriangular elements ℛ ∈ H⊗H for finite-dimensional hosts."""
from typing import Dict, Iterator, Tuple

from src.errors import InfiniteHost
from src.freealg.ncpoly import NCPoly
from src.freealg.terms import Terms, Word, add_into
from src.hopf.hopf_data import HopfData
from src.hopf.tensor import TensorElem
from src.scalar.field import Scalar


class QuasitriangularElement:
    """ℛ = ℛ⁽¹⁾⊗ℛ⁽²⁾ on a finite-dimensional Hopf algebra."""

    def __init__(self, host: HopfData, element: TensorElem, name: str = "R"):
        if host.basis() is None:
            raise InfiniteHost(f"{host.name} is not finite-dimensional")
        self.host = host
        self.element = element
        self.name = name

    def legs(self) -> Iterator[Tuple[Word, Word, Scalar]]:
        for (r1, r2), coeff in self.element:
            yield r1, r2, coeff

    def _combine(self, left_first: bool) -> NCPoly:
        pres = self.host.pres
        result: Terms = {}
        for r1, r2, coeff in self.legs():
            s2 = self.host.antipode_word(r2)
            if left_first:
                product = pres.multiply(pres.reduce_word(r1), s2)
            else:
                product = pres.multiply(s2, {r1: pres.ctx.one})
            add_into(result, product, coeff)
        return NCPoly(pres, result, reduced=True)

    def u_element(self) -> NCPoly:
        """u = (Sℛ⁽²⁾)ℛ⁽¹⁾."""
        return self._combine(left_first=False)

    def v_element(self) -> NCPoly:
        """v = ℛ⁽¹⁾Sℛ⁽²⁾."""
        return self._combine(left_first=True)

    @classmethod
    def trivial(cls, host: HopfData) -> "QuasitriangularElement":
        return cls(host, TensorElem.unit((host.pres, host.pres)), name="trivial")

    def as_table(self) -> Dict[Tuple[Word, Word], Scalar]:
        return dict(self.element.terms)
