from __future__ import annotations

from parapy.framework.errors import NonDominantWeightError
from parapy.framework.fock import inner_product
from parapy.framework.scalar import ONE
from parapy.framework.signature import weyl_dim
from parapy.framework.suite import VerificationSuite
from parapy.instances.decomposers.shells import gauge_decomposition
from parapy.instances.operators.noncovariant import from_noncovariant, from_noncovariant_all


class NoncovariantSuite(VerificationSuite):
    """Images of noncovariant Green-component words: ordering signs, norms and gauge content."""
    name = "noncovariant"

    def _run(self) -> None:
        params = self.params
        single = from_noncovariant(params, [(1, 1)])
        self.check("single component has unit norm", inner_product(single, single) == ONE, states=[single])
        for index, image in enumerate(from_noncovariant_all(params, [(1, 1)])):
            self.check(f"single component on spin vacuum {index} has unit norm", inner_product(image, image) == ONE,
                       states=[image])

        if params.p >= 2:
            word = [(1, 1), (1, 2)]
            forward, backward = from_noncovariant(params, word), from_noncovariant(params, list(reversed(word)))
            self.check("different components anticommute", forward == -backward, states=[forward, backward])
        else:
            word = [(1, 1), (1, 1)]

        span, highest = gauge_decomposition(from_noncovariant_all(params, word))
        try:
            dimension = sum(weyl_dim(params.p, weight.w, pin_mode=True) for weight, _ in highest)
        except NonDominantWeightError as error:
            self.check("gauge highest weights are dominant", False, str(error), states=[v for _, v in highest])
            return
        self.check("gauge content fills the closure", dimension == len(span),
                   f"Σ dim = {dimension}, closure dimension {len(span)}", states=span)
