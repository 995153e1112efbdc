"""Polynomiality decision for upper triangular groups in dimension 3.

Rules, in the order the pipeline tries them:

``chevalley_shephard_todd``
    p does not divide |G| (trivial unipotent subgroup H): polynomial iff G
    is generated by pseudoreflections.
``unipotent_no_transvections``
    H abelian and free of transvections: polynomial.
``braun_sylow``
    H abelian and generated by its transvections: H is a p-group generated
    by pseudoreflections, so K[W]^H is polynomial, and H is the Sylow
    p-subgroup of G, which lifts polynomiality to G.
``transvections_not_generating``
    H abelian, contains transvections, not generated by them: non-polynomial.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from trinv.group import (
    MatrixGroup,
    is_abelian,
    pseudoreflection_subgroup,
    subgroup,
    transvections,
    unipotent_subgroup,
)
from trinv.invariants import DEFAULT_FALSIFY_DEGREE, FalsifierReport, HsopCertificate, hilbert_falsify

CST = "chevalley_shephard_todd"
NO_TRANSVECTIONS = "unipotent_no_transvections"
BRAUN = "braun_sylow"
NOT_GENERATING = "transvections_not_generating"
OUTSIDE = "outside_hypotheses"


class Outcome(enum.Enum):
    POLYNOMIAL = "Polynomial"
    NON_POLYNOMIAL = "NonPolynomial"
    UNKNOWN = "Unknown"


@dataclass
class Verdict:
    outcome: Outcome
    rule: str
    preconditions: dict = field(default_factory=dict)
    reason: str = ""
    falsifier: FalsifierReport | None = None
    certificate: HsopCertificate | None = None

    @property
    def cross_check_agrees(self) -> bool | None:
        """Whether attached falsifier evidence is consistent with the outcome."""
        if self.falsifier is None:
            return None
        if self.outcome is Outcome.NON_POLYNOMIAL:
            return self.falsifier.certified_nonpolynomial
        if self.outcome is Outcome.POLYNOMIAL:
            return not self.falsifier.certified_nonpolynomial
        return True


def classify_polynomiality(
    g: MatrixGroup, cross_check: bool = False, falsify_degree: int = DEFAULT_FALSIFY_DEGREE
) -> Verdict:
    pre: dict = {"p": g.p, "p_odd": g.p % 2 == 1, "group_order": g.order}
    pre["upper_triangular"] = g.is_upper_triangular()
    verdict = _decide(g, pre)
    if cross_check:
        verdict.falsifier = hilbert_falsify(g, falsify_degree)
    return verdict


def _decide(g: MatrixGroup, pre: dict) -> Verdict:
    if not pre["upper_triangular"]:
        return Verdict(Outcome.UNKNOWN, OUTSIDE, pre, "group is not upper triangular")
    h = unipotent_subgroup(g)
    pre["H_order"] = h.order
    if h.order == 1:
        generated = pseudoreflection_subgroup(g).same_elements(g)
        pre["generated_by_pseudoreflections"] = generated
        if generated:
            return Verdict(Outcome.POLYNOMIAL, CST, pre, "nonmodular and generated by pseudoreflections")
        return Verdict(Outcome.NON_POLYNOMIAL, CST, pre, "not generated by pseudoreflections")
    pre["H_abelian"] = is_abelian(h)
    if not pre["H_abelian"]:
        return Verdict(Outcome.UNKNOWN, OUTSIDE, pre, "unipotent subgroup is not abelian")
    t = transvections(h)
    pre["transvection_count"] = len(t)
    if not t:
        return Verdict(Outcome.POLYNOMIAL, NO_TRANSVECTIONS, pre, "unipotent subgroup has no transvections")
    ht = subgroup(h, t)
    pre["transvection_subgroup_order"] = ht.order
    if ht.order == h.order:
        return Verdict(Outcome.POLYNOMIAL, BRAUN, pre, "unipotent subgroup generated by transvections")
    return Verdict(
        Outcome.NON_POLYNOMIAL, NOT_GENERATING, pre,
        "unipotent subgroup contains transvections but is not generated by them",
    )
