from __future__ import annotations

from enum import Enum


class ParameterKind(str, Enum):
    # private-neighbour maximisation
    SPN = "SPN"
    IPN = "IPN"
    EPN = "EPN"
    ESPN = "ESPN"
    EIPN = "EIPN"
    ISPN = "ISPN"
    EISPN = "EISPN"
    # irredundance-type set classes
    ALPHA = "ALPHA"
    ALPHA_STAR = "ALPHA_STAR"
    OIR = "OIR"
    IR = "IR"
    OOIR = "OOIR"
    ALPHA1 = "ALPHA1"
    COIR = "COIR"
    # domination family
    GAMMA = "GAMMA"
    UPPER_GAMMA = "UPPER_GAMMA"
    GAMMA_P = "GAMMA_P"
    UPPER_GAMMA_P = "UPPER_GAMMA_P"
    GAMMA_TP = "GAMMA_TP"
    UPPER_GAMMA_TP = "UPPER_GAMMA_TP"
    GAMMA_PVT = "GAMMA_PVT"
    UPPER_GAMMA_PVT = "UPPER_GAMMA_PVT"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> ParameterKind:
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"unknown parameter kind {text!r}") from None

    @property
    def is_pn(self) -> bool:
        return self in PN_MASKS

    @property
    def is_set_class(self) -> bool:
        return self in SET_CLASS_KINDS

    @property
    def is_domination(self) -> bool:
        return self in DOMINATION_KINDS

    @property
    def mask(self) -> tuple[bool, bool, bool]:
        """Which of (self, internal, external) counts the kind sums."""
        try:
            return PN_MASKS[self]
        except KeyError:
            raise ValueError(f"{self} is not a private-neighbour kind") from None

    @property
    def minimizes(self) -> bool:
        return self in (ParameterKind.GAMMA, ParameterKind.GAMMA_P,
                        ParameterKind.GAMMA_TP, ParameterKind.GAMMA_PVT)


K = ParameterKind

PN_MASKS: dict[ParameterKind, tuple[bool, bool, bool]] = {
    K.SPN: (True, False, False),
    K.IPN: (False, True, False),
    K.EPN: (False, False, True),
    K.ESPN: (True, False, True),
    K.EIPN: (False, True, True),
    K.ISPN: (True, True, False),
    K.EISPN: (True, True, True),
}

PN_KINDS = tuple(PN_MASKS)
SET_CLASS_KINDS = (K.ALPHA, K.ALPHA_STAR, K.OIR, K.IR, K.OOIR, K.ALPHA1, K.COIR)
DOMINATION_KINDS = (K.GAMMA, K.UPPER_GAMMA, K.GAMMA_P, K.UPPER_GAMMA_P,
                    K.GAMMA_TP, K.UPPER_GAMMA_TP, K.GAMMA_PVT, K.UPPER_GAMMA_PVT)

# set class whose sets realise each PN kind after reduction
REDUCTION_TARGET = {
    K.EPN: K.OIR,
    K.ESPN: K.IR,
    K.EIPN: K.OOIR,
    K.ISPN: K.ALPHA1,
    K.EISPN: K.COIR,
}

# the lower-bounding set class for each PN kind
PN_LOWER_CLASS = {
    K.SPN: K.ALPHA,
    K.IPN: K.ALPHA_STAR,
    **REDUCTION_TARGET,
}


def parse_kinds(text: str) -> list[ParameterKind]:
    return [ParameterKind.parse(t) for t in text.split(",") if t.strip()]
