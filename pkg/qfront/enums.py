from enum import Enum


class Quantity(Enum):
    DISPLACEMENT = "disp"
    VELOCITY = "vel"
    ACCELERATION = "acc"


class LoadKind(Enum):
    STEP = "step"
    GAUSS = "gauss"


class Form(Enum):
    BESSEL = "bessel"
    AIRY = "airy"


class PhiEvalMethod(Enum):
    CLOSED_FORM = "closed-form"
    QUADRATURE = "quadrature"


class ModelFamily(Enum):
    STEP_ELASTIC = "step-elastic"            # Bessel form
    STEP_ELASTIC_AIRY = "step-elastic-airy"
    STEP_VISCOUS = "step-viscous"
    GAUSS_SHORT = "gauss-short"              # Bessel form
    GAUSS_SHORT_AIRY = "gauss-short-airy"
    GAUSS_LOWFREQ = "gauss-lowfreq"
