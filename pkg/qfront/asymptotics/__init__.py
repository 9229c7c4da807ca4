from .models import AsymptoticModel, KappaSpec
from .kappa import kappa, kappa_spec, front_scale
from .solutions import (
    FrontSolution,
    StepElasticBessel,
    StepElasticAiry,
    StepViscous,
    GaussShortBessel,
    GaussShortAiry,
    GaussLowFreq,
    eval_step_elastic,
    eval_step_viscous,
    eval_gauss_short,
    eval_gauss_lowfreq,
)
from .factory import get_solution, evaluate_model
from .regime import regime_select
