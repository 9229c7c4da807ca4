from qfront.asymptotics.models import AsymptoticModel
from qfront.asymptotics.solutions import (
    FrontSolution,
    GaussLowFreq,
    GaussShortAiry,
    GaussShortBessel,
    StepElasticAiry,
    StepElasticBessel,
    StepViscous,
)
from qfront.enums import ModelFamily, PhiEvalMethod, Quantity

SOLUTION_MAP = {
    ModelFamily.STEP_ELASTIC: StepElasticBessel,
    ModelFamily.STEP_ELASTIC_AIRY: StepElasticAiry,
    ModelFamily.STEP_VISCOUS: StepViscous,
    ModelFamily.GAUSS_SHORT: GaussShortBessel,
    ModelFamily.GAUSS_SHORT_AIRY: GaussShortAiry,
    ModelFamily.GAUSS_LOWFREQ: GaussLowFreq,
}


def get_solution(model: AsymptoticModel, phi_method: PhiEvalMethod = PhiEvalMethod.CLOSED_FORM) -> FrontSolution:
    '''Factory returning the solution strategy for the model's family.'''
    return SOLUTION_MAP[model.family](model, phi_method)


def evaluate_model(model: AsymptoticModel, quantity: Quantity, n_or_r, t):
    return get_solution(model).evaluate(quantity, n_or_r, t)
