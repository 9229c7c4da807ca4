from .bessel import bessel_j, bessel_j_prime, bessel_j_derivs
from .airy import airy
from .modbessel import modbessel_i_scaled
from .phi import phi
