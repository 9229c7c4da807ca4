from .peaks import extract_front_peak, front_window, model_peak_samples, window_width
from .fitting import fit_power_law
from .width import front_width
from .compare import compare_curves
