"""freezelab: Monte Carlo and exact-formula laboratory for log-correlated
circular landscapes (unitary-ensemble characteristic polynomials, truncated
1/f Fourier fields) and interval statistics of the Riemann zeta function on
the critical line.

Modules
-------
specialfn     scalar special functions (log-gamma, Barnes G, Bessel K)
cuepoly       unitary-ensemble sampling and the log-polynomial landscape
fourierfield  truncated 1/f Gaussian surrogate landscape
thermo        partition functions, freezing curves, moment oracles
extremes      limiting law of the maximum and recentring tools
zetaline      Riemann-Siegel evaluation and interval experiments
runner / io / cli   deterministic orchestration and output
"""

__version__ = "0.1.0"

from .rng import ALGORITHM_ID, child_stream  # noqa: F401
