"""Impropriety tests for complex Gaussian vectors.

Sample impropriety coefficients, the GLRT and Roy's largest-root test with
exact and high-dimensional null calibrations, synthetic improper models and
a seeded Monte-Carlo experiment harness.
"""

__version__ = "0.1.0"

from .augmented import (  # noqa: E402
    AugmentedCovariance,
    AugmentedSample,
    GlrtStatistic,
    ImproprietySpectrum,
    ProperImproperSplit,
    RoyStatistic,
    gamma_matrix,
    glrt_statistic,
    impropriety_spectrum,
    is_group_element,
    population_spectrum,
    roy_statistic,
    sample_covariance,
    sample_spectrum,
    split_proper_improper,
)
from .hypothesis_tests import (  # noqa: E402
    NullCalibration,
    TestConfig,
    TestReport,
    calibrate,
    calibrate_threshold,
    power_estimate,
    run_test,
)
from .models import ModelSpec, PopulationTruth, generate, population_covariance, population_truth, theta_for_lambda  # noqa: E402
from .nulls import (  # noqa: E402
    BulkLaw,
    GlrtNullParams,
    RegimeParams,
    RoyNullParams,
    SpikeMap,
    bulk_cdf,
    bulk_moments,
    bulk_pdf,
    exact_glrt_moments,
    glrt_clt_params,
    glrt_null_cdf,
    glrt_null_quantile,
    roy_null_cdf,
    roy_null_quantile,
    roy_params,
    sample_wilks_null,
    spike_map,
)
from .tracy_widom import tw1_cdf, tw1_pdf, tw1_quantile  # noqa: E402
