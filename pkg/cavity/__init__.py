"""两原子双光子 Tavis-Cummings 模型的纠缠动力学"""
from .exceptions import (
    CavityError, ParameterError, NormalizationError, BasisError,
    DensityMatrixError, SeriesError, ConfigError, OutputError, ValidationFailure,
)
from .kernels import FockPair, ModelParams, ScalarKernels, MiddleTermReading
from .dynamics import AtomicState, Family, BlockBasis, WStateSpec, AmplitudeVector, evolve
from .entanglement import (
    AtomicDensityMatrix, ConcurrenceSeries, EsdReport,
    reduced_density, concurrence_xstate, concurrence_wootters, scan_esd,
)
from .oracle import BlockHamiltonian, build_hamiltonian, oracle_u, validate_analytic

__version__ = '0.1'

__all__ = [
    'CavityError', 'ParameterError', 'NormalizationError', 'BasisError',
    'DensityMatrixError', 'SeriesError', 'ConfigError', 'OutputError', 'ValidationFailure',
    'FockPair', 'ModelParams', 'ScalarKernels', 'MiddleTermReading',
    'AtomicState', 'Family', 'BlockBasis', 'WStateSpec', 'AmplitudeVector', 'evolve',
    'AtomicDensityMatrix', 'ConcurrenceSeries', 'EsdReport',
    'reduced_density', 'concurrence_xstate', 'concurrence_wootters', 'scan_esd',
    'BlockHamiltonian', 'build_hamiltonian', 'oracle_u', 'validate_analytic',
]
