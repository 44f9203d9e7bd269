from typing import Dict, List
from dataclasses import dataclass, field
import json

from dataclasses_json import dataclass_json
from dataclasses_json.core import _asdict, Json

from ladderwood.helpers.log import log


@dataclass
class OracleSettings:
    """
    Knobs of the truncated-matrix oracle.

    :param dimension: truncation size N for exponential identities.
    :param protected_block: size of the leading block in which residuals are measured; truncation pollution stays \
        near the far edge for displacement parameters up to 1/2.
    :param tolerance: maximum absolute residual over the protected block.
    :param matel_dimension: truncation size for matrix-element concordance.
    :param matel_tolerance: tolerance for matrix-element concordance.
    :param grid_dimension: truncation size of the position operator whose eigenvectors rebuild the wavefunctions.
    :param grid_tolerance: tolerance for the wavefunction grid reconstruction.
    """ # noqa
    dimension: int = 64
    protected_block: int = 8
    tolerance: float = 1e-8
    matel_dimension: int = 32
    matel_tolerance: float = 1e-9
    grid_dimension: int = 32
    grid_tolerance: float = 1e-6

    @staticmethod
    def from_dict(obj: Dict):
        """
        Creates an OracleSettings object from a python dictionary; missing keys take their defaults.

        :param obj: A python dictionary with any subset of the fields.

        :returns: A populated ``OracleSettings`` object.
        """
        dimension = obj.get('dimension', 64)
        protected_block = obj.get('protected_block', 8)
        if protected_block > dimension // 2:
            log.warning(f'Protected block {protected_block} exceeds half the truncation size {dimension}. '
                        f'Setting it to {dimension // 2}.')
            protected_block = dimension // 2

        settings = OracleSettings(
            dimension=dimension,
            protected_block=protected_block,
            tolerance=obj.get('tolerance', 1e-8),
            matel_dimension=obj.get('matel_dimension', 32),
            matel_tolerance=obj.get('matel_tolerance', 1e-9),
            grid_dimension=obj.get('grid_dimension', 32),
            grid_tolerance=obj.get('grid_tolerance', 1e-6),
        )
        return settings

    @staticmethod
    def from_json(data: str):
        return OracleSettings.from_dict(json.loads(data))

    def to_dict(self, encode_json=False) -> Dict[str, Json]:
        return _asdict(self, encode_json=encode_json)

    def to_json(self) -> Dict[str, Json]:
        return json.dumps(self.to_dict())


@dataclass
class VerifySettings:
    """
    Sizes of the invariant suites run by ``ladderwood verify``.

    :param max_spectrum: highest level n checked against E_n = n + 1/2.
    :param max_commutator_power: highest n in [a, ad^n] = n ad^(n-1).
    :param max_ladder_rung: highest rung j for the intertwining and norm-product checks.
    :param max_hermite: highest Hermite index compared across the recurrence, the reduction and the pipeline.
    :param max_orthonormal: highest index in the exact orthonormality tables.
    :param random_cases: number of random operators or kets per property check.
    :param seed_nr: seed for the random cases, so reruns are reproducible.
    :param oracle: settings of the numerical oracle.
    """ # noqa
    max_spectrum: int = 20
    max_commutator_power: int = 12
    max_ladder_rung: int = 6
    max_hermite: int = 15
    max_orthonormal: int = 12
    random_cases: int = 25
    seed_nr: int = 1
    oracle: OracleSettings = field(default_factory=OracleSettings)

    @staticmethod
    def from_dict(obj: Dict):
        """
        Creates a VerifySettings object from a python dictionary; missing keys take their defaults.

        :returns: A populated ``VerifySettings`` object.
        """
        random_cases = obj.get('random_cases', 25)
        if random_cases < 1:
            log.warning(f'At least one random case is needed, got {random_cases}. Setting it to 1.')
            random_cases = 1

        settings = VerifySettings(
            max_spectrum=obj.get('max_spectrum', 20),
            max_commutator_power=obj.get('max_commutator_power', 12),
            max_ladder_rung=obj.get('max_ladder_rung', 6),
            max_hermite=obj.get('max_hermite', 15),
            max_orthonormal=obj.get('max_orthonormal', 12),
            random_cases=random_cases,
            seed_nr=obj.get('seed_nr', 1),
            oracle=OracleSettings.from_dict(obj.get('oracle', {})),
        )
        return settings

    @staticmethod
    def from_json(data: str):
        return VerifySettings.from_dict(json.loads(data))

    def to_dict(self, encode_json=False) -> Dict[str, Json]:
        return _asdict(self, encode_json=encode_json)

    def to_json(self) -> Dict[str, Json]:
        return json.dumps(self.to_dict())


@dataclass_json
@dataclass
class WavefunctionRecord:
    """
    Stable serialized form of a closed-form wavefunction. All exact numbers are strings: rationals as "p/q", field
    elements in the canonical "q0 + q1*i + q2*sqrt2 + q3*i*sqrt2" form.

    :param space: "position" or "momentum".
    :param n: occupation number.
    :param coeffs: polynomial coefficients in ascending powers of xi.
    :param scale_sq: square of the prefactor, 1/(2^n n!) for eigenstates.
    :param gaussian_rate: g in exp(-g xi^2).
    :param norm_pi_exponent: power of pi in the normalization, -1/4.
    :param norm_coefficient: field coefficient of the normalization.
    :param phase: global phase in the definition of the wavefunction.
    """
    space: str
    n: int
    coeffs: List[str]
    scale_sq: str
    gaussian_rate: str
    norm_pi_exponent: str
    norm_coefficient: str
    phase: str


@dataclass_json
@dataclass
class IdentityReport:
    """
    Outcome of one oracle or exact check: a single line of ``ladderwood verify`` output.
    """
    name: str
    dimension: int
    protected_block: int
    max_residual: float
    tolerance: float
    passed: bool

    def line(self) -> str:
        status = 'pass' if self.passed else 'FAIL'
        return f'{self.name}, N={self.dimension}, block={self.protected_block}, ' \
               f'residual={self.max_residual:.3e}, {status}'
