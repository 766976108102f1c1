"""
Run configuration - defaults, file loading and command-line overrides

Precedence (later wins): dataclass defaults, the ``run`` section of
``config/settings.yaml``, the file passed with ``--config``, then flags.
A ``--config`` file is YAML when its suffix is .yaml/.yml, otherwise a flat
``key=value`` text file.
"""

from dataclasses import dataclass, field, fields, asdict
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from .errors import ConfigurationError
from .logger import get_logger

logger = get_logger(__name__)

SUITES = ("maxwell", "transforms", "tensoralg", "commutators", "converge", "all")

DEFAULT_SETTINGS_PATH = "config/settings.yaml"


@dataclass
class RunConfig:
    """All parameters of a verification run"""
    box_length: float = 1.0
    points_per_axis: int = 32
    hbar: float = 1.0
    c: float = 1.0
    sigma: float = 0.08              # equal-time test functions
    sigma_light_cone: float = 0.05   # unequal-time and light-cone test functions
    kmax_sigma: float = 8.0          # commutator cutoff as k_max * sigma
    k_max: Optional[float] = None    # explicit cutoff, overrides kmax_sigma
    field_kmax: float = 40.0         # synthesis lattice, must stay below Nyquist
    n_random_modes: int = 20
    evolve_steps: int = 1000
    seed: int = 1234
    suite: str = "all"
    out_dir: str = "output"
    longitudinal_amplitude: float = 0.0
    cutoffs: List[float] = field(default_factory=list)

    @property
    def commutator_kmax(self) -> float:
        return self.k_max if self.k_max is not None else self.kmax_sigma / self.sigma

    @property
    def light_cone_kmax(self) -> float:
        return self.k_max if self.k_max is not None else self.kmax_sigma / self.sigma_light_cone

    @property
    def convergence_cutoffs(self) -> List[float]:
        if self.cutoffs:
            return list(self.cutoffs)
        return [m / self.sigma for m in (2.0, 4.0, 8.0)]

    def suites(self) -> List[str]:
        """Expand ``all`` into the ordered list of suites"""
        if self.suite == "all":
            return [s for s in SUITES if s != "all"]
        return [self.suite]

    def validate(self) -> "RunConfig":
        """Raise ConfigurationError on any invalid field"""
        positive = {
            "box_length": self.box_length,
            "hbar": self.hbar,
            "c": self.c,
            "sigma": self.sigma,
            "sigma_light_cone": self.sigma_light_cone,
            "kmax_sigma": self.kmax_sigma,
            "field_kmax": self.field_kmax,
        }
        for name, value in positive.items():
            if not value > 0:
                raise ConfigurationError(f"{name} must be positive, got {value}")

        if self.k_max is not None and not self.k_max > 0:
            raise ConfigurationError(f"k_max must be positive, got {self.k_max}")

        if self.points_per_axis < 4 or self.points_per_axis % 2:
            raise ConfigurationError(
                f"points_per_axis must be even and >= 4, got {self.points_per_axis}"
            )

        if self.n_random_modes < 1 or self.evolve_steps < 1:
            raise ConfigurationError("n_random_modes and evolve_steps must be >= 1")

        if self.suite not in SUITES:
            raise ConfigurationError(
                f"Unknown suite '{self.suite}'; choose from {', '.join(SUITES)}"
            )

        if any(k <= 0 for k in self.cutoffs):
            raise ConfigurationError("cutoffs must be positive")
        if list(self.cutoffs) != sorted(self.cutoffs):
            raise ConfigurationError("cutoffs must be increasing")

        return self

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _coerce(name: str, raw: Any) -> Any:
    """Convert a raw value (string from key=value files, or YAML scalar) to the field type"""
    kinds = {f.name: f.type for f in fields(RunConfig)}
    if name not in kinds:
        raise ConfigurationError(f"Unknown configuration key: {name}")

    kind = str(kinds[name])
    try:
        if raw is None or (isinstance(raw, str) and raw.strip().lower() in ("", "none", "null")):
            if "Optional" in kind:
                return None
            raise ConfigurationError(f"{name} may not be empty")
        if "List" in kind:
            if isinstance(raw, str):
                return [float(x) for x in raw.replace(",", " ").split()]
            return [float(x) for x in raw]
        if "int" in kind:
            value = float(raw)
            if value != int(value):
                raise ConfigurationError(f"{name} must be an integer, got {raw}")
            return int(value)
        if "float" in kind:
            return float(raw)
        return str(raw).strip()
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"Invalid value for {name}: {raw!r} ({e})") from e


def parse_key_value_text(text: str) -> Dict[str, str]:
    """Parse a flat ``key=value`` document"""
    values = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"Line {number}: expected key=value, got '{line}'")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def _load_file(path: Path) -> Dict[str, Any]:
    """Load a configuration file into a raw dictionary"""
    if not path.exists():
        raise ConfigurationError(f"Config file not found: {path}")

    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() in (".yaml", ".yml"):
        try:
            data = yaml.safe_load(text) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Failed to parse {path}: {e}") from e
        if not isinstance(data, dict):
            raise ConfigurationError(f"{path} must contain a mapping")
        return data.get("run", data)

    return parse_key_value_text(text)


def load_settings(settings_path: str = DEFAULT_SETTINGS_PATH) -> Dict[str, Any]:
    """Load application settings; a missing file yields an empty dictionary"""
    path = Path(settings_path)
    if not path.exists():
        logger.debug(f"Settings file not found, using defaults: {settings_path}")
        return {}
    try:
        with open(path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Failed to parse settings {settings_path}: {e}") from e


def load_run_config(
    config_path: Optional[str] = None,
    overrides: Optional[Dict[str, Any]] = None,
    settings: Optional[Dict[str, Any]] = None
) -> RunConfig:
    """
    Build a validated RunConfig.

    Args:
        config_path: Optional YAML or key=value file
        overrides: Values from the command line (None entries are ignored)
        settings: Parsed settings.yaml content (its ``run`` section is applied first)

    Returns:
        Validated RunConfig
    """
    merged: Dict[str, Any] = {}

    if settings:
        merged.update(settings.get("run", {}) or {})

    if config_path:
        merged.update(_load_file(Path(config_path)))
        logger.info(f"Loaded run configuration: {config_path}")

    for key, value in (overrides or {}).items():
        if value is not None:
            merged[key] = value

    config = RunConfig(**{key: _coerce(key, value) for key, value in merged.items()})
    return config.validate()
