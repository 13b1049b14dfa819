import os
from dotenv import load_dotenv
from dataclasses import dataclass, field

load_dotenv()


@dataclass
class SolverConfig:
    # Case splits allowed per condition set before remaining branches are reported unresolved
    max_branches: int = 64
    # Rule applications allowed per branch
    max_rule_steps: int = 10000


@dataclass
class OracleConfig:
    trials: int = 500
    seed: int = 42
    # Numerators and denominators of sampled parameters stay within this bound
    bound: int = 10
    # Share of trials drawn from {0, 1, -1, I, -I} instead of random Gaussian rationals
    lattice_fraction: float = 0.5


@dataclass
class ClassifyConfig:
    max_n: int = 4
    parallel: bool = True


@dataclass
class LogConfig:
    level: str = "INFO"
    log_to_file: bool = False


def _flag(value: str) -> bool:
    return value.strip().lower() in ("1", "true", "yes", "on")


@dataclass
class Config:
    solver: SolverConfig = field(default_factory=SolverConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    classify: ClassifyConfig = field(default_factory=ClassifyConfig)
    log: LogConfig = field(default_factory=LogConfig)

    @classmethod
    def from_env(cls) -> "Config":
        return cls(
            solver=SolverConfig(
                max_branches=int(os.getenv("CLIFFSUB_MAX_BRANCHES", "64")),
            ),
            oracle=OracleConfig(
                trials=int(os.getenv("CLIFFSUB_ORACLE_TRIALS", "500")),
                seed=int(os.getenv("CLIFFSUB_ORACLE_SEED", "42")),
                bound=int(os.getenv("CLIFFSUB_ORACLE_BOUND", "10")),
            ),
            classify=ClassifyConfig(
                max_n=int(os.getenv("CLIFFSUB_MAX_N", "4")),
                parallel=_flag(os.getenv("CLIFFSUB_PARALLEL", "true")),
            ),
            log=LogConfig(
                level=os.getenv("CLIFFSUB_LOG_LEVEL", "INFO"),
                log_to_file=_flag(os.getenv("CLIFFSUB_LOG_TO_FILE", "false")),
            ),
        )
