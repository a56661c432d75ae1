from enum import Enum


class PointClass(str, Enum):
    NEGATIVE = "negative"
    NULL = "null"
    POSITIVE = "positive"


class IsometryClass(str, Enum):
    LOXODROMIC = "loxodromic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"
    IDENTITY = "identity"


class ModelKind(str, Enum):
    HALF_SPACE = "half-space"
    BALL = "ball"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class Suite(str, Enum):
    COMMUTATOR = "commutator"
    ZASSENHAUS = "zassenhaus"
    DIRICHLET = "dirichlet"
    ROTATION = "rotation"
    RESUME = "resume"
    DISTANCE = "distance"
    VOLUME = "volume"
    ALL = "all"

    @property
    def code(self) -> int:
        return list(Suite).index(self)


class CertifyOutcome(str, Enum):
    CERTIFIED = "certified"
    FIXES_ORIGIN = "fixes o"
