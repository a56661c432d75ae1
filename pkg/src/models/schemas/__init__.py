from .error import Error
from .error import FieldErrorItem

from .bounds import BoundConstants
from .bounds import MarginReading
from .bounds import TheoremMargin
from .bounds import DirichletResult
from .bounds import ApproximationCertificate
from .bounds import BoundReport
from .bounds import BOUND_REPORT_CSV_FIELDS

from .volume import VolumeResult
from .volume import VolumeLowerBound
from .volume import VolumeTable
from .volume import VOLUME_CSV_FIELDS
from .volume import LOWER_BOUND_CSV_FIELDS

from .verification import InequalityCheck
from .verification import SuiteReport
from .distance import DistanceResult
from .verification import SUITE_CSV_FIELDS

from .payload import MatrixPayload
from .payload import PointPayload
from .payload import HorosphericalPayload

from .run import RunConfig
