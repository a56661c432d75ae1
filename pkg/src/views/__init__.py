from .base import BaseView

from .constants import ConstantsReport
from .constants import ConstantsResponse
from .bounds import BoundReportResponse
from .bounds import SuiteResponse
from .volume import VolumeResponse
from .distance import DistanceResponse
