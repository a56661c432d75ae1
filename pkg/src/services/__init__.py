from concurrent.futures import Executor

from src.config import Config
from . import numeric
from .certification import CertificationApplicationService
from .constants import ConstantsApplicationService
from .distance import DistanceApplicationService
from .stats import StatsApplicationService
from .verification import VerificationApplicationService
from .volume import VolumeApplicationService


class ServiceFactory:
    def __init__(
            self,
            *,
            config: Config,
            executor: Executor,
    ):
        self._config = config
        self._executor = executor

    @property
    def constants(self) -> ConstantsApplicationService:
        return ConstantsApplicationService(config=self._config)

    @property
    def verification(self) -> VerificationApplicationService:
        return VerificationApplicationService(config=self._config, executor=self._executor)

    @property
    def certification(self) -> CertificationApplicationService:
        return CertificationApplicationService(config=self._config)

    @property
    def volume(self) -> VolumeApplicationService:
        return VolumeApplicationService(config=self._config)

    @property
    def distance(self) -> DistanceApplicationService:
        return DistanceApplicationService(config=self._config)

    @property
    def stats(self) -> StatsApplicationService:
        return StatsApplicationService(config=self._config)
