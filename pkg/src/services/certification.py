import logging

from src import exceptions
from src.models import schemas
from src.models.geometry import Isometry, ModelForm
from src.models.qmatrix import QMatrix
from src.services.numeric import bounds


class CertificationApplicationService:

    def __init__(self, config):
        self._config = config
        self._log = logging.getLogger(__name__)

    def certify(self, matrix: QMatrix, Q: int | None = None) -> schemas.BoundReport:
        """
        Проверить цепочку оценок для матрицы из Sp(n,1)

        :param matrix: квадратная матрица (n+1)×(n+1) полупространственной модели
        :param Q: параметр приближения
        :return: BoundReport (или исход «fixes o»)
        """
        Q = Q or self._config.DEFAULTS.Q
        if not matrix.is_square:
            raise exceptions.BadRequest("Матрица должна быть квадратной")
        if matrix.rows < 3:
            raise exceptions.BadRequest("Требуется матрица размера (n+1)×(n+1) с n ≥ 2")

        isometry = Isometry(
            matrix,
            ModelForm.half_space(matrix.rows - 1),
            tolerance=self._config.TOLERANCE.FORM_INPUT,
        )
        report = bounds.certify_displacement(isometry, Q, tolerances=self._config.TOLERANCE)
        self._log.info("Сертификат: исход %s, q = %s, verdict = %s", report.outcome.value, report.q, report.verdict)
        return report
