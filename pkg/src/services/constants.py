import logging

from src.services.numeric import bounds
from src.views import ConstantsReport


class ConstantsApplicationService:

    def __init__(self, config):
        self._config = config
        self._log = logging.getLogger(__name__)

    def get_constants(self, n: int, Q: int | None = None, omega: float | None = None) -> ConstantsReport:
        """
        Получить константы τ, ω, λ_n и запас итоговой оценки

        :param n: кватернионная размерность (n ≥ 2)
        :param Q: параметр приближения (по умолчанию из конфигурации)
        :param omega: порог вместо ω (для проверки отрицательного исхода)
        :return:
        """
        Q = Q or self._config.DEFAULTS.Q
        constants = bounds.solve_constants(n, Q)
        margin = bounds.main_theorem_margin(n, omega_value=omega, Q=Q)
        self._log.info("n = %d: оценка %.6f против ω = %.6f", n, margin.bound, margin.omega)
        return ConstantsReport(constants=constants, margin=margin)
