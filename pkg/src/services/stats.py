import dataclasses
import platform

import numpy
import scipy


class StatsApplicationService:

    def __init__(self, config):
        self._config = config

    def get_stats(self, details: bool = False) -> dict:
        """
        Версия приложения и вычислительного стека

        :param details: добавить режим отладки и действующие допуски
        :return:
        """
        info = {
            "title": self._config.BASE.TITLE,
            "version": self._config.BASE.VERSION,
        }
        if details:
            info.update(
                {
                    "DEBUG": self._config.DEBUG,
                    "python": platform.python_version(),
                    "numpy": numpy.__version__,
                    "scipy": scipy.__version__,
                    "tolerance": dataclasses.asdict(self._config.TOLERANCE),
                }
            )
        return info
