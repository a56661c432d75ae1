import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from src.config import Config


class AppState:
    def __init__(self, config: Config):
        self.config = config
        self.executor: ThreadPoolExecutor | None = None


def init_executor(state: AppState, workers: int):
    state.executor = ThreadPoolExecutor(max_workers=workers, thread_name_prefix="qhyp-sweep")


def create_start_app_handler(state: AppState, workers: int) -> Callable:
    def start_app() -> None:
        logging.debug("Запуск пула выборок: %d потоков.", workers)
        init_executor(state, workers)

    return start_app


def create_stop_app_handler(state: AppState) -> Callable:
    def stop_app() -> None:
        logging.debug("Остановка пула выборок.")
        if state.executor is not None:
            state.executor.shutdown(wait=True)
            state.executor = None

    return stop_app
