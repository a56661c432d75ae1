from src.lifespan import AppState
from src.services import ServiceFactory


def get_services(state: AppState) -> ServiceFactory:
    return ServiceFactory(
        config=state.config,
        executor=state.executor,
    )
