import dataclasses
import logging
import sys

from pydantic import ValidationError

from src.config import Config, load_env_config, override_tolerances
from src.dependencies.services import get_services
from src.exceptions import ToolkitError, handle_toolkit_error, handle_validation_error
from src.lifespan import AppState, create_start_app_handler, create_stop_app_handler
from src.models.schemas import RunConfig
from src.router import COMMON_ARGUMENTS, register_cli_router
from src.utils import formators


def _pick(args, name: str, default):
    value = getattr(args, name, None)
    return default if value is None else value


def build_run_config(args, config: Config) -> RunConfig:
    defaults = config.DEFAULTS
    overridden = override_tolerances(config.TOLERANCE, args.tolerances)
    changes = {
        key: value
        for key, value in dataclasses.asdict(overridden).items()
        if value != getattr(config.TOLERANCE, key)
    }
    config.TOLERANCE = overridden
    return RunConfig(
        command=args.command,
        n=_pick(args, "n", defaults.N),
        Q=_pick(args, "Q", defaults.Q),
        samples=_pick(args, "samples", defaults.SAMPLES),
        seed=_pick(args, "seed", defaults.SEED),
        workers=_pick(args, "workers", defaults.WORKERS),
        tolerance_overrides=changes,
        output_format=_pick(args, "output_format", defaults.OUTPUT_FORMAT),
        output_path=args.output_path,
    )


def main(argv: list[str] | None = None) -> int:
    """
    Точка входа CLI

    Коды выхода: 0 успех, 1 нарушено свойство, 2 ошибка использования, 3 отказ по области определения.
    """
    config = load_env_config()
    logging.basicConfig(level=logging.DEBUG if config.DEBUG else logging.INFO)

    logging.debug("Регистрация команд")
    parser = register_cli_router().build_parser(
        prog="qhyp",
        description=config.BASE.DESCRIPTION,
        common=COMMON_ARGUMENTS,
    )
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        run = build_run_config(args, config)
    except ToolkitError as exc:
        return handle_toolkit_error(exc)
    except ValidationError as exc:
        return handle_validation_error(exc)

    state = AppState(config)
    start_app = create_start_app_handler(state, run.workers)
    stop_app = create_stop_app_handler(state)
    start_app()
    try:
        view, exit_code = args.handler(args, run, get_services(state))
        formators.write_output(formators.render(view, run.output_format), run.output_path)
        return exit_code
    except ToolkitError as exc:
        return handle_toolkit_error(exc)
    except ValidationError as exc:
        return handle_validation_error(exc)
    finally:
        stop_app()


if __name__ == "__main__":
    sys.exit(main())
