import argparse
from dataclasses import dataclass, field
from typing import Any, Callable


@dataclass(frozen=True)
class Argument:
    flags: tuple[str, ...]
    options: dict[str, Any] = field(default_factory=dict)


def argument(*flags: str, **options) -> Argument:
    return Argument(flags, options)


@dataclass(frozen=True)
class Command:
    name: str
    handler: Callable
    help: str
    arguments: tuple[Argument, ...]


class CommandRouter:
    """
    Набор подкоманд CLI, по аналогии с маршрутизатором HTTP
    """

    def __init__(self):
        self.commands: list[Command] = []

    def command(self, name: str, *, help: str, arguments: list[Argument] = ()) -> Callable:
        def decorator(handler: Callable) -> Callable:
            self.commands.append(Command(name, handler, help, tuple(arguments)))
            return handler

        return decorator

    def include_router(self, router: "CommandRouter") -> None:
        self.commands.extend(router.commands)

    def build_parser(self, prog: str, description: str, common: list[Argument] = ()) -> argparse.ArgumentParser:
        parent = argparse.ArgumentParser(add_help=False)
        for item in common:
            parent.add_argument(*item.flags, **item.options)

        parser = argparse.ArgumentParser(prog=prog, description=description)
        subparsers = parser.add_subparsers(dest="command", required=True)
        for command in self.commands:
            subparser = subparsers.add_parser(command.name, help=command.help, parents=[parent])
            for item in command.arguments:
                subparser.add_argument(*item.flags, **item.options)
            subparser.set_defaults(handler=command.handler)
        return parser
