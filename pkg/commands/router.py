# commands/router.py
"""
Command registry mapping sub-commands to request DTOs and handlers
"""
import argparse
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Type

from pydantic import BaseModel

from core.exceptions import ArgumentError
from domains.enums import ExitCode
from utils import measure_time

logger = logging.getLogger(__name__)


class CliArgumentParser(argparse.ArgumentParser):
    """Argument parser raising instead of exiting, so usage errors map to exit code 1"""

    def error(self, message):
        raise ArgumentError(message)


@dataclass(frozen=True)
class Command:
    name: str
    request_model: Type[BaseModel]
    help: str
    arguments: Callable[[argparse.ArgumentParser], None]
    handler: Callable[[BaseModel], ExitCode]


class CommandRouter:
    """Collects commands the way an API router collects endpoints"""

    def __init__(self):
        self.commands: Dict[str, Command] = {}

    def command(
        self,
        name: str,
        request_model: Type[BaseModel],
        help: str,
        arguments: Callable[[argparse.ArgumentParser], None],
    ):
        def decorator(handler):
            self.commands[name] = Command(
                name=name,
                request_model=request_model,
                help=help,
                arguments=arguments,
                handler=measure_time(f"command_{name}")(handler),
            )
            return handler

        return decorator

    def install(self, parser: argparse.ArgumentParser) -> None:
        subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
        for command in self.commands.values():
            sub = subparsers.add_parser(command.name, help=command.help, description=command.help)
            command.arguments(sub)

    def build_request(self, args: argparse.Namespace) -> BaseModel:
        """Validate parsed flags into the command's request DTO"""
        command = self.commands[args.command]
        fields = command.request_model.model_fields
        values = {k: v for k, v in vars(args).items() if k in fields and v is not None}
        return command.request_model(**values)

    def dispatch(self, args: argparse.Namespace) -> ExitCode:
        command = self.commands[args.command]
        request = self.build_request(args)
        logger.info(f"Running {command.name}: {request.model_dump(exclude_none=True)}")
        return command.handler(request)
