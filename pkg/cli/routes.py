import click

from cli.commands import (
    differentiability_commands,
    metric_commands,
    potential_commands,
    transport_commands,
)
from core.configs import settings

lipfree = click.CommandCollection(
    name=settings.APP_NAME,
    help="Exact certificates for finite Lipschitz-free spaces.",
    sources=[
        metric_commands,
        transport_commands,
        potential_commands,
        differentiability_commands,
    ],
)
