from cli.commands.differentiability_commands import differentiability_commands
from cli.commands.metric_commands import metric_commands
from cli.commands.potential_commands import potential_commands
from cli.commands.transport_commands import transport_commands
