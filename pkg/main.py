# Claw_Square
# Copyright (C) 2024 Numerlor
#
# Claw_Square is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# Claw_Square is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with Claw_Square.  If not, see <https://www.gnu.org/licenses/>.

from __future__ import annotations

import logging
import sys

from claw_square import cli
from claw_square.constants import VERSION, get_config_dir
from claw_square.settings import load_settings
from claw_square.utils.logging import init_logging
from claw_square.utils.utils import ExceptionHandler

args = cli.build_parser().parse_args()

# create org and app folders
get_config_dir().mkdir(parents=True, exist_ok=True)

root_logger = logging.getLogger()
init_logging(get_config_dir(), verbose=args.verbose)

# save traceback to logfile if Exception is raised
ex_handler = ExceptionHandler()
sys.excepthook = ex_handler.handler

load_settings(get_config_dir() / "config.toml")
root_logger.info(f"Starting Claw_Square ver {VERSION}")
sys.exit(cli.execute(args))
