# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor
