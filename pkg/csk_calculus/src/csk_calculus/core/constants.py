from __future__ import annotations

APP_NAME = "csk-calculus"

DEFAULT_ORDER = 12
ORACLE_CAP_DEFAULT = 12
ORACLE_CAP_MAX = 14
DEMO_MIN_ORDER = 12

ENV_LOG_LEVEL = "CSK_LOG_LEVEL"
ENV_DEFAULT_ORDER = "CSK_DEFAULT_ORDER"

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

# Printed prefixes of the sequences reproduced by the demo.
A001764_PREFIX = (1, 1, 3, 12, 55, 273)
A098746_PREFIX = (1, 1, 2, 6, 23, 102, 495, 2549, 13682, 75714, 428882)
A106228_PREFIX = (1, 1, 2, 6, 21, 80, 322, 1347, 5798, 25512, 114236, 518848)
SHIFTED_CUMULANT_DET = -3374
