"""Desk-scale limits.

Every bound here is a default; the functions that enforce a bound accept an
override argument, and the CLI exposes --cap.
"""

DEFAULT_ORDER_CAP = 10_080
DEFAULT_DEGREE_CAP = 128
DEFAULT_CONDUCTOR_CAP = 5_040
