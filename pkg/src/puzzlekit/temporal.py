"""Calendar and clock puzzles, solved with explicit day and minute arithmetic."""

from __future__ import annotations

from dataclasses import dataclass

from .core import ClockTime, InvalidInstanceError, Rng, Weekday

MONTH_NAMES = ("January", "February", "March", "April", "May", "June", "July",
               "August", "September", "October", "November", "December")

_MONTH_DAYS = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)

SUBJECT_NAMES = ("Alexis", "Jordan", "Taylor", "Morgan", "Casey", "Riley", "Jamie",
                 "Avery", "Quinn", "Peyton", "Rowan", "Skyler", "Dakota", "Emerson")


def month_length(month: int, leap: bool) -> int:
    if not 1 <= month <= 12:
        raise InvalidInstanceError(f"invalid month {month}")
    return 29 if month == 2 and leap else _MONTH_DAYS[month - 1]


def year_length(leap: bool) -> int:
    return 366 if leap else 365


def day_of_year(month: int, day: int, leap: bool) -> int:
    """0-based ordinal of the date within its year."""
    return sum(month_length(m, leap) for m in range(1, month)) + day - 1


@dataclass(frozen=True)
class CalendarInstance:
    shown_month: int
    weekday_of_first: int  # 0 = Monday
    days_in_month: int
    shown_year_leap: bool
    query_month: int
    query_day: int
    query_year_offset: int
    query_year_leap: bool

    def validate(self) -> None:
        if not 0 <= self.weekday_of_first <= 6:
            raise InvalidInstanceError("weekday_of_first must be in 0..6")
        if self.days_in_month != month_length(self.shown_month, self.shown_year_leap):
            raise InvalidInstanceError("days_in_month inconsistent with month and leap flag")
        if self.query_year_offset not in (-1, 0, 1):
            raise InvalidInstanceError("query year offset must be -1, 0 or +1")
        if self.query_year_offset == 0 and self.query_year_leap != self.shown_year_leap:
            raise InvalidInstanceError("same-year query with a different leap flag")
        if not 1 <= self.query_day <= month_length(self.query_month, self.query_year_leap):
            raise InvalidInstanceError(
                f"{MONTH_NAMES[self.query_month - 1]} {self.query_day} does not exist")


def calendar_offset(inst: CalendarInstance) -> int:
    """Signed day count from day 1 of the shown month to the query date."""
    start = day_of_year(inst.shown_month, 1, inst.shown_year_leap)
    target = day_of_year(inst.query_month, inst.query_day, inst.query_year_leap)
    if inst.query_year_offset == 0:
        return target - start
    if inst.query_year_offset == 1:
        return year_length(inst.shown_year_leap) - start + target
    return -(start + year_length(inst.query_year_leap) - target)


def solve_calendar(inst: CalendarInstance) -> Weekday:
    inst.validate()
    return Weekday((inst.weekday_of_first + calendar_offset(inst)) % 7)


def gen_calendar(rng: Rng) -> CalendarInstance:
    shown_month = rng.randint(1, 12)
    shown_leap = rng.randint(0, 3) == 0
    offset = rng.choice((-1, 0, 1))
    if offset == 0:
        query_leap = shown_leap
    else:
        # Consecutive years are never both leap years.
        query_leap = False if shown_leap else rng.randint(0, 2) == 0
    query_month = rng.randint(1, 12)
    query_day = rng.randint(1, month_length(query_month, query_leap))
    inst = CalendarInstance(
        shown_month=shown_month,
        weekday_of_first=rng.randint(0, 6),
        days_in_month=month_length(shown_month, shown_leap),
        shown_year_leap=shown_leap,
        query_month=query_month,
        query_day=query_day,
        query_year_offset=offset,
        query_year_leap=query_leap,
    )
    inst.validate()
    return inst


@dataclass(frozen=True)
class ClockInstance:
    current: ClockTime
    delta_minutes: int
    subject: str

    def validate(self) -> None:
        if abs(self.delta_minutes) >= 720:
            raise InvalidInstanceError("|delta| must stay below 12 hours")


def solve_clock(inst: ClockInstance) -> ClockTime:
    inst.validate()
    return ClockTime.from_minutes(inst.current.minutes_past_twelve + inst.delta_minutes)


def gen_clock(rng: Rng) -> ClockInstance:
    current = ClockTime(rng.randint(1, 12), rng.randint(0, 59))
    hours, minutes = rng.randint(0, 5), rng.randint(1, 59)
    sign = 1 if rng.coin() else -1
    return ClockInstance(current, sign * (hours * 60 + minutes), rng.choice(SUBJECT_NAMES))
