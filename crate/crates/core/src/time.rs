//! Fixed-point simulation time.
//!
//! One time unit is split into 10 000 ticks, so every decimal with at most
//! four fractional digits (2.6, 2.61, 3.0511, ...) is represented exactly and
//! schedule arithmetic never drifts.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Sub, SubAssign};
use std::str::FromStr;

use thiserror::Error;

pub const TICKS_PER_UNIT: u64 = 10_000;
const FRACTION_DIGITS: usize = 4;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ticks(pub u64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TickParseError {
    #[error("empty number")]
    Empty,
    #[error("negative value `{0}`")]
    Negative(String),
    #[error("`{0}` has more than 4 fractional digits")]
    TooPrecise(String),
    #[error("`{0}` is not a decimal number")]
    Invalid(String),
}

impl Ticks {
    pub const ZERO: Ticks = Ticks(0);

    pub fn from_units(units: u64) -> Self {
        Ticks(units * TICKS_PER_UNIT)
    }

    /// Nearest tick, halves rounded up. `None` for negative or non-finite input.
    pub fn from_f64(units: f64) -> Option<Self> {
        if !units.is_finite() || units < 0.0 {
            return None;
        }
        let scaled = (units * TICKS_PER_UNIT as f64 + 0.5).floor();
        if scaled >= u64::MAX as f64 {
            return None;
        }
        Some(Ticks(scaled as u64))
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / TICKS_PER_UNIT as f64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl FromStr for Ticks {
    type Err = TickParseError;

    /// Exact decimal parse: `[+]digits[.digits]` with at most four
    /// fractional digits.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        if text.is_empty() {
            return Err(TickParseError::Empty);
        }
        let unsigned = match text.strip_prefix('-') {
            Some(rest) => {
                return if rest.parse::<Ticks>().is_ok() {
                    Err(TickParseError::Negative(text.to_owned()))
                } else {
                    Err(TickParseError::Invalid(text.to_owned()))
                };
            }
            None => text.strip_prefix('+').unwrap_or(text),
        };
        let invalid = || TickParseError::Invalid(text.to_owned());
        let (whole, frac) = unsigned.split_once('.').unwrap_or((unsigned, ""));
        if whole.is_empty() && frac.is_empty() {
            return Err(invalid());
        }
        if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(invalid());
        }
        if frac.len() > FRACTION_DIGITS {
            return Err(TickParseError::TooPrecise(text.to_owned()));
        }
        let whole: u64 = if whole.is_empty() {
            0
        } else {
            whole.parse().map_err(|_| invalid())?
        };
        let frac_ticks = format!("{frac:0<width$}", width = FRACTION_DIGITS)
            .parse::<u64>()
            .map_err(|_| invalid())?;
        whole
            .checked_mul(TICKS_PER_UNIT)
            .and_then(|w| w.checked_add(frac_ticks))
            .map(Ticks)
            .ok_or_else(invalid)
    }
}

impl fmt::Display for Ticks {
    /// Always four fractional digits: `24.0000`, `2.6119`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{:04}", self.0 / TICKS_PER_UNIT, self.0 % TICKS_PER_UNIT)
    }
}

impl Add for Ticks {
    type Output = Ticks;
    fn add(self, rhs: Ticks) -> Ticks {
        Ticks(self.0 + rhs.0)
    }
}

impl AddAssign for Ticks {
    fn add_assign(&mut self, rhs: Ticks) {
        self.0 += rhs.0;
    }
}

impl Sub for Ticks {
    type Output = Ticks;
    fn sub(self, rhs: Ticks) -> Ticks {
        Ticks(self.0 - rhs.0)
    }
}

impl SubAssign for Ticks {
    fn sub_assign(&mut self, rhs: Ticks) {
        self.0 -= rhs.0;
    }
}

impl Sum for Ticks {
    fn sum<I: Iterator<Item = Ticks>>(iter: I) -> Ticks {
        iter.fold(Ticks::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Ticks> for Ticks {
    fn sum<I: Iterator<Item = &'a Ticks>>(iter: I) -> Ticks {
        iter.copied().sum()
    }
}

/// Exact mean of a set of tick values, kept as a rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mean {
    pub total: Ticks,
    pub count: u64,
}

impl Mean {
    pub fn of<I: IntoIterator<Item = Ticks>>(values: I) -> Self {
        values.into_iter().fold(
            Mean {
                total: Ticks::ZERO,
                count: 0,
            },
            |m, v| Mean {
                total: m.total + v,
                count: m.count + 1,
            },
        )
    }

    pub fn value(&self) -> f64 {
        if self.count == 0 {
            return 0.0;
        }
        self.total.0 as f64 / (self.count as f64 * TICKS_PER_UNIT as f64)
    }

    // value * 10^decimals rounded half-up, computed in integers
    fn scaled(&self, decimals: u32) -> u128 {
        if self.count == 0 {
            return 0;
        }
        let denom = self.count as u128 * TICKS_PER_UNIT as u128;
        let numer = self.total.0 as u128 * 10u128.pow(decimals);
        (2 * numer + denom) / (2 * denom)
    }

    /// Exact half-up rounding to `decimals` fractional digits.
    pub fn rounded(&self, decimals: u32) -> f64 {
        self.scaled(decimals) as f64 / 10f64.powi(decimals as i32)
    }

    pub fn format(&self, decimals: u32) -> String {
        let scaled = self.scaled(decimals);
        if decimals == 0 {
            return scaled.to_string();
        }
        let unit = 10u128.pow(decimals);
        format!(
            "{}.{:0width$}",
            scaled / unit,
            scaled % unit,
            width = decimals as usize
        )
    }
}
