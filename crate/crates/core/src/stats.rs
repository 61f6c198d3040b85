//! Order statistics over burst multisets.
//!
//! Quartiles use the median-of-halves convention with exclusive halves: for an
//! odd count the median element belongs to neither half. This is the convention
//! under which the grouping rule reproduces the published per-group quanta for
//! workloads of 10, 5 and 7 processes; the source does not name one.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::workload::Time;

/// Exact rational in time units. Quartiles and medians are at worst halves.
pub type Rational = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error("statistic of an empty set")]
    Empty,
    #[error("harmonic mean requires strictly positive values")]
    NonPositive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Quartiles {
    #[serde(serialize_with = "crate::report::ser_ratio")]
    pub q1: Rational,
    #[serde(serialize_with = "crate::report::ser_ratio")]
    pub q2: Rational,
    #[serde(serialize_with = "crate::report::ser_ratio")]
    pub q3: Rational,
}

fn sorted(values: &[Time]) -> Result<Vec<i64>, StatsError> {
    if values.is_empty() {
        return Err(StatsError::Empty);
    }
    let mut v: Vec<i64> = values.iter().map(|&x| x as i64).collect();
    v.sort_unstable();
    Ok(v)
}

fn median_of_sorted(v: &[i64]) -> Rational {
    let n = v.len();
    if n % 2 == 1 {
        Rational::from_integer(v[n / 2])
    } else {
        Rational::new(v[n / 2 - 1] + v[n / 2], 2)
    }
}

pub fn quartiles(values: &[Time]) -> Result<Quartiles, StatsError> {
    let v = sorted(values)?;
    let n = v.len();
    if n == 1 {
        let x = Rational::from_integer(v[0]);
        return Ok(Quartiles { q1: x, q2: x, q3: x });
    }
    let lower = &v[..n / 2];
    let upper = &v[n.div_ceil(2)..];
    Ok(Quartiles {
        q1: median_of_sorted(lower),
        q2: median_of_sorted(&v),
        q3: median_of_sorted(upper),
    })
}

/// Min-max spread: `max - min`.
pub fn spread(values: &[Time]) -> Result<Time, StatsError> {
    let max = values.iter().max().ok_or(StatsError::Empty)?;
    let min = values.iter().min().ok_or(StatsError::Empty)?;
    Ok(max - min)
}

pub fn median(values: &[Time]) -> Result<Rational, StatsError> {
    Ok(median_of_sorted(&sorted(values)?))
}

/// `n / sum(1/v)`, exact.
pub fn harmonic_mean(values: &[Time]) -> Result<BigRational, StatsError> {
    if values.is_empty() {
        return Err(StatsError::Empty);
    }
    if values.contains(&0) {
        return Err(StatsError::NonPositive);
    }
    let reciprocal_sum = values.iter().fold(BigRational::zero(), |acc, &v| {
        acc + BigRational::new(BigInt::one(), BigInt::from(v))
    });
    Ok(BigRational::from_integer(BigInt::from(values.len())) / reciprocal_sum)
}

/// Smallest integer not below a non-negative rational.
pub(crate) fn ceil_big(r: &BigRational) -> Time {
    let c = r.ceil().to_integer();
    u64::try_from(c).unwrap_or(u64::MAX)
}

/// Smallest integer not below a non-negative rational.
pub(crate) fn ceil_ratio(r: Rational) -> Time {
    r.ceil().to_integer().max(0) as Time
}
