use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::SemanticsError;
use crate::model::StateId;

/// A configuration `q(x)` with all counters nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub state: StateId,
    pub values: Vec<BigInt>,
}

/// A configuration under integer semantics; counters may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZConfiguration {
    pub state: StateId,
    pub values: Vec<BigInt>,
}

impl Configuration {
    /// Validating constructor; rejects negative counters.
    pub fn new(state: StateId, values: Vec<BigInt>) -> Result<Self, SemanticsError> {
        for (i, v) in values.iter().enumerate() {
            if v.is_negative() {
                return Err(SemanticsError::NegativeCounter {
                    counter: i,
                    value: v.clone(),
                });
            }
        }
        Ok(Configuration { state, values })
    }

    pub fn from_i64(state: StateId, values: &[i64]) -> Self {
        Configuration::new(state, values.iter().map(|&v| BigInt::from(v)).collect())
            .expect("nonnegative values")
    }

    pub fn zeros(state: StateId, dim: usize) -> Self {
        Configuration {
            state,
            values: vec![BigInt::from(0); dim],
        }
    }

    /// `self` covers `other`: same state and componentwise ≥.
    pub fn covers(&self, other: &Configuration) -> bool {
        self.state == other.state
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a >= b)
    }

    /// Covers strictly: covers and differs in at least one counter.
    pub fn strictly_covers(&self, other: &Configuration) -> bool {
        self.covers(other) && self.values != other.values
    }

    pub fn to_z(&self) -> ZConfiguration {
        ZConfiguration {
            state: self.state,
            values: self.values.clone(),
        }
    }

    pub fn max_norm(&self) -> BigInt {
        max_abs(&self.values)
    }
}

impl ZConfiguration {
    pub fn new(state: StateId, values: Vec<BigInt>) -> Self {
        ZConfiguration { state, values }
    }

    pub fn from_i64(state: StateId, values: &[i64]) -> Self {
        ZConfiguration::new(state, values.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Succeeds when all counters are nonnegative.
    pub fn to_nat(&self) -> Result<Configuration, SemanticsError> {
        Configuration::new(self.state, self.values.clone())
    }

    pub fn max_norm(&self) -> BigInt {
        max_abs(&self.values)
    }
}

fn max_abs(values: &[BigInt]) -> BigInt {
    let mut m = BigInt::from(0);
    for v in values {
        let a = v.abs();
        if a > m {
            m = a;
        }
    }
    m
}

fn write_values(f: &mut fmt::Formatter<'_>, values: &[BigInt]) -> fmt::Result {
    write!(f, "(")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.state)?;
        write_values(f, &self.values)
    }
}

impl fmt::Display for ZConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.state)?;
        write_values(f, &self.values)
    }
}
