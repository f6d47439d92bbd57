//! Intersection arrays and strongly-regular parameter sets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrayError {
    #[error("intersection array is empty")]
    Empty,
    #[error("b has {b_len} entries but c has {c_len}")]
    LengthMismatch { b_len: usize, c_len: usize },
    #[error("diameter {d} is below 2")]
    DiameterTooSmall { d: usize },
    #[error("c_1 must be 1, got {value}")]
    FirstCNotOne { value: i64 },
    #[error("{seq}_{index} = {value} must be positive")]
    NonPositive { seq: char, index: usize, value: i64 },
    #[error("c is not nondecreasing: c_{index} = {value} < c_{} = {prev}", index - 1)]
    CNotMonotone { index: usize, value: i64, prev: i64 },
    #[error("b is not nonincreasing: b_{index} = {value} > b_{} = {prev}", index - 1)]
    BNotMonotone { index: usize, value: i64, prev: i64 },
    #[error("c_{index} = {value} exceeds the valency {k}")]
    CExceedsValency { index: usize, value: i64, k: i64 },
    #[error("a_{index} = k - b_{index} - c_{index} = {value} is negative")]
    NegativeA { index: usize, value: i64 },
    #[error("sphere size k_{index} = {numerator}/{denominator} is not an integer")]
    NonIntegralSphere {
        index: usize,
        numerator: u128,
        denominator: u128,
    },
    #[error("sphere sizes overflow")]
    Overflow,
    #[error("cannot parse intersection array `{0}`: expected \"b0,...,b_(d-1);c1,...,c_d\"")]
    Parse(String),
}

/// A validated intersection array `{b_0, ..., b_(d-1); c_1, ..., c_d}`.
///
/// Entries are stored with explicit zero padding at indices `-1` and `d+1`
/// (and `b_d = c_0 = 0`), so the extended accessors never branch.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionArray {
    d: usize,
    k: i64,
    // index i + 1 holds the entry for i in -1..=d+1
    b_ext: Vec<i64>,
    c_ext: Vec<i64>,
    a: Vec<i64>,
}

impl IntersectionArray {
    /// Validates `b = [b_0, ..., b_(d-1)]` and `c = [c_1, ..., c_d]`.
    pub fn new(b: &[i64], c: &[i64]) -> Result<Self, ArrayError> {
        if b.is_empty() && c.is_empty() {
            return Err(ArrayError::Empty);
        }
        if b.len() != c.len() {
            return Err(ArrayError::LengthMismatch {
                b_len: b.len(),
                c_len: c.len(),
            });
        }
        let d = b.len();
        if d < 2 {
            return Err(ArrayError::DiameterTooSmall { d });
        }
        let k = b[0];
        for (i, &v) in b.iter().enumerate() {
            if v <= 0 {
                return Err(ArrayError::NonPositive {
                    seq: 'b',
                    index: i,
                    value: v,
                });
            }
        }
        for (i, &v) in c.iter().enumerate() {
            if v <= 0 {
                return Err(ArrayError::NonPositive {
                    seq: 'c',
                    index: i + 1,
                    value: v,
                });
            }
        }
        if c[0] != 1 {
            return Err(ArrayError::FirstCNotOne { value: c[0] });
        }
        for i in 1..d {
            if c[i] < c[i - 1] {
                return Err(ArrayError::CNotMonotone {
                    index: i + 1,
                    value: c[i],
                    prev: c[i - 1],
                });
            }
            if b[i] > b[i - 1] {
                return Err(ArrayError::BNotMonotone {
                    index: i,
                    value: b[i],
                    prev: b[i - 1],
                });
            }
        }
        if c[d - 1] > k {
            return Err(ArrayError::CExceedsValency {
                index: d,
                value: c[d - 1],
                k,
            });
        }

        let mut b_ext = vec![0; d + 3];
        let mut c_ext = vec![0; d + 3];
        b_ext[1..=d].copy_from_slice(b);
        c_ext[2..=d + 1].copy_from_slice(c);
        let a: Vec<i64> = (0..=d).map(|i| k - b_ext[i + 1] - c_ext[i + 1]).collect();
        if let Some((index, &value)) = a.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(ArrayError::NegativeA { index, value });
        }
        Ok(Self { d, k, b_ext, c_ext, a })
    }

    pub fn diameter(&self) -> usize {
        self.d
    }

    pub fn valency(&self) -> i64 {
        self.k
    }

    /// `b_i` for `i` in `-1..=d+1`; zero outside `0..d`.
    pub fn b(&self, i: isize) -> i64 {
        self.ext(&self.b_ext, i)
    }

    /// `c_i` for `i` in `-1..=d+1`; zero outside `1..=d`.
    pub fn c(&self, i: isize) -> i64 {
        self.ext(&self.c_ext, i)
    }

    /// `a_i` for `i` in `0..=d`. Outside that range it reads as `k`, which
    /// keeps `a_i + b_i + c_i = k` true on the padding.
    pub fn a(&self, i: isize) -> i64 {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.a.get(i).copied())
            .unwrap_or(self.k)
    }

    fn ext(&self, v: &[i64], i: isize) -> i64 {
        usize::try_from(i + 1).ok().and_then(|j| v.get(j).copied()).unwrap_or(0)
    }

    /// `[b_0, ..., b_(d-1)]`
    pub fn b_seq(&self) -> &[i64] {
        &self.b_ext[1..=self.d]
    }

    /// `[c_1, ..., c_d]`
    pub fn c_seq(&self) -> &[i64] {
        &self.c_ext[2..=self.d + 1]
    }

    /// `[a_0, ..., a_d]`
    pub fn a_seq(&self) -> &[i64] {
        &self.a
    }

    /// Informational remarks about arrays outside the usual `k >= 3` setting.
    pub fn notes(&self) -> Vec<String> {
        let mut notes = Vec::new();
        if self.k == 2 {
            notes.push(
                "valency 2: the array describes a cycle; accepted although k >= 3 is the usual assumption".to_owned(),
            );
        }
        notes
    }

    /// Sizes `k_0..k_d` of the distance spheres around a vertex.
    pub fn sphere_sizes(&self) -> Result<SphereSizes, ArrayError> {
        let mut sizes: Vec<u128> = Vec::with_capacity(self.d + 1);
        sizes.push(1);
        for i in 0..self.d {
            let prev = sizes[i];
            let num = prev
                .checked_mul(self.b(i as isize) as u128)
                .ok_or(ArrayError::Overflow)?;
            let den = self.c(i as isize + 1) as u128;
            if num % den != 0 {
                return Err(ArrayError::NonIntegralSphere {
                    index: i + 1,
                    numerator: num,
                    denominator: den,
                });
            }
            sizes.push(num / den);
        }
        let n = sizes
            .iter()
            .try_fold(0u128, |acc, &s| acc.checked_add(s))
            .ok_or(ArrayError::Overflow)?;
        Ok(SphereSizes { sizes, n })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereSizes {
    pub sizes: Vec<u128>,
    pub n: u128,
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{};{}", join(self.b_seq()), join(self.c_seq()))
    }
}

fn parse_int_list(text: &str) -> Option<Vec<i64>> {
    text.split(',').map(|t| t.trim().parse().ok()).collect()
}

impl FromStr for IntersectionArray {
    type Err = ArrayError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let (b, c) = s.split_once(';').ok_or_else(|| ArrayError::Parse(s.to_owned()))?;
        let b = parse_int_list(b).ok_or_else(|| ArrayError::Parse(s.to_owned()))?;
        let c = parse_int_list(c).ok_or_else(|| ArrayError::Parse(s.to_owned()))?;
        Self::new(&b, &c)
    }
}

impl Serialize for IntersectionArray {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntersectionArray {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrgError {
    #[error("parameters violate k(k - a - 1) = c(n - k - 1): {lhs} != {rhs}")]
    Inconsistent { lhs: i64, rhs: i64 },
    #[error("parameters out of range: {0}")]
    OutOfRange(&'static str),
    #[error("eigenvalue multiplicity {which} = {value} is not a positive integer")]
    InfeasibleMultiplicity { which: &'static str, value: String },
    #[error("cannot parse SRG parameters `{0}`: expected \"n,k,a,c\"")]
    Parse(String),
}

/// Parameters `(n, k, a, c)` of a strongly-regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: i64,
    pub k: i64,
    pub a: i64,
    pub c: i64,
}

impl SrgParams {
    pub fn new(n: i64, k: i64, a: i64, c: i64) -> Result<Self, SrgError> {
        let p = Self { n, k, a, c };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), SrgError> {
        let Self { n, k, a, c } = *self;
        if !(0 < c && c <= k) {
            return Err(SrgError::OutOfRange("need 0 < c <= k"));
        }
        if !(0 <= a && a < k) {
            return Err(SrgError::OutOfRange("need 0 <= a < k"));
        }
        if k >= n - 1 {
            return Err(SrgError::OutOfRange("need k < n - 1 (graph must not be complete)"));
        }
        let lhs = k * (k - a - 1);
        let rhs = c * (n - k - 1);
        if lhs != rhs {
            return Err(SrgError::Inconsistent { lhs, rhs });
        }
        Ok(())
    }

    /// The diameter-2 array `{k, k - a - 1; 1, c}`.
    pub fn to_array(&self) -> Result<IntersectionArray, SrgError> {
        self.validate()?;
        IntersectionArray::new(&[self.k, self.k - self.a - 1], &[1, self.c])
            .map_err(|_| SrgError::OutOfRange("parameters do not give a valid intersection array"))
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.n, self.k, self.a, self.c)
    }
}

impl FromStr for SrgParams {
    type Err = SrgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match parse_int_list(s.trim().trim_start_matches('(').trim_end_matches(')')).as_deref() {
            Some(&[n, k, a, c]) => Self::new(n, k, a, c),
            _ => Err(SrgError::Parse(s.to_owned())),
        }
    }
}
