//! Dimension towers: the sequences d_l(D) = u_D^l + u_D^-l + 1, the modified
//! Chebyshev polynomials that navigate them, strong divisibility with its
//! shear at powers of 3, new-prime detection and inverse index lookup.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor;
use crate::quadfield::{self, SquarefreeDecomp, UnitRecord};
use crate::serde_util::{biguint_str, factor_list};

/// One level of a dimension tower.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerEntry {
    /// Squarefree radicand of the underlying field.
    #[serde(rename = "D", with = "biguint_str")]
    pub d: BigUint,
    /// Level index (1-based).
    pub ell: u64,
    /// The dimension d_ell(D).
    #[serde(rename = "dim", with = "biguint_str")]
    pub dim: BigUint,
    /// Prime factorization of `dim`, when requested.
    #[serde(
        rename = "factors",
        with = "crate::serde_util::opt_factor_list",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub factorization: Option<Vec<(BigUint, u32)>>,
}

/// The tower above one field, with the computed levels memoized.
///
/// The cache lives inside the value, so exclusive access (`&mut self`)
/// yields exactly the results of the uncached pure computation.
pub struct Tower {
    unit: UnitRecord,
    // dims[i] = d_i(D); dims[0] = 3 for every field
    dims: Vec<BigUint>,
}

impl Tower {
    pub fn new(d: &BigUint) -> Result<Self> {
        Ok(Self::from_unit(quadfield::fundamental_unit(d)?))
    }

    pub(crate) fn new_trusted(d: &BigUint) -> Result<Self> {
        Ok(Self::from_unit(quadfield::fundamental_unit_trusted(
            d,
            quadfield::DEFAULT_CF_BUDGET,
        )?))
    }

    pub fn from_unit(unit: UnitRecord) -> Self {
        let d1 = (unit.u_d.trace() + 1u32)
            .to_biguint()
            .expect("trace of a totally positive unit > 1 is at least 3");
        debug_assert!(d1 >= BigUint::from(4u32));
        Tower {
            unit,
            dims: vec![BigUint::from(3u32), d1],
        }
    }

    pub fn unit(&self) -> &UnitRecord {
        &self.unit
    }

    pub fn radicand(&self) -> &BigUint {
        &self.unit.d
    }

    /// First dimension, `trace(u_D) + 1`.
    pub fn d1(&self) -> &BigUint {
        &self.dims[1]
    }

    /// d_ell(D) by the second-order non-homogeneous recurrence
    /// `d_n = (d_1 - 1) d_{n-1} - d_{n-2} - (d_1 - 3)`.
    pub fn dimension(&mut self, ell: u64) -> BigUint {
        let idx = ell as usize;
        if self.dims.len() <= idx {
            let d1 = self.dims[1].clone();
            let mult = &d1 - 1u32;
            let shift = &d1 - 3u32;
            while self.dims.len() <= idx {
                let n = self.dims.len();
                let next = &mult * &self.dims[n - 1] - &self.dims[n - 2] - &shift;
                self.dims.push(next);
            }
        }
        self.dims[idx].clone()
    }

    pub fn entry(&mut self, ell: u64, with_factors: bool) -> Result<TowerEntry> {
        if ell == 0 {
            return Err(Error::Precondition("tower levels are indexed from 1".into()));
        }
        let dim = self.dimension(ell);
        let factorization = if with_factors {
            Some(factor::factor(&dim))
        } else {
            None
        };
        Ok(TowerEntry {
            d: self.unit.d.clone(),
            ell,
            dim,
            factorization,
        })
    }

    /// Index of the level whose dimension equals `dim`, scanning forward;
    /// the sequence is strictly increasing, which bounds the scan.
    pub fn index_of(&mut self, dim: &BigUint) -> Result<u64> {
        let mut ell = 1u64;
        loop {
            let current = self.dimension(ell);
            if &current == dim {
                return Ok(ell);
            }
            if &current > dim {
                return Err(Error::Internal(format!(
                    "{dim} is not a dimension above D = {} despite passing the Pell check",
                    self.unit.d
                )));
            }
            ell += 1;
        }
    }
}

/// d_ell(D) for squarefree `D >= 2` and `ell >= 1`.
pub fn dimension(d: &BigUint, ell: u64) -> Result<TowerEntry> {
    if ell == 0 {
        return Err(Error::Precondition("tower levels are indexed from 1".into()));
    }
    Tower::new(d)?.entry(ell, false)
}

/// gcd(d_ell1(D), d_ell2(D)).
///
/// Within a fixed 3-adic index stratum this equals d_gcd(ell1, ell2)(D);
/// across strata it collapses to 1 or 3.
pub fn gcd_of_dimensions(d: &BigUint, ell1: u64, ell2: u64) -> Result<BigUint> {
    if ell1 == 0 || ell2 == 0 {
        return Err(Error::Precondition("tower levels are indexed from 1".into()));
    }
    let mut tower = Tower::new(d)?;
    Ok(tower.dimension(ell1).gcd(&tower.dimension(ell2)))
}

fn is_power_of_two_plus_two(d1: &BigUint) -> bool {
    // d_1 = 2^N + 2 with N >= 1
    if d1 < &BigUint::from(4u32) {
        return false;
    }
    let shifted = d1 - 2u32;
    shifted.count_ones() == 1
}

/// Primes dividing d_ell(D) that divide no earlier level.
///
/// Every level introduces at least one new prime, except the excluded
/// pathology d_1 = 2^N + 2 with ell = 2 (e.g. d_1(5) = 4, d_2(5) = 8),
/// which is reported as an error rather than silently processed.
pub fn new_primes(d: &BigUint, ell: u64) -> Result<Vec<BigUint>> {
    if ell == 0 {
        return Err(Error::Precondition("tower levels are indexed from 1".into()));
    }
    let mut tower = Tower::new(d)?;
    if ell == 2 && is_power_of_two_plus_two(tower.d1()) {
        return Err(Error::PathologyExcluded { d1: tower.d1().clone() });
    }
    let dim = tower.dimension(ell);
    let mut fresh = Vec::new();
    for (p, _) in factor::factor(&dim) {
        let seen_earlier = (1..ell).any(|k| (tower.dimension(k) % &p).is_zero());
        if !seen_earlier {
            fresh.push(p);
        }
    }
    if fresh.is_empty() {
        return Err(Error::Internal(format!(
            "no new prime at level {ell} above D = {d} outside the excluded pathology"
        )));
    }
    Ok(fresh)
}

/// The rebased sub-tower with base index 3^s: entries d_{3^s k}(D) for the
/// first `count` values of k coprime to 3.
pub fn subtower(d: &BigUint, s: u32, count: usize) -> Result<Vec<TowerEntry>> {
    let base = 3u64
        .checked_pow(s)
        .ok_or_else(|| Error::Precondition(format!("3^{s} overflows the index range")))?;
    let mut tower = Tower::new(d)?;
    let mut out = Vec::with_capacity(count);
    let mut k = 1u64;
    while out.len() < count {
        if k % 3 != 0 {
            let ell = base
                .checked_mul(k)
                .ok_or_else(|| Error::Precondition("sub-tower index overflow".into()))?;
            out.push(tower.entry(ell, false)?);
        }
        k += 1;
    }
    Ok(out)
}

/// Recover `(D, f, ell)` from a dimension `dim >= 4`, where
/// `(dim - 1)^2 - f^2 D = 4` and `dim = d_ell(D)`.
pub fn index_of_dimension(dim: &BigUint) -> Result<(BigUint, BigUint, u64)> {
    if *dim < BigUint::from(4u32) {
        return Err(Error::DimensionBelowFour(dim.clone()));
    }
    let decomp = quadfield::disc_map(dim)?;
    let ell = index_within(&decomp, dim)?;
    Ok((decomp.d, decomp.f, ell))
}

pub(crate) fn index_within(decomp: &SquarefreeDecomp, dim: &BigUint) -> Result<u64> {
    let mut tower = Tower::new_trusted(&decomp.d)?;
    tower.index_of(dim)
}

/// Modified Chebyshev polynomial of the first kind, Delta_n.
///
/// Delta_0 = 3, Delta_1 = x, Delta_2 = x^2 - 2x, and
/// Delta_n = x Delta_{n-1} - x Delta_{n-2} + Delta_{n-3}; these satisfy
/// Delta_m(Delta_n(x)) = Delta_mn(x) and chart the towers via
/// d_{n l}(D) = Delta_n(d_l(D)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaPoly {
    n: u32,
    // ascending coefficients: coeffs[i] multiplies x^i
    coeffs: Vec<BigInt>,
}

impl DeltaPoly {
    pub fn degree_index(&self) -> u32 {
        self.n
    }

    /// Coefficients in ascending order of degree.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Coefficients of Delta_n by the three-term recurrence.
pub fn delta_poly(n: u32) -> DeltaPoly {
    let mut rows: Vec<Vec<BigInt>> = vec![
        vec![BigInt::from(3)],
        vec![BigInt::zero(), BigInt::one()],
        vec![BigInt::zero(), BigInt::from(-2), BigInt::one()],
    ];
    for m in 3..=(n as usize) {
        let shift_prev = shift_up(&rows[m - 1]);
        let shift_prev2 = shift_up(&rows[m - 2]);
        let mut next = poly_sub(&shift_prev, &shift_prev2);
        next = poly_add(&next, &rows[m - 3]);
        rows.push(next);
    }
    DeltaPoly {
        n,
        coeffs: rows[n as usize].clone(),
    }
}

/// Delta_n evaluated at `x`, by the value recurrence (no coefficient table).
pub fn delta_eval(n: u32, x: &BigInt) -> BigInt {
    match n {
        0 => BigInt::from(3),
        1 => x.clone(),
        2 => x * x - 2 * x,
        _ => {
            let mut v0 = BigInt::from(3);
            let mut v1 = x.clone();
            let mut v2 = x * x - 2 * x;
            for _ in 3..=n {
                let next = x * (&v2 - &v1) + &v0;
                v0 = v1;
                v1 = v2;
                v2 = next;
            }
            v2
        }
    }
}

fn shift_up(p: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(p.len() + 1);
    out.push(BigInt::zero());
    out.extend_from_slice(p);
    out
}

fn poly_add(p: &[BigInt], q: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len().max(q.len())];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in q.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn poly_sub(p: &[BigInt], q: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len().max(q.len())];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in q.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.len() > 1 && p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
    p
}

/// Taylor coefficients of `num(x) / den(x)` to the given order, by exact
/// long division. The constant term of `den` must be a unit (1 or -1).
pub fn series_div(num: &[BigInt], den: &[BigInt], order: usize) -> Result<Vec<BigInt>> {
    let lead = den
        .first()
        .ok_or_else(|| Error::Precondition("empty denominator".into()))?;
    if !lead.magnitude().is_one() {
        return Err(Error::Precondition(
            "series division needs a unit constant term in the denominator".into(),
        ));
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
    for j in 0..=order {
        let mut acc = num.get(j).cloned().unwrap_or_else(BigInt::zero);
        for i in 1..den.len().min(j + 1) {
            acc -= &den[i] * &out[j - i];
        }
        out.push(if lead.is_negative() { -acc } else { acc });
    }
    Ok(out)
}

/// First `n + 1` coefficients of the tower generating function
/// `(3 - 2 d1 x + d1 x^2) / (1 - d1 x + d1 x^2 - x^3)`; coefficient k
/// equals d_k(D) whenever `d1 = d_1(D)` (with d_0 = 3).
pub fn generating_coeffs(d1: &BigUint, n: usize) -> Result<Vec<BigUint>> {
    if *d1 < BigUint::from(4u32) {
        return Err(Error::Precondition(format!("d1 = {d1} must be >= 4")));
    }
    let d1 = BigInt::from(d1.clone());
    let num = [BigInt::from(3), -2 * &d1, d1.clone()];
    let den = [BigInt::one(), -&d1, d1.clone(), BigInt::from(-1)];
    let coeffs = series_div(&num, &den, n)?;
    coeffs
        .into_iter()
        .map(|c| {
            c.to_biguint()
                .ok_or_else(|| Error::Internal("negative generating coefficient".into()))
        })
        .collect()
}
