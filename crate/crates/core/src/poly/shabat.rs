//! Certification that a polynomial has at most two critical values.
//!
//! A degree-m polynomial p with rational coefficients is certified against
//! the exact criterion: every critical point must lie over 0 or over one
//! nonzero value c, which by the chain rule is equivalent to
//! deg gcd(p, p') + deg gcd(p - c, p') = m - 1. The root multiplicities of
//! p and of p - c then read off the two vertex valency lists of the
//! associated bipartite plane tree.

use super::roots::critical_values;
use super::RatPoly;
use crate::tree::Passport;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Why a polynomial failed Shabat certification.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShabatError {
    /// Certification covers degrees two and up.
    DegreeTooSmall,
    /// No second critical value was provided and none could be discovered
    /// among the rational numbers.
    NoRationalSecondValue,
    /// Some critical point lies outside the fibers over 0 and the second
    /// value.
    NotShabat,
    /// Internal consistency check: the resultant root search and the
    /// repeated-root test disagreed about the critical value 0.
    ZeroCriticalValueMissing,
}

impl fmt::Display for ShabatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShabatError::DegreeTooSmall => f.write_str("the degree must be at least 2"),
            ShabatError::NoRationalSecondValue => {
                f.write_str("no rational second critical value could be determined")
            }
            ShabatError::NotShabat => {
                f.write_str("some critical value lies outside the certified pair")
            }
            ShabatError::ZeroCriticalValueMissing => {
                f.write_str("inconsistent detection of the critical value zero")
            }
        }
    }
}

impl core::error::Error for ShabatError {}

/// A verified two-critical-value certificate.
///
/// `white_profile` lists the root multiplicities of p and `black_profile`
/// those of p - c, both sorted descending; they are the valency lists of
/// the two vertex colors of the associated plane tree. `passport` is their
/// color-normalized form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShabatCertificate {
    pub degree: usize,
    pub second_value: BigRational,
    pub white_profile: Vec<usize>,
    pub black_profile: Vec<usize>,
    pub passport: Passport,
}

/// Certifies that every critical point of `p` lies over 0 or over a single
/// nonzero second value.
///
/// With `second_value` given (it must be nonzero), only that pair is
/// checked. Otherwise the second value is discovered from the rational
/// critical values of `p`; a polynomial whose only critical value is 0
/// is certified with second value 1, any nonzero regular value being as
/// good.
pub fn verify_shabat(
    p: &RatPoly,
    second_value: Option<&BigRational>,
) -> Result<ShabatCertificate, ShabatError> {
    let m = match p.degree() {
        Some(m) if m >= 2 => m,
        _ => return Err(ShabatError::DegreeTooSmall),
    };
    let dp = p.derivative();
    let white_gcd = p.gcd(&dp);
    let white_defect = white_gcd.degree().expect("gcd of nonzero polynomials");
    let c = match second_value {
        Some(c) => {
            assert!(!c.is_zero(), "the second critical value must be nonzero");
            c.clone()
        }
        None => discover_second_value(p, white_defect)?,
    };
    let shifted = p - &RatPoly::constant(c.clone());
    let black_defect = shifted
        .gcd(&dp)
        .degree()
        .expect("gcd of nonzero polynomials");
    // Each critical point over 0 or c is a repeated root of p or p - c;
    // together they must exhaust all m - 1 critical points.
    if white_defect + black_defect != m - 1 {
        return Err(ShabatError::NotShabat);
    }
    let white_profile = multiplicity_profile(p);
    let black_profile = multiplicity_profile(&shifted);
    debug_assert_eq!(white_profile.iter().sum::<usize>(), m);
    debug_assert_eq!(black_profile.iter().sum::<usize>(), m);
    let passport = Passport::new(white_profile.clone(), black_profile.clone())
        .expect("multiplicity profiles of a certified polynomial form a passport")
        .color_normalized();
    Ok(ShabatCertificate { degree: m, second_value: c, white_profile, black_profile, passport })
}

/// Finds the nonzero second critical value from the rational critical
/// values of p. `white_defect` is deg gcd(p, p'), which is positive exactly
/// when 0 is a critical value.
fn discover_second_value(p: &RatPoly, white_defect: usize) -> Result<BigRational, ShabatError> {
    let crit = critical_values(p);
    let zero_found = crit.values.iter().any(|v| v.is_zero());
    if zero_found != (white_defect > 0) {
        return Err(ShabatError::ZeroCriticalValueMissing);
    }
    let mut nonzero = crit.values.into_iter().filter(|v| !v.is_zero());
    match (nonzero.next(), nonzero.next()) {
        (None, _) => {
            if white_defect > 0 {
                // All critical points lie over 0; any nonzero regular value
                // completes the pair.
                Ok(BigRational::one())
            } else {
                Err(ShabatError::NoRationalSecondValue)
            }
        }
        (Some(c), None) => Ok(c),
        (Some(_), Some(_)) => Err(ShabatError::NotShabat),
    }
}

/// Root multiplicities of p (complex roots included), sorted descending.
fn multiplicity_profile(p: &RatPoly) -> Vec<usize> {
    let (_, parts) = p.squarefree_decomposition();
    let mut profile = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        for _ in 0..part.degree().unwrap_or(0) {
            profile.push(i + 1);
        }
    }
    profile.sort_unstable_by(|a, b| b.cmp(a));
    profile
}

/// The polynomial is not the square of any rational polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NotASquare;

impl fmt::Display for NotASquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("the polynomial is not the square of a rational polynomial")
    }
}

impl core::error::Error for NotASquare {}

/// Exact square root of a polynomial, when one exists.
pub fn poly_sqrt(p: &RatPoly) -> Result<RatPoly, NotASquare> {
    if p.is_zero() {
        return Ok(RatPoly::zero());
    }
    let d = p.degree().expect("nonzero polynomial");
    if d % 2 == 1 {
        return Err(NotASquare);
    }
    let h = d / 2;
    let lead = rational_sqrt(p.leading().expect("nonzero polynomial")).ok_or(NotASquare)?;
    let mut q: Vec<BigRational> = alloc::vec![BigRational::zero(); h + 1];
    let double_lead = &lead + &lead;
    q[h] = lead;
    // Matching coefficients of x^(h+j) from the top determines q uniquely.
    for j in (0..h).rev() {
        let mut sum = BigRational::zero();
        for i in (j + 1)..h {
            sum = sum + &q[i] * &q[h + j - i];
        }
        q[j] = (p.coeff(h + j) - sum) / &double_lead;
    }
    let candidate = RatPoly::new(q);
    if &(&candidate * &candidate) == p {
        Ok(candidate)
    } else {
        Err(NotASquare)
    }
}

/// Square root of a nonnegative rational, if rational.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let exact = |n: &BigInt| {
        let root = n.sqrt();
        (&root * &root == *n).then_some(root)
    };
    Some(BigRational::new(exact(r.numer())?, exact(r.denom())?))
}

/// Whether `target` equals `base` raised to the `k`-th power.
pub fn verify_power(target: &RatPoly, base: &RatPoly, k: usize) -> bool {
    assert!(k >= 1, "the exponent must be positive");
    *target == base.pow(k)
}
