//! Resultants and exact rational root finding without integer factorization.
//!
//! Rational critical values of p are rational roots of
//! R(y) = Res_x(p - y, p'). R is reconstructed from scalar resultants at
//! deg p sample values by interpolation, then its rational roots are found
//! by Sturm isolation plus a simplest-rational probe: a root's denominator
//! divides the leading coefficient D of the primitive integer form, the
//! minimal-denominator rational in an isolating interval is computable
//! exactly, and once the interval is narrower than 1/D^2 it holds at most
//! one rational with denominator at most D.

use super::RatPoly;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Resultant of `f` and `g` by Euclidean reduction.
pub fn resultant(f: &RatPoly, g: &RatPoly) -> BigRational {
    let df = f.degree().unwrap_or(0);
    let dg = g.degree().unwrap_or(0);
    if df < dg {
        let r = resultant(g, f);
        return if df * dg % 2 == 1 { -r } else { r };
    }
    if g.is_zero() {
        // Res(f, 0) vanishes except in the empty degree-zero convention.
        return if df == 0 { BigRational::one() } else { BigRational::zero() };
    }
    if dg == 0 {
        return g.leading().expect("nonzero constant").pow(df as i32);
    }
    let (_, r) = f.divrem(g);
    if r.is_zero() {
        return BigRational::zero();
    }
    let dr = r.degree().expect("nonzero remainder");
    let scale = g.leading().expect("nonconstant g").pow((df - dr) as i32);
    let tail = resultant(g, &r);
    let value = scale * tail;
    if df * dg % 2 == 1 {
        -value
    } else {
        value
    }
}

/// Lagrange interpolation through distinct sample points.
fn interpolate(points: &[(BigRational, BigRational)]) -> RatPoly {
    let mut total = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RatPoly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi - xj;
            // (x - xj) / (xi - xj)
            basis = &basis
                * &RatPoly::new(alloc::vec![-xj / &denom, denom.recip()]);
        }
        total = &total + &basis;
    }
    total
}

/// The critical-value resultant R(y) = Res_x(p - y, p'), reconstructed from
/// the given distinct sample values; `samples.len()` must equal `deg p`.
/// The result has degree exactly `deg p - 1` and does not depend on the
/// choice of samples.
pub fn critical_values_with_samples(p: &RatPoly, samples: &[BigRational]) -> RatPoly {
    let m = p.degree().expect("nonzero polynomial");
    assert!(m >= 1, "need a nonconstant polynomial");
    assert_eq!(samples.len(), m, "need exactly deg p samples");
    for (i, a) in samples.iter().enumerate() {
        for b in &samples[i + 1..] {
            assert!(a != b, "samples must be distinct");
        }
    }
    let dp = p.derivative();
    let points: Vec<(BigRational, BigRational)> = samples
        .iter()
        .map(|y| {
            let shifted = p - &RatPoly::constant(y.clone());
            (y.clone(), resultant(&shifted, &dp))
        })
        .collect();
    let r = interpolate(&points);
    debug_assert_eq!(r.degree(), Some(m - 1), "critical resultant degree");
    r
}

/// Rational critical values of `p`, sorted ascending, and whether they
/// account for every critical point (equivalently, whether every critical
/// value of `p` is rational).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriticalValues {
    pub values: Vec<BigRational>,
    pub all_rational: bool,
}

pub fn critical_values(p: &RatPoly) -> CriticalValues {
    let m = p.degree().expect("nonzero polynomial");
    assert!(m >= 1, "need a nonconstant polynomial");
    let samples: Vec<BigRational> =
        (0..m).map(|i| BigRational::from_integer(BigInt::from(i))).collect();
    let r = critical_values_with_samples(p, &samples);
    let values = rational_roots(&r);
    let dp = p.derivative();
    // deg gcd(p - v, p') counts the critical points above v; comparing the
    // total against deg p' decides whether any critical value is missing.
    let mut matched = 0usize;
    for v in &values {
        let shifted = p - &RatPoly::constant(v.clone());
        matched += shifted.gcd(&dp).degree().unwrap_or(0);
    }
    CriticalValues { values, all_rational: matched == m - 1 }
}

/// All distinct rational roots of a nonzero polynomial, ascending.
pub(crate) fn rational_roots(p: &RatPoly) -> Vec<BigRational> {
    assert!(!p.is_zero(), "the zero polynomial has every root");
    let (_, parts) = p.squarefree_decomposition();
    let mut radical = RatPoly::one();
    for part in &parts {
        radical = &radical * part;
    }
    let mut current = radical;
    let mut roots = Vec::new();
    loop {
        match current.degree() {
            None | Some(0) => break,
            Some(1) => {
                roots.push(-current.coeff(0) / current.coeff(1));
                break;
            }
            Some(_) => {}
        }
        match find_one_rational_root(&current) {
            Some(root) => {
                let linear = RatPoly::new(alloc::vec![-root.clone(), BigRational::one()]);
                current = current.div_exact(&linear);
                roots.push(root);
            }
            None => break,
        }
    }
    roots.sort();
    roots
}

/// One rational root of a squarefree polynomial of degree >= 2, if any.
fn find_one_rational_root(s: &RatPoly) -> Option<BigRational> {
    let ints = s.primitive_integer_coeffs();
    let lead = ints.last().expect("nonzero polynomial").clone();
    debug_assert!(lead.is_positive());
    // Any rational root a/b in lowest terms has b dividing the leading
    // integer coefficient.
    let denominator_cap = lead.clone();
    // Strict bound on the magnitude of every root.
    let mut max_ratio = BigRational::zero();
    for c in &ints[..ints.len() - 1] {
        let ratio = BigRational::new(c.abs(), lead.clone());
        if ratio > max_ratio {
            max_ratio = ratio;
        }
    }
    let bound = max_ratio + BigRational::from_integer(BigInt::from(2));
    let chain = sturm_chain(s);
    let mut stack = alloc::vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count =
            sign_variations(&chain, &lo).saturating_sub(sign_variations(&chain, &hi));
        if count == 0 {
            continue;
        }
        if count == 1 {
            if let Some(root) = probe_interval(s, &denominator_cap, lo, hi) {
                return Some(root);
            }
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        if s.eval(&mid).is_zero() {
            return Some(mid);
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    None
}

/// Sturm chain of a squarefree polynomial, each element scaled by a positive
/// constant to primitive integer coefficients.
fn sturm_chain(s: &RatPoly) -> Vec<RatPoly> {
    let mut chain = alloc::vec![positive_primitive(s), positive_primitive(&s.derivative())];
    while !chain.last().expect("nonempty chain").is_constant() {
        let k = chain.len();
        let rem = chain[k - 2].divrem(&chain[k - 1]).1;
        if rem.is_zero() {
            break;
        }
        chain.push(positive_primitive(&-&rem));
    }
    chain
}

/// Scales by a positive rational to primitive integer coefficients,
/// preserving every sign (unlike `primitive_integer_coeffs`).
fn positive_primitive(p: &RatPoly) -> RatPoly {
    if p.is_zero() {
        return RatPoly::zero();
    }
    let mut coeffs = p.primitive_integer_coeffs();
    // primitive_integer_coeffs normalizes the leading sign; undo when it
    // flipped the polynomial.
    if coeffs.last().map_or(false, Signed::is_positive)
        != p.leading().map_or(false, Signed::is_positive)
    {
        for c in &mut coeffs {
            *c = -c.clone();
        }
    }
    RatPoly::new(coeffs.into_iter().map(BigRational::from_integer).collect())
}

/// Sign variation count of the chain at x (zeros skipped).
fn sign_variations(chain: &[RatPoly], x: &BigRational) -> usize {
    let mut previous: Option<bool> = None;
    let mut variations = 0;
    for p in chain {
        let value = p.eval(x);
        if value.is_zero() {
            continue;
        }
        let sign = value.is_positive();
        if previous == Some(!sign) {
            variations += 1;
        }
        previous = Some(sign);
    }
    variations
}

/// Decides whether the single real root of `s` in the open interval
/// `(lo, hi)` is rational, returning it when so. The endpoints are not
/// roots. `cap` bounds the denominator of any rational root.
fn probe_interval(
    s: &RatPoly,
    cap: &BigInt,
    mut lo: BigRational,
    mut hi: BigRational,
) -> Option<BigRational> {
    let width_floor = BigRational::new(BigInt::one(), cap * cap);
    let lo_positive = s.eval(&lo).is_positive();
    let mut take_simplest = true;
    loop {
        let narrow = &hi - &lo < width_floor;
        let probe = if narrow || take_simplest {
            simplest_between(&lo, &hi)
        } else {
            (&lo + &hi) / BigRational::from_integer(BigInt::from(2))
        };
        let value = s.eval(&probe);
        if value.is_zero() {
            return Some(probe);
        }
        if narrow {
            // At most one rational with denominator <= cap fits in an
            // interval narrower than 1/cap^2, and the simplest probe would
            // have been it.
            return None;
        }
        if take_simplest && probe.denom() > cap {
            // Even the minimal denominator in the interval exceeds the cap.
            return None;
        }
        take_simplest = !take_simplest;
        if value.is_positive() == lo_positive {
            lo = probe;
        } else {
            hi = probe;
        }
    }
}

/// The rational with minimal denominator (then minimal numerator) in the
/// open interval `(lo, hi)`: the first Stern-Brocot mediant falling inside.
fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    debug_assert!(lo < hi);
    if lo.is_negative() && hi.is_positive() {
        return BigRational::zero();
    }
    if !lo.is_negative() {
        simplest_nonneg(lo, hi)
    } else {
        -simplest_nonneg(&-hi.clone(), &-lo.clone())
    }
}

/// Simplest rational in the open interval for 0 <= lo < hi.
fn simplest_nonneg(lo: &BigRational, hi: &BigRational) -> BigRational {
    let fl = lo.floor().to_integer();
    let next_int = BigRational::from_integer(&fl + 1);
    if next_int < *hi {
        return next_int;
    }
    // No integer inside: both endpoints share the integer part fl.
    let lo_frac = lo - BigRational::from_integer(fl.clone());
    let hi_frac = hi - BigRational::from_integer(fl.clone());
    let reciprocal = if lo_frac.is_zero() {
        // x in (fl, hi): the fractional part ranges over (0, hi_frac), whose
        // simplest member is 1/q for the least q with 1/q < hi_frac.
        let q = hi_frac.recip().floor().to_integer() + 1;
        BigRational::new(BigInt::one(), q)
    } else {
        simplest_nonneg(&hi_frac.recip(), &lo_frac.recip()).recip()
    };
    BigRational::from_integer(fl) + reciprocal
}
