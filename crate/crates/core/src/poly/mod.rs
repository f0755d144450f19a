//! Dense univariate polynomials over the rationals, with the exact
//! machinery the tree verifier needs: gcd, squarefree decomposition,
//! resultants, rational critical values, and certificate checks.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

mod parse;
mod roots;
mod shabat;

pub use parse::{parse_poly, ParseError};
pub use roots::{critical_values, critical_values_with_samples, resultant, CriticalValues};
pub use shabat::{
    poly_sqrt, verify_power, verify_shabat, NotASquare, ShabatCertificate, ShabatError,
};

/// A polynomial with rational coefficients, stored dense and constant-first
/// with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

fn trimmed(mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
    while coeffs.last().map_or(false, Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

impl RatPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        RatPoly { coeffs: trimmed(coeffs) }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn x() -> Self {
        RatPoly::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::new(alloc::vec![c])
    }

    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = alloc::vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        RatPoly::new(coeffs)
    }

    /// Constant-first integer coefficients; convenient in tests and the CLI.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        RatPoly::new(coeffs)
    }

    /// The antiderivative with constant term zero.
    pub fn antiderivative(&self) -> RatPoly {
        let mut coeffs = alloc::vec![BigRational::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / BigRational::from_integer(BigInt::from(i + 1))),
        );
        RatPoly::new(coeffs)
    }

    pub fn scaled(&self, c: &BigRational) -> RatPoly {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(lc) => self.scaled(&lc.recip()),
        }
    }

    pub fn pow(&self, k: usize) -> RatPoly {
        let mut result = RatPoly::one();
        let mut square = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &square;
            }
            k >>= 1;
            if k > 0 {
                square = &square * &square;
            }
        }
        result
    }

    /// Quotient and remainder with `deg r < deg divisor`. Panics on a zero
    /// divisor.
    pub fn divrem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![
            BigRational::zero();
            self.coeffs.len().saturating_sub(dd)
        ];
        while rem.len() > dd {
            let dr = rem.len() - 1;
            let factor = rem[dr].clone() / &lc;
            if !factor.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let idx = dr - dd + i;
                    rem[idx] = &rem[idx] - &(&factor * d);
                }
                quot[dr - dd] = factor;
            }
            rem.pop();
            while rem.last().map_or(false, Zero::is_zero) {
                rem.pop();
            }
        }
        (RatPoly::new(quot), RatPoly { coeffs: rem })
    }

    /// Division known to be exact; panics when a remainder appears.
    pub fn div_exact(&self, divisor: &RatPoly) -> RatPoly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor, computed through a primitive
    /// pseudo-remainder sequence over the integers to keep coefficients
    /// small. `gcd(0, g)` is the monic multiple of `g`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = self.primitive_integer_coeffs();
        let mut b = other.primitive_integer_coeffs();
        if a.len() < b.len() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_primitive(int_pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        let rational = RatPoly::new(a.into_iter().map(BigRational::from_integer).collect());
        rational.monic()
    }

    /// Yun decomposition: returns `(lc, parts)` with every part monic and
    /// squarefree, pairwise coprime, and `self = lc * prod parts[i]^(i+1)`.
    /// Parts of missing multiplicity are the constant one. Panics on zero.
    pub fn squarefree_decomposition(&self) -> (BigRational, Vec<RatPoly>) {
        let lc = self.leading().expect("squarefree decomposition of zero").clone();
        let p = self.monic();
        if p.is_constant() {
            return (lc, Vec::new());
        }
        let dp = p.derivative();
        let g = p.gcd(&dp);
        let mut b = p.div_exact(&g);
        let c = dp.div_exact(&g);
        let mut d = &c - &b.derivative();
        let mut parts = Vec::new();
        loop {
            let a = b.gcd(&d);
            b = b.div_exact(&a);
            let c_next = d.div_exact(&a);
            d = &c_next - &b.derivative();
            parts.push(a);
            if b.is_constant() {
                break;
            }
        }
        (lc, parts)
    }

    /// The integer-coefficient polynomial proportional to this one with
    /// coprime coefficients and positive leading coefficient (empty for
    /// zero). Constant-first.
    pub(crate) fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut denominator_lcm = BigInt::one();
        for c in &self.coeffs {
            denominator_lcm = denominator_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * &denominator_lcm).to_integer()).collect();
        let mut sign_normalized = int_primitive(ints);
        if sign_normalized.last().map_or(false, Signed::is_negative) {
            for c in &mut sign_normalized {
                *c = -c.clone();
            }
        }
        sign_normalized
    }
}

/// Strips trailing zeros of an integer-coefficient list.
fn int_trim(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    while coeffs.last().map_or(false, Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// Divides by the content (gcd of the coefficients); keeps signs.
fn int_primitive(coeffs: Vec<BigInt>) -> Vec<BigInt> {
    let coeffs = int_trim(coeffs);
    let mut content = BigInt::zero();
    for c in &coeffs {
        content = content.gcd(c);
    }
    if content.is_zero() || content.is_one() {
        return coeffs;
    }
    coeffs.into_iter().map(|c| c / &content).collect()
}

/// A pseudo-remainder of `a` by `b`: `lc(b)^s * a mod b` over the integers
/// for some s, which is enough because callers take the primitive part.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().expect("nonzero divisor").clone();
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        for c in &mut r {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = &r[idx] - &(&lead * bc);
        }
        r = int_trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        RatPoly::new(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        RatPoly::new(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs =
            alloc::vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        RatPoly::new(coeffs)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, value: &BigRational) -> fmt::Result {
    if value.denom().is_one() {
        write!(f, "{}", value.numer())
    } else {
        write!(f, "{}/{}", value.numer(), value.denom())
    }
}

impl fmt::Display for RatPoly {
    /// Descending-degree form that `parse_poly` reads back, e.g.
    /// `3/2*x^2 - x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = c.abs();
            if i == 0 {
                write_rational(f, &magnitude)?;
            } else {
                if !magnitude.is_one() {
                    write_rational(f, &magnitude)?;
                    write!(f, "*")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> RatPoly {
        let degree = rng.gen_range(0..=max_degree);
        let coeffs = (0..=degree)
            .map(|_| q(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
            .collect();
        RatPoly::new(coeffs)
    }

    #[test]
    fn construction_and_degree() {
        assert!(RatPoly::zero().is_zero());
        assert_eq!(RatPoly::zero().degree(), None);
        assert_eq!(RatPoly::from_integers(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(RatPoly::x().degree(), Some(1));
        assert_eq!(RatPoly::monomial(q(3, 1), 4).coeff(4), q(3, 1));
    }

    #[test]
    fn product_of_conjugates() {
        let a = RatPoly::from_integers(&[1, 1]); // 1 + x
        let b = RatPoly::from_integers(&[-1, 1]); // -1 + x
        assert_eq!(&a * &b, RatPoly::from_integers(&[-1, 0, 1]));
        assert_eq!(&(&a * &b) + &RatPoly::one(), RatPoly::monomial(q(1, 1), 2));
    }

    #[test]
    fn eval_matches_expansion() {
        let p = RatPoly::from_integers(&[2, -3, 0, 1]); // x^3 - 3x + 2
        assert_eq!(p.eval(&q(2, 1)), q(4, 1));
        assert_eq!(p.eval(&q(1, 2)), q(5, 8)); // 1/8 - 3/2 + 2
        assert_eq!(p.eval(&q(1, 1)), q(0, 1));
    }

    #[test]
    fn derivative_and_antiderivative_are_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let p = random_poly(&mut rng, 6);
            assert_eq!(p.antiderivative().derivative(), p);
            assert_eq!(p.antiderivative().coeff(0), BigRational::zero());
        }
    }

    #[test]
    fn divrem_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..60 {
            let f = random_poly(&mut rng, 7);
            let mut g = random_poly(&mut rng, 4);
            if g.is_zero() {
                g = RatPoly::one();
            }
            let (quot, rem) = f.divrem(&g);
            assert_eq!(&(&quot * &g) + &rem, f);
            if !rem.is_zero() {
                assert!(rem.degree().unwrap() < g.degree().unwrap());
            }
        }
    }

    #[test]
    fn gcd_of_shifted_products() {
        let x = RatPoly::x;
        let lin = |a: i64| RatPoly::from_integers(&[-a, 1]);
        let f = &(&lin(1) * &lin(1)) * &lin(-2); // (x-1)^2 (x+2)
        let g = &lin(1) * &lin(-3); // (x-1)(x+3)
        assert_eq!(f.gcd(&g), lin(1));
        assert_eq!(x().gcd(&RatPoly::zero()), x());
        assert_eq!(RatPoly::zero().gcd(&RatPoly::zero()), RatPoly::zero());
        let coprime = lin(5).gcd(&lin(7));
        assert_eq!(coprime, RatPoly::one());
    }

    #[test]
    fn gcd_common_factor_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..30 {
            let a = random_poly(&mut rng, 3);
            let b = random_poly(&mut rng, 3);
            let c = random_poly(&mut rng, 3);
            if a.is_zero() || b.is_zero() || c.is_zero() {
                continue;
            }
            let g = (&a * &c).gcd(&(&b * &c));
            // c divides the gcd.
            let (_, rem) = g.divrem(&c.monic());
            assert!(rem.is_zero(), "common factor must divide the gcd");
            // And the gcd divides a*c and b*c.
            assert!((&a * &c).divrem(&g).1.is_zero());
            assert!((&b * &c).divrem(&g).1.is_zero());
        }
    }

    #[test]
    fn squarefree_decomposition_reconstructs() {
        let lin = |a: i64| RatPoly::from_integers(&[-a, 1]);
        let p = &(&lin(1) * &(&lin(2) * &lin(2))) * &(&lin(-1) * &(&lin(-1) * &lin(-1)));
        let p = p.scaled(&q(5, 3)); // 5/3 (x-1)(x-2)^2(x+1)^3
        let (lc, parts) = p.squarefree_decomposition();
        assert_eq!(lc, q(5, 3));
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], lin(1));
        assert_eq!(parts[1], lin(2));
        assert_eq!(parts[2], lin(-1));
        let mut rebuilt = RatPoly::constant(lc);
        for (i, part) in parts.iter().enumerate() {
            rebuilt = &rebuilt * &part.pow(i + 1);
        }
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn squarefree_decomposition_random_reconstruction() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..25 {
            let base = random_poly(&mut rng, 2);
            if base.is_zero() || base.is_constant() {
                continue;
            }
            let e = rng.gen_range(1..=3);
            let p = base.pow(e).scaled(&q(rng.gen_range(1..=5), 1));
            let (lc, parts) = p.squarefree_decomposition();
            let mut rebuilt = RatPoly::constant(lc);
            for (i, part) in parts.iter().enumerate() {
                rebuilt = &rebuilt * &part.pow(i + 1);
            }
            assert_eq!(rebuilt, p);
        }
    }

    #[test]
    fn primitive_integer_form() {
        let p = RatPoly::new(vec![q(1, 2), q(-3, 4), q(1, 1)]);
        let ints = p.primitive_integer_coeffs();
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(4)]);
        let negated = p.scaled(&q(-2, 7));
        assert_eq!(negated.primitive_integer_coeffs(), ints);
    }

    #[test]
    fn display_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let p = random_poly(&mut rng, 5);
            let shown = p.to_string();
            let reparsed = parse_poly(&shown).unwrap_or_else(|e| {
                panic!("failed to reparse {shown:?}: {e}");
            });
            assert_eq!(reparsed, p, "display {shown:?}");
        }
        assert_eq!(RatPoly::zero().to_string(), "0");
        assert_eq!(RatPoly::from_integers(&[2, -3, 0, 1]).to_string(), "x^3 - 3*x + 2");
        assert_eq!(RatPoly::new(vec![q(-1, 2), q(1, 3)]).to_string(), "1/3*x - 1/2");
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let p = RatPoly::from_integers(&[1, 2, 1]);
        let mut manual = RatPoly::one();
        for k in 0..5 {
            assert_eq!(p.pow(k), manual);
            manual = &manual * &p;
        }
    }
}
