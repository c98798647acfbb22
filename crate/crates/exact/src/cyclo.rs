//! The cyclotomic field Q(zeta_M), realised as Q[x] modulo the M-th
//! cyclotomic polynomial.
//!
//! A [`CycloField`] is a cheaply clonable handle fixing the ambient order M;
//! every [`CycloNumber`] carries such a handle and numbers from different
//! fields must never be mixed (doing so is a bug and panics).
//!
//! Invariant: the coefficient vector of a `CycloNumber` has length at most
//! deg Phi_M and carries no trailing zeros; the zero element is the empty
//! vector.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

/// Rational numbers of arbitrary precision, the coefficient domain for
/// everything in this crate.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug)]
struct FieldInner {
    order: u64,
    /// Monic coefficients of Phi_M, constant term first, length degree + 1.
    modulus: Vec<Rat>,
    /// Row k holds the reduction of x^{degree + k} modulo Phi_M.
    reduction: Vec<Vec<Rat>>,
}

/// Handle to Q(zeta_M) for a fixed ambient order M.
#[derive(Clone, Debug)]
pub struct CycloField(Arc<FieldInner>);

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.0.order == other.0.order
    }
}
impl Eq for CycloField {}

/// Multiplies two dense rational polynomials (constant term first).
fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Exact division of dense rational polynomials; panics if not divisible.
fn poly_div_exact(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let mut rem: Vec<Rat> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den.last().expect("nonzero divisor");
    assert!(!lead.is_zero());
    if rem.len() < den.len() {
        assert!(rem.iter().all(Rat::is_zero), "inexact polynomial division");
        return Vec::new();
    }
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = &rem[k] / lead;
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                let t = &c * dj;
                rem[k - dd + j] -= t;
            }
        }
        quot[k - dd] = c;
    }
    assert!(rem.iter().all(Rat::is_zero), "inexact polynomial division");
    quot
}

/// Coefficients of the M-th cyclotomic polynomial, constant term first.
fn cyclotomic_poly(m: u64) -> Vec<Rat> {
    // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    let mut num = vec![Rat::zero(); m as usize + 1];
    num[0] = -Rat::one();
    num[m as usize] = Rat::one();
    let mut den = vec![Rat::one()];
    for d in 1..m {
        if m % d == 0 {
            den = poly_mul(&den, &cyclotomic_poly(d));
        }
    }
    poly_div_exact(&num, &den)
}

impl CycloField {
    /// Builds Q(zeta_M). The order must be positive.
    pub fn new(order: u64) -> CycloField {
        assert!(order >= 1, "cyclotomic order must be positive");
        let modulus = cyclotomic_poly(order);
        let degree = modulus.len() - 1;
        // Seed x^degree = -(lower terms), then extend one power at a time.
        let mut reduction: Vec<Vec<Rat>> = Vec::with_capacity(degree.max(1));
        let base: Vec<Rat> = modulus[..degree].iter().map(|c| -c).collect();
        reduction.push(base);
        for k in 1..degree {
            let prev = &reduction[k - 1];
            // Multiply the previous row by x and fold the overflow back in.
            let mut row = vec![Rat::zero(); degree];
            let carry = prev[degree - 1].clone();
            for i in 1..degree {
                row[i] = prev[i - 1].clone();
            }
            if !carry.is_zero() {
                for (i, c) in reduction[0].iter().enumerate() {
                    row[i] += &carry * c;
                }
            }
            reduction.push(row);
        }
        CycloField(Arc::new(FieldInner {
            order,
            modulus,
            reduction,
        }))
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Degree of the extension, deg Phi_M = phi(M).
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    pub fn zero(&self) -> CycloNumber {
        CycloNumber {
            field: self.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(&self) -> CycloNumber {
        self.from_rat(Rat::one())
    }

    pub fn from_rat(&self, c: Rat) -> CycloNumber {
        let coeffs = if c.is_zero() { Vec::new() } else { vec![c] };
        CycloNumber {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn from_int(&self, c: i64) -> CycloNumber {
        self.from_rat(rat(c))
    }

    /// The generator zeta_M.
    pub fn zeta(&self) -> CycloNumber {
        self.zeta_pow(1)
    }

    /// zeta_M^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> CycloNumber {
        let m = self.0.order as i64;
        let k = k.rem_euclid(m) as usize;
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = Rat::one();
        self.make(coeffs)
    }

    /// A primitive r-th root of unity, zeta_M^{M/r}; requires r | M.
    pub fn root_of_unity(&self, r: u64) -> CycloNumber {
        assert!(
            r >= 1 && self.0.order % r == 0,
            "order {} admits no primitive {}-th root of unity",
            self.0.order,
            r
        );
        self.zeta_pow((self.0.order / r) as i64)
    }

    /// Reduces an arbitrary coefficient vector into the field.
    fn make(&self, mut coeffs: Vec<Rat>) -> CycloNumber {
        let degree = self.degree();
        if coeffs.len() > degree + self.0.reduction.len() {
            // Too long for the precomputed rows; take a full remainder.
            let (_, rem) = poly_divmod(&coeffs, &self.0.modulus);
            coeffs = rem;
        }
        if coeffs.len() > degree {
            for k in (degree..coeffs.len()).rev() {
                let c = std::mem::replace(&mut coeffs[k], Rat::zero());
                if c.is_zero() {
                    continue;
                }
                for (i, r) in self.0.reduction[k - degree].iter().enumerate() {
                    if !r.is_zero() {
                        coeffs[i] += &c * r;
                    }
                }
            }
            coeffs.truncate(degree);
        }
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        CycloNumber {
            field: self.clone(),
            coeffs,
        }
    }
}

/// An element of Q(zeta_M).
#[derive(Clone, Debug)]
pub struct CycloNumber {
    field: CycloField,
    coeffs: Vec<Rat>,
}

impl CycloNumber {
    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Coefficients over the power basis 1, zeta, ..., zeta^{phi(M)-1};
    /// trailing zeros trimmed.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn from_coeffs(field: &CycloField, coeffs: Vec<Rat>) -> CycloNumber {
        field.make(coeffs)
    }

    /// The rational part if the number is rational, else `None`.
    pub fn as_rat(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn check_field(&self, other: &CycloNumber) {
        assert!(
            self.field == other.field,
            "cyclotomic order mismatch: {} vs {}",
            self.field.order(),
            other.field.order()
        );
    }

    pub fn add(&self, other: &CycloNumber) -> CycloNumber {
        self.check_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        self.field.make(coeffs)
    }

    pub fn sub(&self, other: &CycloNumber) -> CycloNumber {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycloNumber {
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycloNumber) -> CycloNumber {
        self.check_field(other);
        self.field.make(poly_mul(&self.coeffs, &other.coeffs))
    }

    pub fn scale(&self, c: &Rat) -> CycloNumber {
        if c.is_zero() {
            return self.field.zero();
        }
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x];
    /// panics on zero.
    pub fn inv(&self) -> CycloNumber {
        assert!(!self.is_zero(), "division by zero in Q(zeta)");
        // Invariants: r0 = s0 * self mod Phi, r1 = s1 * self mod Phi.
        let mut r0: Vec<Rat> = self.field.0.modulus.clone();
        let mut r1: Vec<Rat> = self.coeffs.clone();
        let mut s0: Vec<Rat> = Vec::new();
        let mut s1: Vec<Rat> = vec![Rat::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let qs1 = poly_mul(&q, &s1);
            let s_next = poly_sub(&s0, &qs1);
            r0 = std::mem::take(&mut r1);
            r1 = r;
            s0 = std::mem::take(&mut s1);
            s1 = s_next;
        }
        // r0 is now a nonzero constant gcd (Phi_M is irreducible over Q).
        assert_eq!(r0.len(), 1, "cyclotomic modulus must be coprime to input");
        let c = r0[0].clone();
        let coeffs = s0.into_iter().map(|a| a / &c).collect();
        self.field.make(coeffs)
    }

    pub fn div(&self, other: &CycloNumber) -> CycloNumber {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: u64) -> CycloNumber {
        let mut acc = self.field.one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    while out.last().is_some_and(Rat::is_zero) {
        out.pop();
    }
    out
}

/// Quotient and remainder of dense rational polynomials, divisor nonzero.
fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut rem = num.to_vec();
    while rem.last().is_some_and(Rat::is_zero) {
        rem.pop();
    }
    let dd = den.len() - 1;
    let lead = den.last().expect("nonzero divisor");
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = &rem[k] / lead;
        quot[k - dd] = c.clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                let t = &c * dj;
                rem[k - dd + j] -= t;
            }
        }
    }
    while rem.last().is_some_and(Rat::is_zero) {
        rem.pop();
    }
    (quot, rem)
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for CycloNumber {}

impl std::hash::Hash for CycloNumber {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        for c in &self.coeffs {
            c.numer().hash(state);
            c.denom().hash(state);
        }
    }
}

impl fmt::Display for CycloNumber {
    /// Writes the element over the power basis with `z` for zeta_M.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
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
            let unit_mag = mag.is_one();
            if !unit_mag || k == 0 {
                write!(f, "{}", mag)?;
            }
            if k > 0 {
                if !unit_mag {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        // Phi_1 = x - 1, Phi_2 = x + 1, Phi_4 = x^2 + 1,
        // Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1.
        assert_eq!(cyclotomic_poly(1), vec![rat(-1), rat(1)]);
        assert_eq!(cyclotomic_poly(2), vec![rat(1), rat(1)]);
        assert_eq!(cyclotomic_poly(4), vec![rat(1), rat(0), rat(1)]);
        assert_eq!(cyclotomic_poly(6), vec![rat(1), rat(-1), rat(1)]);
        assert_eq!(
            cyclotomic_poly(12),
            vec![rat(1), rat(0), rat(-1), rat(0), rat(1)]
        );
    }

    #[test]
    fn zeta_orders() {
        let f = CycloField::new(12);
        let z = f.zeta();
        assert_eq!(z.pow(12), f.one());
        for k in 1..12 {
            assert_ne!(z.pow(k), f.one(), "zeta_12^{} must not be 1", k);
        }
    }

    #[test]
    fn embedded_cube_root_satisfies_quadratic() {
        // zeta_3 = zeta_12^4 obeys z^2 + z + 1 = 0.
        let f = CycloField::new(12);
        let z3 = f.root_of_unity(3);
        let sum = z3.mul(&z3).add(&z3).add(&f.one());
        assert!(sum.is_zero());
    }

    #[test]
    fn inverse_of_zeta_is_power() {
        let f = CycloField::new(12);
        let z = f.zeta();
        assert_eq!(z.inv(), f.zeta_pow(11));
        assert_eq!(z.mul(&z.inv()), f.one());
    }

    #[test]
    fn arithmetic_in_gaussian_field() {
        let f = CycloField::new(4);
        let i = f.zeta();
        assert_eq!(i.mul(&i), f.from_int(-1));
        let a = f.one().add(&i); // 1 + i
        let b = a.mul(&a); // 2i
        assert_eq!(b, i.scale(&rat(2)));
        assert_eq!(a.inv().mul(&a), f.one());
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for r in [2u64, 3, 4, 6, 12] {
            let f = CycloField::new(12);
            let zr = f.root_of_unity(r);
            let mut s = f.zero();
            for k in 0..r {
                s = s.add(&zr.pow(k));
            }
            assert!(s.is_zero(), "sum of all {}-th roots of unity", r);
        }
    }
}
