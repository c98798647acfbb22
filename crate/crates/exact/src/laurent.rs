//! Laurent polynomials in one variable q with coefficients in Q(zeta_M).
//!
//! Invariant: either `coeffs` is empty (the zero polynomial, with `low` = 0)
//! or both the first and last entries of `coeffs` are nonzero; the
//! polynomial is sum of coeffs[i] * q^(low + i).

use crate::cyclo::{CycloField, CycloNumber, Rat};
use num_traits::Zero;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    field: CycloField,
    low: i64,
    coeffs: Vec<CycloNumber>,
}

impl LaurentPoly {
    pub fn zero(field: &CycloField) -> LaurentPoly {
        LaurentPoly {
            field: field.clone(),
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: CycloNumber) -> LaurentPoly {
        let field = c.field().clone();
        if c.is_zero() {
            LaurentPoly::zero(&field)
        } else {
            LaurentPoly {
                field,
                low: 0,
                coeffs: vec![c],
            }
        }
    }

    pub fn one(field: &CycloField) -> LaurentPoly {
        LaurentPoly::constant(field.one())
    }

    /// The monomial c * q^k.
    pub fn monomial(c: CycloNumber, k: i64) -> LaurentPoly {
        let mut p = LaurentPoly::constant(c);
        p.low = if p.coeffs.is_empty() { 0 } else { k };
        p
    }

    pub fn from_terms(field: &CycloField, terms: &[(i64, CycloNumber)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero(field);
        for (k, c) in terms {
            p = p.add(&LaurentPoly::monomial(c.clone(), *k));
        }
        p
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient; zero polynomial reports 0.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with nonzero coefficient; zero polynomial reports 0.
    pub fn high(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.low + self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeff(&self, k: i64) -> CycloNumber {
        if k < self.low || k > self.high() || self.coeffs.is_empty() {
            self.field.zero()
        } else {
            self.coeffs[(k - self.low) as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &CycloNumber)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn leading_coeff(&self) -> CycloNumber {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    fn normalized(field: &CycloField, mut low: i64, mut coeffs: Vec<CycloNumber>) -> LaurentPoly {
        while coeffs.last().is_some_and(CycloNumber::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            coeffs.drain(..lead_zeros);
            low += lead_zeros as i64;
        }
        if coeffs.is_empty() {
            low = 0;
        }
        LaurentPoly {
            field: field.clone(),
            low,
            coeffs,
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let mut coeffs = vec![self.field.zero(); (high - low + 1) as usize];
        for (k, c) in self.terms() {
            coeffs[(k - low) as usize] = coeffs[(k - low) as usize].add(c);
        }
        for (k, c) in other.terms() {
            coeffs[(k - low) as usize] = coeffs[(k - low) as usize].add(c);
        }
        LaurentPoly::normalized(&self.field, low, coeffs)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            field: self.field.clone(),
            low: self.low,
            coeffs: self.coeffs.iter().map(CycloNumber::neg).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero(&self.field);
        }
        let low = self.low + other.low;
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        LaurentPoly::normalized(&self.field, low, coeffs)
    }

    pub fn scale(&self, c: &CycloNumber) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(&self.field);
        }
        LaurentPoly {
            field: self.field.clone(),
            low: self.low,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            field: self.field.clone(),
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Substitutes q -> -q^{-1}; exponents flip sign and pick up parity signs.
    pub fn subst_neg_inv(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let terms: Vec<(i64, CycloNumber)> = self
            .terms()
            .map(|(k, c)| {
                let c = if k.rem_euclid(2) == 1 { c.neg() } else { c.clone() };
                (-k, c)
            })
            .collect();
        LaurentPoly::from_terms(&self.field, &terms)
    }

    /// Evaluates at a field element; the point must be invertible when
    /// negative exponents occur (roots of unity always are).
    pub fn eval(&self, point: &CycloNumber) -> CycloNumber {
        if self.is_zero() {
            return self.field.zero();
        }
        // Horner on the polynomial part, then divide by point^{-low} if needed.
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(point).add(c);
        }
        if self.low == 0 {
            acc
        } else if self.low > 0 {
            acc.mul(&point.pow(self.low as u64))
        } else {
            acc.mul(&point.inv().pow((-self.low) as u64))
        }
    }

    /// Quotient and remainder as ordinary polynomials; both inputs must have
    /// nonnegative lowest exponent and the divisor must be nonzero.
    pub fn divmod_poly(&self, den: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(!den.is_zero(), "polynomial division by zero");
        assert!(self.low >= 0 && den.low >= 0, "divmod needs polynomials");
        let mut rem: Vec<CycloNumber> = vec![self.field.zero(); (self.high() + 1).max(0) as usize];
        for (k, c) in self.terms() {
            rem[k as usize] = c.clone();
        }
        let dd = den.high() as usize;
        let lead = den.coeff(den.high());
        let lead_inv = lead.inv();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(dd)];
        if rem.len() > dd {
            for k in (dd..rem.len()).rev() {
                let c = rem[k].mul(&lead_inv);
                if !c.is_zero() {
                    for j in 0..=dd {
                        let d = den.coeff(j as i64);
                        if !d.is_zero() {
                            rem[k - dd + j] = rem[k - dd + j].sub(&c.mul(&d));
                        }
                    }
                }
                quot[k - dd] = c;
            }
        }
        (
            LaurentPoly::normalized(&self.field, 0, quot),
            LaurentPoly::normalized(&self.field, 0, rem),
        )
    }

    /// Monic gcd of two ordinary polynomials (nonnegative exponents).
    pub fn gcd_poly(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod_poly(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.coeff(a.high());
            a.scale(&lead.inv())
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let (sign, body) = match c.as_rat() {
                Some(r) if r < Rat::zero() => ("-", format!("{}", c.neg())),
                _ => ("+", format!("{}", c)),
            };
            let body_unit = body == "1";
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let needs_parens = body.contains(' ');
            let qpow = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{}", k),
            };
            match (body_unit && k != 0, qpow.is_empty()) {
                (true, false) => write!(f, "{}", qpow)?,
                (_, true) => {
                    if needs_parens {
                        write!(f, "({})", body)?
                    } else {
                        write!(f, "{}", body)?
                    }
                }
                (false, false) => {
                    if needs_parens {
                        write!(f, "({})*{}", body, qpow)?
                    } else {
                        write!(f, "{}*{}", body, qpow)?
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;

    fn field() -> CycloField {
        CycloField::new(4)
    }

    fn q(f: &CycloField) -> LaurentPoly {
        LaurentPoly::monomial(f.one(), 1)
    }

    #[test]
    fn normalization_strips_zero_fringe() {
        let f = field();
        let p = LaurentPoly::from_terms(
            &f,
            &[(2, f.one()), (5, f.zero()), (-1, f.from_int(3))],
        );
        assert_eq!(p.low(), -1);
        assert_eq!(p.high(), 2);
        let z = p.sub(&p);
        assert!(z.is_zero());
        assert_eq!(z.low(), 0);
    }

    #[test]
    fn product_of_binomials() {
        let f = field();
        let q = q(&f);
        let a = q.sub(&LaurentPoly::one(&f)); // q - 1
        let b = q.add(&LaurentPoly::one(&f)); // q + 1
        let prod = a.mul(&b);
        let q2 = q.mul(&q);
        assert_eq!(prod, q2.sub(&LaurentPoly::one(&f)));
    }

    #[test]
    fn subst_neg_inv_is_an_involution() {
        let f = field();
        let p = LaurentPoly::from_terms(
            &f,
            &[(-2, f.from_int(2)), (1, f.zeta()), (3, f.from_int(-1))],
        );
        assert_eq!(p.subst_neg_inv().subst_neg_inv(), p);
        // q - q^{-1} is fixed by q -> -q^{-1}.
        let fix = LaurentPoly::from_terms(&f, &[(1, f.one()), (-1, f.from_int(-1))]);
        assert_eq!(fix.subst_neg_inv(), fix);
    }

    #[test]
    fn divmod_and_gcd() {
        let f = field();
        let q = q(&f);
        let one = LaurentPoly::one(&f);
        let a = q.mul(&q).sub(&one); // q^2 - 1
        let b = q.sub(&one); // q - 1
        let (quot, rem) = a.divmod_poly(&b);
        assert!(rem.is_zero());
        assert_eq!(quot, q.add(&one));
        assert_eq!(a.gcd_poly(&b), b);
        let c = q.add(&one).scale(&f.from_rat(rat(7)));
        assert_eq!(a.gcd_poly(&c), q.add(&one), "gcd is monic");
    }

    #[test]
    fn eval_with_negative_exponents() {
        let f = field();
        let i = f.zeta();
        let p = LaurentPoly::from_terms(&f, &[(-1, f.one()), (1, f.one())]); // q + q^{-1}
        assert!(p.eval(&i).is_zero(), "i + 1/i = 0");
    }
}
