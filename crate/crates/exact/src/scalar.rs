//! The coefficient domain for all algebra computations: rational functions
//! in q over Q(zeta_M), stored as a normalized ratio of Laurent polynomials.
//!
//! Invariant (canonical form): the denominator is a monic ordinary
//! polynomial with nonzero constant term, coprime to the numerator.  Unit
//! factors (powers of q and field constants) always live in the numerator,
//! so equality is plain structural equality and a scalar is a Laurent
//! polynomial exactly when its denominator is 1.

use crate::cyclo::{CycloField, CycloNumber, Rat};
use crate::laurent::LaurentPoly;
use crate::ExactError;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Scalar {
        assert!(!den.is_zero(), "zero denominator");
        let field = num.field().clone();
        if num.is_zero() {
            return Scalar {
                num,
                den: LaurentPoly::one(&field),
            };
        }
        // Shift both to ordinary polynomials with nonzero constant term,
        // remembering the net power of q moved into the numerator.
        let qshift = num.low() - den.low();
        let num_poly = num.shift(-num.low());
        let den_poly = den.shift(-den.low());
        let g = num_poly.gcd_poly(&den_poly);
        let (num_red, r1) = num_poly.divmod_poly(&g);
        let (den_red, r2) = den_poly.divmod_poly(&g);
        debug_assert!(r1.is_zero() && r2.is_zero());
        let lead = den_red.leading_coeff();
        let lead_inv = lead.inv();
        let num_final = num_red.scale(&lead_inv).shift(qshift);
        let den_final = den_red.scale(&lead_inv);
        // The reduced denominator keeps a nonzero constant term because any
        // q-power factor of the original denominator was shifted away.
        debug_assert_eq!(den_final.low(), 0);
        Scalar {
            num: num_final,
            den: den_final,
        }
    }

    pub fn from_ratio(num: LaurentPoly, den: LaurentPoly) -> Scalar {
        Scalar::normalized(num, den)
    }

    pub fn from_laurent(num: LaurentPoly) -> Scalar {
        let field = num.field().clone();
        Scalar {
            num,
            den: LaurentPoly::one(&field),
        }
    }

    pub fn zero(field: &CycloField) -> Scalar {
        Scalar::from_laurent(LaurentPoly::zero(field))
    }

    pub fn one(field: &CycloField) -> Scalar {
        Scalar::from_laurent(LaurentPoly::one(field))
    }

    pub fn from_cyclo(c: CycloNumber) -> Scalar {
        Scalar::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_rat(field: &CycloField, c: Rat) -> Scalar {
        Scalar::from_cyclo(field.from_rat(c))
    }

    pub fn from_int(field: &CycloField, c: i64) -> Scalar {
        Scalar::from_cyclo(field.from_int(c))
    }

    /// The variable q.
    pub fn q(field: &CycloField) -> Scalar {
        Scalar::q_pow(field, 1)
    }

    /// q^k for any integer k.
    pub fn q_pow(field: &CycloField, k: i64) -> Scalar {
        Scalar::from_laurent(LaurentPoly::monomial(field.one(), k))
    }

    pub fn field(&self) -> &CycloField {
        self.num.field()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Whether the scalar is a Laurent polynomial (trivial denominator).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator viewed as a Laurent polynomial, when the denominator is
    /// trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn as_cyclo(&self) -> Option<CycloNumber> {
        if !self.is_laurent() {
            return None;
        }
        if self.num.is_zero() {
            return Some(self.field().zero());
        }
        (self.num.low() == 0 && self.num.high() == 0).then(|| self.num.coeff(0))
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_laurent() && other.is_laurent() {
            return Scalar::from_laurent(self.num.add(&other.num));
        }
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        Scalar::normalized(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_laurent() && other.is_laurent() {
            return Scalar::from_laurent(self.num.mul(&other.num));
        }
        Scalar::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Scalar::normalized(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn inv(&self) -> Result<Scalar, ExactError> {
        Scalar::one(self.field()).div(self)
    }

    pub fn pow(&self, k: i64) -> Scalar {
        if k < 0 {
            return self
                .inv()
                .expect("negative power of zero scalar")
                .pow(-k);
        }
        let mut acc = Scalar::one(self.field());
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn scale_rat(&self, c: &Rat) -> Scalar {
        self.mul(&Scalar::from_rat(self.field(), c.clone()))
    }

    /// The involution q -> -q^{-1} on coefficients.
    pub fn bar_involution(&self) -> Scalar {
        Scalar::normalized(self.num.subst_neg_inv(), self.den.subst_neg_inv())
    }

    /// Evaluates at q = point.  Fails with a pole exactly when the
    /// denominator vanishes there (the ratio is already in lowest terms).
    pub fn eval(&self, point: &CycloNumber) -> Result<CycloNumber, ExactError> {
        let den = self.den.eval(point);
        if den.is_zero() {
            return Err(ExactError::PoleAtSpecialization);
        }
        Ok(self.num.eval(point).div(&den))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
